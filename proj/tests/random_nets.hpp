#pragma once

// Deterministic random net generator for the property suites.  Everything is
// driven off a single mt19937_64 seed and avoids std::uniform_int_distribution
// so the same seed produces the same net on every platform.

#include <cstdint>
#include <random>
#include <string>

#include "semiflow/net.hpp"
#include "semiflow/types.hpp"

namespace fx {

// up to 6 places, up to 5 transitions, arc weights at most 2
inline semiflow::PetriNet random_net(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = 1 + static_cast<int>(rng() % 6);
  const int nt = 1 + static_cast<int>(rng() % 5);

  semiflow::PetriNet net;
  for (int p = 0; p < d; ++p) net.places.push_back("p" + std::to_string(p + 1));
  for (int t = 0; t < nt; ++t) net.transitions.push_back("t" + std::to_string(t + 1));

  // weight 0 with probability 1/2, weight 1 with 3/8, weight 2 with 1/8
  auto weight = [&rng]() -> long {
    switch (rng() % 8) {
      case 7: return 2;
      case 4:
      case 5:
      case 6: return 1;
      default: return 0;
    }
  };

  net.pre.assign(d, std::vector<semiflow::Int>(nt, semiflow::Int(0)));
  net.post.assign(d, std::vector<semiflow::Int>(nt, semiflow::Int(0)));
  for (int p = 0; p < d; ++p) {
    for (int t = 0; t < nt; ++t) {
      net.pre[p][t] = weight();
      net.post[p][t] = weight();
    }
  }
  return net;
}

// Fisher-Yates with the caller's engine; std::shuffle draws from an
// implementation-defined distribution, this stays reproducible.
template <typename T>
void shuffle_stable(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::size_t j = rng() % i;
    std::swap(xs[i - 1], xs[j]);
  }
}

}  // namespace fx
