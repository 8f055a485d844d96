#include "semiflow/natdec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "semiflow/support.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

bool GreedyDecomposition::exact() const { return is_zero(remainder); }

namespace {

// largest k with rem - k*g >= 0; supp(g) nonempty
Int max_multiple(const IntVec& rem, const Semiflow& g) {
  Int k(-1);
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g[p] == 0) continue;
    Int q = rem[p] / g[p];
    if (k < 0 || q < k) k = q;
  }
  return k;
}

}  // namespace

GreedyDecomposition greedy_decompose(const IntVec& target,
                                     const std::vector<Semiflow>& gens) {
  GreedyDecomposition out;
  out.remainder = target;
  out.coeffs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != target.size())
      throw std::invalid_argument("vector lengths differ");
    if (is_zero(g))
      throw std::invalid_argument("zero vector among generators");
    Int k = max_multiple(out.remainder, g);
    if (k > 0)
      for (std::size_t p = 0; p < g.size(); ++p)
        out.remainder[p] -= k * g[p];
    out.coeffs.push_back(std::move(k));
  }
  return out;
}

namespace {

struct NatSearch {
  const std::vector<const Semiflow*>& gens;  // in search order
  std::vector<Support> cover_from;  // union of supports from position j on
  std::uint64_t nodes = 0;
  std::uint64_t cap;
  std::vector<Int> coeffs;

  bool rec(std::size_t j, IntVec& rem) {
    if (++nodes > cap)
      throw resource_error("decomposition search node cap exceeded");
    if (is_zero(rem)) {
      for (std::size_t k = j; k < gens.size(); ++k) coeffs[k] = 0;
      return true;
    }
    if (j == gens.size()) return false;
    if (!Support::of(rem).subset_of(cover_from[j])) return false;

    const Semiflow& g = *gens[j];
    Int kmax = max_multiple(rem, g);
    if (kmax < 0) kmax = 0;  // zero generator: only the trivial multiple
    for (Int k = kmax; k >= 0; --k) {
      if (k > 0)
        for (std::size_t p = 0; p < g.size(); ++p) rem[p] -= k * g[p];
      if (rec(j + 1, rem)) {
        coeffs[j] = k;
        if (k > 0)
          for (std::size_t p = 0; p < g.size(); ++p) rem[p] += k * g[p];
        return true;
      }
      if (k > 0)
        for (std::size_t p = 0; p < g.size(); ++p) rem[p] += k * g[p];
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Int>> nat_decomposable(
    const IntVec& target, const std::vector<Semiflow>& gens,
    const NatOptions& opts) {
  for (const auto& g : gens)
    if (g.size() != target.size())
      throw std::invalid_argument("vector lengths differ");

  // search order: descending support size, ties lexicographic
  std::vector<int> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ssize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    ssize[i] = Support::of(gens[i]).count();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (ssize[a] != ssize[b]) return ssize[a] > ssize[b];
    return lex_less(gens[a], gens[b]);
  });

  std::vector<const Semiflow*> ordered;
  for (int i : order) ordered.push_back(&gens[i]);

  const int d = static_cast<int>(target.size());
  std::vector<Support> cover_from(gens.size() + 1, Support(d));
  for (int j = static_cast<int>(gens.size()) - 1; j >= 0; --j)
    cover_from[j] = cover_from[j + 1].union_with(Support::of(*ordered[j]));

  NatSearch search{ordered, cover_from, 0, opts.node_cap,
                   std::vector<Int>(gens.size())};
  IntVec rem = target;
  if (!search.rec(0, rem)) return std::nullopt;

  std::vector<Int> out(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    out[order[j]] = search.coeffs[j];
  return out;
}

}  // namespace semiflow
