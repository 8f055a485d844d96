#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiflow/types.hpp"

namespace semiflow {

// One greedy pass: scan generators in the given order, take from each the
// largest multiple that fits under the remainder. Order-sensitive by design.
struct GreedyDecomposition {
  std::vector<Int> coeffs;  // parallel to the generator list
  IntVec remainder;         // zero iff the pass fully decomposed the target
  bool exact() const;
};

GreedyDecomposition greedy_decompose(const IntVec& target,
                                     const std::vector<Semiflow>& gens);

struct NatOptions {
  // DFS node budget; exceeding it reports blowup instead of an answer.
  std::uint64_t node_cap = 10'000'000ULL;
};

// Exact decision: coefficients k with target = sum k_i * gens[i] over the
// naturals, or nullopt when none exist. Complete depth-first search; the
// generators are visited by descending support size, ties broken
// lexicographically, and the first witness found is returned (coefficients
// reported in input order).
std::optional<std::vector<Int>> nat_decomposable(
    const IntVec& target, const std::vector<Semiflow>& gens,
    const NatOptions& opts = {});

}  // namespace semiflow
