#pragma once

#include <cstddef>
#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/support.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

// The unique set of canonical semiflows of minimal support, sorted
// lexicographically by coordinates; supports[i] belongs to members[i].
struct FundamentalSet {
  std::vector<Semiflow> members;
  std::vector<Support> supports;

  std::size_t size() const { return members.size(); }
};

struct FarkasOptions {
  // Run the row-pair combination and pruning kernels with OpenMP. The result
  // is bit-identical to the serial path either way.
  bool parallel = true;
  // Eliminate the column with the fewest sign pairs first instead of
  // left-to-right declaration order. Performance only; same result set.
  bool pair_heuristic = false;
  // Working-matrix cap; exceeding it raises resource_error (0 = unlimited).
  std::size_t max_rows = 1'000'000;
};

// Column elimination on [I | C], C = Post - Pre. After each eliminated
// column every row is gcd-reduced, duplicates are dropped, and any row whose
// candidate support strictly contains another row's is dropped. What remains
// when all columns are eliminated is exactly the fundamental set.
FundamentalSet fundamental_set(const PetriNet& net, const FarkasOptions& opts = {});

// Plain-loop reference; the parallel kernels are checked against it.
FundamentalSet fundamental_set_serial(const PetriNet& net, const FarkasOptions& opts = {});

// Supports of the fundamental set, sorted by ascending index sequence.
std::vector<Support> minimal_supports(const PetriNet& net, const FarkasOptions& opts = {});

}  // namespace semiflow
