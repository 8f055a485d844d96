#pragma once

#include <cstddef>
#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

// All minimal semiflows, sorted lexicographically: the unique minimal
// generating set over N. Members form an antichain under the componentwise
// order and every member is canonical.
struct HilbertBasis {
  std::vector<Semiflow> members;

  std::size_t size() const { return members.size(); }
  bool contains(const Semiflow& v) const;  // members are sorted
};

struct HilbertOptions {
  bool parallel = true;
  // Breadth-first frontier cap; exceeding it raises resource_error rather
  // than truncating the search (0 = unlimited).
  std::size_t frontier_cap = 1'000'000;
};

// Completion search over v^T C = 0: the frontier starts at the unit vectors;
// x extends by e_i only when <C^T x, C^T e_i> < 0; x is recorded when
// C^T x = 0; anything dominated by a recorded solution is pruned. Terminates
// with exactly the minimal semiflows.
HilbertBasis minimal_semiflows(const PetriNet& net, const HilbertOptions& opts = {});

// Plain-loop reference; the parallel level expansion is checked against it.
HilbertBasis minimal_semiflows_serial(const PetriNet& net, const HilbertOptions& opts = {});

}  // namespace semiflow
