#pragma once

#include <cstdint>
#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/support.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

// Brute-force reference results. `clipped` is set when some member has a
// coordinate equal to the enumeration bound; tests must then raise the bound
// instead of trusting a possibly clipped answer.
struct SemiflowList {
  std::vector<Semiflow> members;  // sorted lexicographically
  bool clipped = false;
};

struct SupportList {
  std::vector<Support> supports;  // sorted by ascending index sequence
  bool clipped = false;
};

struct OracleOptions {
  bool parallel = true;
  // Enumeration refuses boxes with more than this many vectors.
  std::uint64_t box_cap = 100'000'000ULL;
};

// All nonzero vectors in {0..bound}^d satisfying the semiflow equations,
// by direct enumeration of the box.
SemiflowList brute_semiflows(const PetriNet& net, unsigned bound,
                             const OracleOptions& opts = {});
SemiflowList brute_semiflows_serial(const PetriNet& net, unsigned bound,
                                    const OracleOptions& opts = {});

// Members of brute_semiflows with no other member componentwise below them.
// Sound: any semiflow dominated by an in-box vector is itself in the box.
SemiflowList brute_minimal_semiflows(const PetriNet& net, unsigned bound,
                                     const OracleOptions& opts = {});

// Minimal elements under inclusion of the supports seen in the box.
SupportList brute_minimal_supports(const PetriNet& net, unsigned bound,
                                   const OracleOptions& opts = {});

}  // namespace semiflow
