#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/types.hpp"

namespace semiflow {

// Conservation constraints induced by semiflows at a marking:
// generators[i] . M == rhs[i] for every reachable M.
struct InvariantSystem {
  std::vector<Semiflow> generators;
  std::vector<Int> rhs;
};

// rhs_i = gens[i] . m0. Throws on dimension mismatch.
InvariantSystem invariant_report(const PetriNet& net, const Marking& m0,
                                 const std::vector<Semiflow>& gens);

// True when the marking satisfies every equation of the system.
bool satisfies(const InvariantSystem& sys, const Marking& m);

// All non-negative integer markings satisfying every equation, in
// lexicographic order. Each place is bounded by min over the generators
// positive there of rhs_i / f_i(p); a place no generator covers makes the
// solution set infinite, reported as an error naming the uncovered places.
std::vector<Marking> consistent_markings(const PetriNet& net,
                                         const InvariantSystem& sys);

struct ReachOptions {
  std::size_t state_cap = 1'000'000;
  // Assert every explored marking against the fundamental-set invariants.
  bool check_invariants = true;
};

struct ReachabilityReport {
  std::vector<Marking> states;          // BFS order from the initial marking
  bool bound_hit = false;               // exploration stopped at state_cap
  std::optional<bool> is_home_state;    // initial marking reachable from all
  std::optional<bool> is_live;          // every transition fireable forever
  std::vector<int> dead_transitions;    // never enabled anywhere explored
  bool invariants_hold = true;          // conservation held on all states
};

// Explores the token game from the initial marking. Verdicts are set only
// when the full reachable set fit under the cap; otherwise nullopt.
ReachabilityReport reach_report(const PetriNet& net, const Marking& initial,
                                const ReachOptions& opts = {});

}  // namespace semiflow
