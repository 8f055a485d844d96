#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semiflow/types.hpp"

namespace semiflow {

// Weighted place/transition net. Immutable after parsing; every analysis in
// this library is a pure function of the net, so concurrent read-only use is
// safe. Place declaration order defines the coordinate order of all vectors.
struct PetriNet {
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  // Row-major by place: pre[p][t] is the weight of the arc p -> t,
  // post[p][t] the weight of t -> p. All weights are non-negative.
  std::vector<IntVec> pre;
  std::vector<IntVec> post;

  int place_count() const { return static_cast<int>(places.size()); }
  int transition_count() const { return static_cast<int>(transitions.size()); }

  // -1 if the name is not a place.
  int place_index(const std::string& name) const;

  // Row p of the incidence matrix C = Post - Pre, length |T|.
  IntVec incidence_row(int p) const;
};

struct ParsedNet {
  PetriNet net;
  Marking initial;  // tokens per place, declaration order
};

// Line-oriented format, '#' starts a comment:
//   place <id> [<initial-tokens>]
//   trans <id> [in <pid>[:<w>] ...] [out <pid>[:<w>] ...]
// Omitted weights are 1, omitted markings 0. A place repeated in an arc list
// accumulates weight. Throws parse_error with the offending line number.
ParsedNet parse_net(std::istream& in);
ParsedNet parse_net(const std::string& text);

// Canonical form: places first in declaration order (marking only when
// nonzero), then transitions with every arc weight explicit.
// parse_net(render_net(n, m)) reproduces n and m exactly.
std::string render_net(const PetriNet& net, const Marking& initial);

// Indices of the transitions enabled at m, ascending.
std::vector<int> enabled(const PetriNet& net, const Marking& m);

bool is_enabled(const PetriNet& net, const Marking& m, int t);

// m - Pre(.,t) + Post(.,t); throws if t is not enabled at m.
Marking fire(const PetriNet& net, const Marking& m, int t);

}  // namespace semiflow
