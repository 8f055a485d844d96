#pragma once

#include <utility>
#include <vector>

#include "semiflow/net.hpp"
#include "semiflow/support.hpp"
#include "semiflow/types.hpp"

namespace semiflow {

// True iff v^T Post(.,t) = v^T Pre(.,t) for every transition. Throws on a
// length mismatch or a negative entry.
bool is_semiflow(const PetriNet& net, const IntVec& v);

Support support(const IntVec& v);

struct Canonical {
  Semiflow vec;
  Int gcd;
};

// Divides out the gcd of the nonzero coordinates. The zero vector has no
// canonical form and is rejected.
Canonical canonicalize(const Semiflow& v);

// Componentwise partial order; throws on a length mismatch.
bool leq(const IntVec& u, const IntVec& v);

// Small exact-vector helpers shared across the solvers.
Int dot(const IntVec& u, const IntVec& v);
IntVec add(const IntVec& u, const IntVec& v);
IntVec sub(const IntVec& u, const IntVec& v);
IntVec scale(const Int& k, const IntVec& v);
bool is_zero(const IntVec& v);
// Strict lexicographic comparison; the output order everywhere.
bool lex_less(const IntVec& u, const IntVec& v);

}  // namespace semiflow
