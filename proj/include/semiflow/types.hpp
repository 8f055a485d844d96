#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace semiflow {

// All coordinates, weights, and markings are arbitrary-precision integers;
// rationals appear only in the Q / Q+ decomposition routines.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// A semiflow is a non-negative place vector f with f^T Post(.,t) = f^T Pre(.,t)
// for every transition t. The alias keeps the domain vocabulary without
// wrapping every vector; validity is checked at the API boundaries that
// require it (see is_semiflow).
using Semiflow = IntVec;
using Marking = IntVec;

struct parse_error : std::runtime_error {
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Thrown when a configurable resource cap (frontier size, search nodes,
// enumeration box, row count) is exceeded. Never a silent truncation.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const IntVec& v);
std::string to_string(const std::vector<Rat>& v);

}  // namespace semiflow
