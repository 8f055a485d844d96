#pragma once

// Shared fixture nets and hand-checked vectors used across the test suites.
// The nets mirror the files under nets/ but are embedded so the tests do not
// depend on the working directory.

#include <initializer_list>
#include <sstream>
#include <string>

#include "semiflow/net.hpp"
#include "semiflow/types.hpp"

namespace fx {

using semiflow::Int;
using semiflow::IntVec;

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Four places exchanged pairwise by a single synchronizing transition.
// Every canonical semiflow picks one place from {p1,p2} and one from {p3,p4}.
inline const char* EXCHANGE = R"(# pairwise exchange
place p1
place p2
place p3 1
place p4 1
trans t in p3 p4 out p1 p2
)";

// fundamental set of EXCHANGE, lex order
inline const IntVec ex_m1 = iv({0, 1, 0, 1});
inline const IntVec ex_m2 = iv({0, 1, 1, 0});
inline const IntVec ex_m3 = iv({1, 0, 0, 1});
inline const IntVec ex_m4 = iv({1, 0, 1, 0});
// sum of one pair = sum of the other; decomposes two ways
inline const IntVec ex_all = iv({1, 1, 1, 1});

// Five places: t1 ties p1 and p2 one-for-one, t2 balances 3 p1 against
// 2 p3 + 3 p4 + 5 p5.  Three minimal supports, five minimal semiflows.
inline const char* RATIOS = R"(# weighted balance
place p1
place p2
place p3
place p4
place p5
trans t1 in p1 out p2
trans t2 in p3:2 p4:3 p5:5 out p1:3
)";

// fundamental set of RATIOS (canonical members of the minimal supports)
inline const IntVec ra_gen_a = iv({2, 2, 3, 0, 0});  // support {p1,p2,p3}
inline const IntVec ra_gen_b = iv({1, 1, 0, 1, 0});  // support {p1,p2,p4}
inline const IntVec ra_gen_c = iv({5, 5, 0, 0, 3});  // support {p1,p2,p5}
// minimal semiflows whose support strictly contains a minimal support;
// they are rational combinations of gen_a and gen_c but not natural ones
inline const IntVec ra_extra1 = iv({3, 3, 2, 0, 1});
inline const IntVec ra_extra2 = iv({4, 4, 1, 0, 2});

// Two-party call protocol: nine places, nine transitions, strongly
// connected reachability graph from the listed marking.
inline const char* PHONE = R"(# two-party call protocol
place LA 1
place CLA
place W
place PU
place S
place F
place CA
place R
place A 1
trans t1 in LA out PU
trans t2 in S out CLA
trans t3 in CLA F out LA R
trans t4 in CLA out W R
trans t5 in S out W R
trans t6 in W F out LA
trans t7 in PU A out CA S
trans t8 in CA out F
trans t9 in R out A
)";

// place order: LA CLA W PU S F CA R A
inline const IntVec ph_inv1 = iv({1, 0, 0, 1, 0, 1, 1, 0, 0});  // {LA,PU,F,CA}
inline const IntVec ph_inv2 = iv({0, 1, 0, 0, 1, 0, 0, 1, 1});  // {CLA,S,R,A}
inline const IntVec ph_inv3 = iv({1, 1, 1, 1, 1, 0, 0, 0, 0});  // {LA,CLA,W,PU,S}

inline semiflow::ParsedNet parsed(const char* text) {
  return semiflow::parse_net(std::string(text));
}

inline semiflow::PetriNet net_of(const char* text) {
  return parsed(text).net;
}

}  // namespace fx
