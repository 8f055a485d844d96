#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "semiflow/farkas.hpp"
#include "semiflow/hilbert.hpp"
#include "semiflow/oracle.hpp"
#include "semiflow/vec.hpp"

using namespace semiflow;

TEST_CASE("exchange box at bound 1") {
  auto net = fx::net_of(fx::EXCHANGE);
  auto all = brute_semiflows(net, 1);
  CHECK(all.members == std::vector<Semiflow>{fx::ex_m1, fx::ex_m2, fx::ex_m3,
                                             fx::ex_m4, fx::ex_all});
  CHECK(all.clipped);  // every member touches the bound

  auto mins = brute_minimal_semiflows(net, 1);
  CHECK(mins.members ==
        std::vector<Semiflow>{fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4});

  auto supps = brute_minimal_supports(net, 1);
  CHECK(supps.supports == minimal_supports(net));
}

TEST_CASE("exchange box at bound 2 counts balanced splits") {
  auto net = fx::net_of(fx::EXCHANGE);
  auto all = brute_semiflows(net, 2);
  // nonzero (a,b,c,d) with a+b = c+d and entries <= 2: sum over side totals
  // 0..4 of (ways)^2, minus the zero vector: 1+4+9+4+1-1
  CHECK(all.members.size() == 18);
  CHECK(brute_minimal_semiflows(net, 2).members.size() == 4);
  for (const auto& m : all.members) CHECK(is_semiflow(net, m));
}

TEST_CASE("ratios box reproduces both generator sets") {
  auto net = fx::net_of(fx::RATIOS);
  // largest coordinate across the minimal semiflows is 5, so bound 6 sees all
  auto mins = brute_minimal_semiflows(net, 6);
  CHECK(mins.members == minimal_semiflows(net).members);
  CHECK(brute_minimal_supports(net, 6).supports == minimal_supports(net));
}

TEST_CASE("zero-incidence place admits every multiplicity") {
  auto pn = parse_net(std::string("place a\ntrans t in a out a\n"));
  auto all = brute_semiflows(pn.net, 3);
  CHECK(all.members ==
        std::vector<Semiflow>{fx::iv({1}), fx::iv({2}), fx::iv({3})});
  CHECK(all.clipped);
  CHECK(brute_minimal_semiflows(pn.net, 3).members ==
        std::vector<Semiflow>{fx::iv({1})});
  auto supps = brute_minimal_supports(pn.net, 3);
  REQUIRE(supps.supports.size() == 1);
  CHECK(supps.supports[0].indices() == std::vector<int>{0});
}

TEST_CASE("clipping is reported, never silently wrong") {
  auto net = fx::net_of(fx::RATIOS);
  auto low = brute_semiflows(net, 1);
  CHECK(low.clipped);
  // bound 1 only sees the 0/1 member of the basis
  CHECK(low.members == std::vector<Semiflow>{fx::ra_gen_b});
}

TEST_CASE("box guards") {
  auto net = fx::net_of(fx::PHONE);
  CHECK_THROWS_AS(brute_semiflows(net, 0), std::invalid_argument);
  // 11^9 vectors exceeds the default cap
  CHECK_THROWS_WITH_AS(brute_semiflows(net, 10), "enumeration box too large",
                       resource_error);
  OracleOptions tiny;
  tiny.box_cap = 1;
  CHECK_THROWS_AS(brute_semiflows(fx::net_of(fx::EXCHANGE), 1, tiny),
                  resource_error);
}

TEST_CASE("parallel and serial scans agree exactly") {
  omp_set_num_threads(4);
  auto run_both = [](const PetriNet& net, unsigned bound) {
    auto par = brute_semiflows(net, bound);
    auto ser = brute_semiflows_serial(net, bound);
    CHECK(par.members == ser.members);
    CHECK(par.clipped == ser.clipped);
  };
  run_both(fx::net_of(fx::EXCHANGE), 3);
  run_both(fx::net_of(fx::RATIOS), 4);
  for (std::uint64_t seed = 81; seed <= 110; ++seed)
    run_both(fx::random_net(seed), 3);
}
