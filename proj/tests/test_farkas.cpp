#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "semiflow/farkas.hpp"
#include "semiflow/vec.hpp"

using namespace semiflow;

namespace {

// every member canonical, members lex-sorted, supports an antichain
void check_well_formed(const PetriNet& net, const FundamentalSet& fs) {
  REQUIRE(fs.members.size() == fs.supports.size());
  for (std::size_t i = 0; i < fs.members.size(); ++i) {
    CHECK(is_semiflow(net, fs.members[i]));
    CHECK(canonicalize(fs.members[i]).gcd == 1);
    CHECK(support(fs.members[i]) == fs.supports[i]);
    if (i + 1 < fs.members.size())
      CHECK(lex_less(fs.members[i], fs.members[i + 1]));
    for (std::size_t j = 0; j < fs.members.size(); ++j)
      if (i != j) CHECK_FALSE(fs.supports[i].subset_of(fs.supports[j]));
  }
}

}  // namespace

TEST_CASE("exchange fundamental set") {
  auto net = fx::net_of(fx::EXCHANGE);
  auto fs = fundamental_set(net);
  CHECK(fs.members ==
        std::vector<Semiflow>{fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4});
  check_well_formed(net, fs);
}

TEST_CASE("ratios fundamental set") {
  auto net = fx::net_of(fx::RATIOS);
  auto fs = fundamental_set(net);
  CHECK(fs.members ==
        std::vector<Semiflow>{fx::ra_gen_b, fx::ra_gen_a, fx::ra_gen_c});
  check_well_formed(net, fs);
}

TEST_CASE("phone fundamental set") {
  auto net = fx::net_of(fx::PHONE);
  auto fs = fundamental_set(net);
  CHECK(fs.members ==
        std::vector<Semiflow>{fx::ph_inv2, fx::ph_inv1, fx::ph_inv3});
  check_well_formed(net, fs);
}

TEST_CASE("net without semiflows yields an empty set") {
  auto pn = parse_net(std::string("place a\ntrans t in a\n"));
  auto fs = fundamental_set(pn.net);
  CHECK(fs.members.empty());
  CHECK(fs.supports.empty());
  CHECK(minimal_supports(pn.net).empty());
}

TEST_CASE("minimal_supports matches the fundamental set") {
  for (const char* text : {fx::EXCHANGE, fx::RATIOS, fx::PHONE}) {
    auto net = fx::net_of(text);
    auto expected = fundamental_set(net).supports;
    std::sort(expected.begin(), expected.end());
    CHECK(minimal_supports(net) == expected);
  }
}

TEST_CASE("parallel, serial and heuristic column order agree exactly") {
  omp_set_num_threads(4);
  auto run_all = [](const PetriNet& net) {
    auto par = fundamental_set(net);
    auto ser = fundamental_set_serial(net);
    CHECK(par.members == ser.members);
    CHECK(par.supports == ser.supports);
    FarkasOptions heur;
    heur.pair_heuristic = true;
    auto h = fundamental_set(net, heur);
    CHECK(h.members == ser.members);
  };

  run_all(fx::net_of(fx::EXCHANGE));
  run_all(fx::net_of(fx::RATIOS));
  run_all(fx::net_of(fx::PHONE));
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    run_all(fx::random_net(seed));
}

TEST_CASE("row cap aborts loudly instead of truncating") {
  auto net = fx::net_of(fx::RATIOS);
  FarkasOptions tight;
  tight.max_rows = 1;
  CHECK_THROWS_WITH_AS(fundamental_set(net, tight),
                       "tableau row cap exceeded during elimination",
                       resource_error);
  FarkasOptions unlimited;
  unlimited.max_rows = 0;
  CHECK(fundamental_set(net, unlimited).members.size() == 3);
}
