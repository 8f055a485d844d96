#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include "fixtures.hpp"
#include "random_nets.hpp"
#include "semiflow/farkas.hpp"
#include "semiflow/hilbert.hpp"
#include "semiflow/vec.hpp"

using namespace semiflow;

namespace {

void check_well_formed(const PetriNet& net, const HilbertBasis& hb) {
  for (std::size_t i = 0; i < hb.members.size(); ++i) {
    CHECK(is_semiflow(net, hb.members[i]));
    CHECK(canonicalize(hb.members[i]).gcd == 1);  // minimal implies canonical
    if (i + 1 < hb.members.size())
      CHECK(lex_less(hb.members[i], hb.members[i + 1]));
    // mutual incomparability: no member sits below another
    for (std::size_t j = 0; j < hb.members.size(); ++j)
      if (i != j) CHECK_FALSE(leq(hb.members[i], hb.members[j]));
  }
}

}  // namespace

TEST_CASE("exchange minimal semiflows coincide with the fundamental set") {
  auto net = fx::net_of(fx::EXCHANGE);
  auto hb = minimal_semiflows(net);
  CHECK(hb.members ==
        std::vector<Semiflow>{fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4});
  check_well_formed(net, hb);
  CHECK(hb.contains(fx::ex_m3));
  CHECK_FALSE(hb.contains(fx::ex_all));
  CHECK_FALSE(hb.contains(scale(Int(2), fx::ex_m1)));
}

TEST_CASE("ratios minimal semiflows strictly extend the fundamental set") {
  auto net = fx::net_of(fx::RATIOS);
  auto hb = minimal_semiflows(net);
  CHECK(hb.members == std::vector<Semiflow>{fx::ra_gen_b, fx::ra_gen_a,
                                            fx::ra_extra1, fx::ra_extra2,
                                            fx::ra_gen_c});
  check_well_formed(net, hb);

  // the two extra members are minimal without having a minimal support
  auto fs = fundamental_set(net);
  CHECK(hb.contains(fx::ra_extra1));
  CHECK(std::find(fs.members.begin(), fs.members.end(), fx::ra_extra1) ==
        fs.members.end());
}

TEST_CASE("fundamental members are always minimal") {
  for (const char* text : {fx::EXCHANGE, fx::RATIOS, fx::PHONE}) {
    auto net = fx::net_of(text);
    auto fs = fundamental_set(net);
    auto hb = minimal_semiflows(net);
    for (const auto& f : fs.members) CHECK(hb.contains(f));
  }
}

TEST_CASE("net without semiflows has an empty basis") {
  auto pn = parse_net(std::string("place a\ntrans t in a\n"));
  CHECK(minimal_semiflows(pn.net).members.empty());
}

TEST_CASE("self-loop place admits exactly its unit vector") {
  auto pn = parse_net(std::string("place a\ntrans t in a out a\n"));
  auto hb = minimal_semiflows(pn.net);
  CHECK(hb.members == std::vector<Semiflow>{fx::iv({1})});
}

TEST_CASE("parallel and serial completion agree exactly") {
  omp_set_num_threads(4);
  auto run_both = [](const PetriNet& net) {
    auto par = minimal_semiflows(net);
    auto ser = minimal_semiflows_serial(net);
    CHECK(par.members == ser.members);
  };
  run_both(fx::net_of(fx::EXCHANGE));
  run_both(fx::net_of(fx::RATIOS));
  run_both(fx::net_of(fx::PHONE));
  for (std::uint64_t seed = 41; seed <= 80; ++seed)
    run_both(fx::random_net(seed));
}

TEST_CASE("frontier cap aborts loudly instead of truncating") {
  auto net = fx::net_of(fx::RATIOS);
  HilbertOptions tight;
  tight.frontier_cap = 1;
  CHECK_THROWS_WITH_AS(minimal_semiflows(net, tight),
                       "frontier cap exceeded during completion search",
                       resource_error);
  HilbertOptions unlimited;
  unlimited.frontier_cap = 0;
  CHECK(minimal_semiflows(net, unlimited).members.size() == 5);
}
