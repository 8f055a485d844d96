#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "semiflow/classify.hpp"

using namespace semiflow;

TEST_CASE("domain names round-trip") {
  CHECK(parse_domain("nat") == Domain::nat);
  CHECK(parse_domain("qplus") == Domain::qpos);
  CHECK(parse_domain("q") == Domain::q);
  CHECK(domain_name(Domain::nat) == "nat");
  CHECK(domain_name(Domain::qpos) == "qplus");
  CHECK(domain_name(Domain::q) == "q");
  CHECK_THROWS_WITH_AS(parse_domain("foo"), "unknown domain: foo",
                       std::invalid_argument);
}

TEST_CASE("analysis context caches the expensive results") {
  AnalysisContext ctx(fx::net_of(fx::RATIOS));
  CHECK(ctx.fundamental().members.size() == 3);
  CHECK(ctx.hilbert().members.size() == 5);
  CHECK(ctx.rank() == 3);
  // same object on repeated access
  CHECK(&ctx.fundamental() == &ctx.fundamental());
  CHECK(&ctx.hilbert() == &ctx.hilbert());
}

TEST_CASE("per-vector predicates") {
  AnalysisContext ctx(fx::net_of(fx::RATIOS));

  CHECK(is_canonical(fx::ra_extra1));
  CHECK_FALSE(is_canonical(fx::iv({4, 4, 6, 0, 0})));
  CHECK_THROWS_AS(is_canonical(fx::iv({0, 0})), std::invalid_argument);

  CHECK(is_minimal(ctx, fx::ra_extra1));
  CHECK(is_minimal(ctx, fx::ra_gen_a));
  CHECK_FALSE(is_minimal(ctx, fx::iv({4, 4, 6, 0, 0})));
  CHECK_FALSE(is_minimal(ctx, add(fx::ra_gen_a, fx::ra_gen_b)));

  // minimal support is a property of the support alone: scaling keeps it
  CHECK(has_minimal_support(ctx, fx::ra_gen_a));
  CHECK(has_minimal_support(ctx, fx::iv({4, 4, 6, 0, 0})));
  CHECK_FALSE(has_minimal_support(ctx, fx::ra_extra1));

  CHECK_THROWS_WITH_AS(is_minimal(ctx, fx::iv({1, 0, 0, 0, 0})),
                       "not a semiflow: (1,0,0,0,0)",
                       std::invalid_argument);
}

TEST_CASE("exchange verdicts across the three domains") {
  AnalysisContext ctx(fx::net_of(fx::EXCHANGE));
  std::vector<Semiflow> fs{fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4};

  // all four minimal members: the unique minimal generating set over N
  auto nat = classify_generating_set(ctx, fs, Domain::nat);
  CHECK(nat.is_generating);
  CHECK(nat.is_minimal_gs);
  CHECK(nat.is_least_gs);
  CHECK_FALSE(nat.not_generated.has_value());
  CHECK_FALSE(nat.removable.has_value());

  auto qp = classify_generating_set(ctx, fs, Domain::qpos);
  CHECK(qp.is_generating);
  CHECK(qp.is_minimal_gs);

  // rank is only 3: over Q one member is redundant
  auto q = classify_generating_set(ctx, fs, Domain::q);
  CHECK(q.is_generating);
  CHECK_FALSE(q.is_minimal_gs);
  CHECK_FALSE(q.is_least_gs);
  REQUIRE(q.removable.has_value());
  CHECK(*q.removable == 0);

  // dropping any one member leaves a rational basis
  auto q3 = classify_generating_set(ctx, {fx::ex_m2, fx::ex_m3, fx::ex_m4},
                                    Domain::q);
  CHECK(q3.is_generating);
  CHECK(q3.is_minimal_gs);

  // but three members never span the cone: the fourth is out of reach
  auto qp3 = classify_generating_set(ctx, {fx::ex_m2, fx::ex_m3, fx::ex_m4},
                                     Domain::qpos);
  CHECK_FALSE(qp3.is_generating);
  REQUIRE(qp3.not_generated.has_value());
  CHECK(*qp3.not_generated == fx::ex_m1);
}

TEST_CASE("ratios verdicts separate the three domains") {
  AnalysisContext ctx(fx::net_of(fx::RATIOS));
  std::vector<Semiflow> fs{fx::ra_gen_b, fx::ra_gen_a, fx::ra_gen_c};

  // the fundamental set generates over Q+ and Q but not over N
  auto nat = classify_generating_set(ctx, fs, Domain::nat);
  CHECK_FALSE(nat.is_generating);
  REQUIRE(nat.not_generated.has_value());
  CHECK(*nat.not_generated == fx::ra_extra1);  // first gap in lex order

  auto qp = classify_generating_set(ctx, fs, Domain::qpos);
  CHECK(qp.is_generating);
  CHECK(qp.is_minimal_gs);
  CHECK(qp.is_least_gs);

  auto q = classify_generating_set(ctx, fs, Domain::q);
  CHECK(q.is_generating);
  CHECK(q.is_minimal_gs);

  // the full basis of minimal semiflows generates over N,
  // and over Q+ carries two redundant members
  auto hb = ctx.hilbert().members;
  auto nat_hb = classify_generating_set(ctx, hb, Domain::nat);
  CHECK(nat_hb.is_generating);
  CHECK(nat_hb.is_minimal_gs);

  ClassifyOptions paranoid;
  paranoid.paranoid = true;
  auto qp_hb = classify_generating_set(ctx, hb, Domain::qpos, paranoid);
  CHECK(qp_hb.is_generating);
  CHECK_FALSE(qp_hb.is_minimal_gs);
  REQUIRE(qp_hb.removable.has_value());
  CHECK(*qp_hb.removable == 2);  // first member inside the cone of the rest
  CHECK(qp_hb.redundant == std::vector<int>{2, 3});
  CHECK_FALSE(qp_hb.paranoid_disagreement);
}

TEST_CASE("paranoid cross-check agrees on minimal sets") {
  AnalysisContext ctx(fx::net_of(fx::EXCHANGE));
  ClassifyOptions paranoid;
  paranoid.paranoid = true;

  auto nat = classify_generating_set(
      ctx, {fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4}, Domain::nat, paranoid);
  CHECK(nat.is_minimal_gs);
  CHECK(nat.redundant.empty());
  CHECK_FALSE(nat.paranoid_disagreement);

  // over Q every one of the four members is individually droppable
  auto q = classify_generating_set(
      ctx, {fx::ex_m1, fx::ex_m2, fx::ex_m3, fx::ex_m4}, Domain::q, paranoid);
  CHECK(q.redundant == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(q.paranoid_disagreement);
}

TEST_CASE("duplicates are trivially redundant") {
  AnalysisContext ctx(fx::net_of(fx::RATIOS));
  auto rep = classify_generating_set(
      ctx, {fx::ra_gen_a, fx::ra_gen_a, fx::ra_gen_b, fx::ra_gen_c},
      Domain::qpos);
  CHECK(rep.is_generating);
  CHECK_FALSE(rep.is_minimal_gs);
  REQUIRE(rep.removable.has_value());
  CHECK(*rep.removable == 1);  // the second copy
}

TEST_CASE("member validation") {
  AnalysisContext ctx(fx::net_of(fx::EXCHANGE));
  CHECK_THROWS_WITH_AS(
      classify_generating_set(ctx, {fx::iv({1, 0, 0, 0})}, Domain::nat),
      "member 0 is not a semiflow", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      classify_generating_set(ctx, {fx::ex_m1, fx::iv({0, 0, 0, 0})},
                              Domain::q),
      "member 1 is the zero vector", std::invalid_argument);
}

TEST_CASE("empty candidate set") {
  // a net whose only semiflow is zero: everything is vacuously generated
  auto pn = parse_net(std::string("place a\ntrans t in a\n"));
  AnalysisContext ctx(pn.net);
  for (Domain d : {Domain::nat, Domain::qpos, Domain::q}) {
    auto rep = classify_generating_set(ctx, {}, d);
    CHECK(rep.is_generating);
    CHECK(rep.is_minimal_gs);
    CHECK(rep.is_least_gs);
  }
}

TEST_CASE("witness families per support") {
  AnalysisContext ctx(fx::net_of(fx::RATIOS));

  // a minimal support carries exactly one canonical semiflow
  auto single = canonical_witnesses(ctx, support(fx::ra_gen_a), 25);
  CHECK(single == std::vector<Semiflow>{fx::ra_gen_a});

  // a non-minimal support carries as many as requested
  auto many = canonical_witnesses(ctx, support(fx::ra_extra1), 5);
  REQUIRE(many.size() == 5);
  for (const auto& w : many) {
    CHECK(is_semiflow(ctx.net(), w));
    CHECK(is_canonical(w));
    CHECK(support(w) == support(fx::ra_extra1));
  }
  std::sort(many.begin(), many.end(), lex_less);
  CHECK(std::adjacent_find(many.begin(), many.end()) == many.end());

  CHECK(canonical_witnesses(ctx, support(fx::ra_extra1), 1).size() == 1);
  CHECK(canonical_witnesses(ctx, support(fx::ra_extra1), 0).empty());

  // union of two minimal supports is again a semiflow support
  Support both = support(fx::ra_gen_a).union_with(support(fx::ra_gen_b));
  auto pair = canonical_witnesses(ctx, both, 3);
  CHECK(pair.size() == 3);
  for (const auto& w : pair) CHECK(support(w) == both);

  // not a semiflow support: no fundamental member fits inside
  Support p4only(5);
  p4only.add(3);
  CHECK_THROWS_WITH_AS(canonical_witnesses(ctx, p4only, 4),
                       "not a semiflow support", std::invalid_argument);
  Support p1p3 = Support::of(fx::iv({1, 0, 1, 0, 0}));
  CHECK_THROWS_WITH_AS(canonical_witnesses(ctx, p1p3, 4),
                       "not a semiflow support", std::invalid_argument);
}
