#include <catch_amalgamated.hpp>

#include "hiicheck/errors.hpp"
#include "hiicheck/hii.hpp"

using namespace hii;

namespace {

RootDatum sc(const char* t) { return RootDatum::from_type(t, LatticeChoice::sc()); }
RootDatum ad(const char* t) { return RootDatum::from_type(t, LatticeChoice::ad()); }

TorsionPoint tp(std::initializer_list<Rational> c) { return TorsionPoint(std::vector<Rational>(c)); }

BlockInput block(RootDatum rd, InertialDatum S = InertialDatum::trivial(), Rational q = 2) {
  BlockInput b;
  b.rd = std::move(rd);
  b.inertial = std::move(S);
  b.q = q;
  return b;
}

// G2 with h = 2 on one simple coroot and 0 on the other: the subregular orbit.
BlockInput g2_subregular() {
  RootDatum g2 = sc("G2");
  for (int which = 0; which < 2; ++which) {
    BlockInput b = block(g2, InertialDatum::trivial(), 3);
    b.steinberg = false;
    Vec labels(2, 0);
    labels[which] = 2;
    // h in X* with <h, alpha_i^vee> = labels_i; sc coordinates are fundamental weights
    b.h = labels;
    BlockContext ctx = BlockContext::build(b);
    if (is_discrete(g2, adjoint_wd(g2, ctx.ram.c, ctx.parameter()))) return b;
  }
  FAIL("no discrete subregular labelling");
  return {};
}

}  // namespace

TEST_CASE("hii right-hand side", "[hii]") {
  auto pgl2 = hii_rhs(block(ad("A1"), InertialDatum::trivial(), 3));
  REQUIRE(pgl2.s_sharp == 2);
  REQUIRE(pgl2.dim_rho == 1);
  REQUIRE(pgl2.rhs_squared == Scalar(Rational(81, 64)));
  REQUIRE(pgl2.rhs_decimal.rfind("1.125", 0) == 0);
  auto sl2 = hii_rhs(block(sc("A1"), InertialDatum::trivial(), 3));
  REQUIRE(sl2.s_sharp == 1);
  REQUIRE(sl2.rhs_squared == Scalar(Rational(81, 16)));

  // GL2: the central strand is removed before evaluating gamma
  auto gl2 = hii_rhs(block(RootDatum::from_type("GL2", LatticeChoice::sc()), InertialDatum::trivial(), 3));
  REQUIRE(gl2.s_sharp == 2);
  REQUIRE(gl2.rhs_squared == pgl2.rhs_squared);

  BlockInput trivial = block(sc("A1"));
  trivial.steinberg = false;
  trivial.h = {0};
  trivial.overrides.dim_rho = 1;
  trivial.overrides.s_sharp = 1;
  REQUIRE_THROWS_AS(hii_rhs(trivial), NotDiscrete);
  REQUIRE_THROWS_AS(hii_rhs(block(sc("A1"), InertialDatum{{{tp({Rational(1, 2)})}, {}}})), NotDiscrete);
}

TEST_CASE("overrides", "[hii]") {
  BlockInput st = block(ad("A1"));
  st.overrides.dim_rho = 2;
  REQUIRE_THROWS_AS(hii_rhs(st), InvalidInput);

  BlockInput b = g2_subregular();
  REQUIRE_THROWS_AS(hii_rhs(b), MissingEnhancement);
  b.overrides.dim_rho = 1;
  b.overrides.s_sharp = 6;
  auto r1 = hii_rhs(b);
  REQUIRE_FALSE(r1.steinberg_type);
  b.overrides.dim_rho = 2;
  auto r2 = hii_rhs(b);
  REQUIRE(r2.rhs_squared == Scalar(4) * r1.rhs_squared);
  b.overrides.s_sharp = 3;
  REQUIRE(hii_rhs(b).rhs_squared == Scalar(16) * r1.rhs_squared);
}

TEST_CASE("theorem chain on curated blocks", "[hii]") {
  for (const char* t : {"A1", "A2", "C2", "G2", "A1xA1"}) {
    for (bool adj : {false, true}) {
      auto rep = theorem_chain_check(block(adj ? ad(t) : sc(t)));
      INFO(t);
      REQUIRE(rep.discrete);
      REQUIRE(rep.ok());
      for (const auto& c : rep.clauses) REQUIRE(c.status == ClauseStatus::Holds);
    }
  }

  auto quad = theorem_chain_check(block(sc("A1"), InertialDatum{{{tp({Rational(1, 2)})}, {}}}));
  REQUIRE(quad.outcome == "no discrete parameters");
  REQUIRE(quad.ok());
  REQUIRE(quad.clauses[2].status == ClauseStatus::Vacuous);

  // Sp4 order-2 block with Phi_chi the short roots
  RootDatum sp4 = sc("C2");
  InertialDatum S{{{tp({0, Rational(1, 2)})}, {}}};
  auto rep = theorem_chain_check(block(sp4, S, 3));
  REQUIRE(rep.discrete);
  for (const auto& c : rep.clauses) {
    INFO(c.name << ": " << c.detail);
    REQUIRE(c.status == ClauseStatus::Holds);
  }
  WeylGroup W = WeylGroup::enumerate(sp4);
  REQUIRE(analyze_ramification(sp4, W, S).cg.c_chi.size() == 2);

  // A1xA1 ramified on one factor only
  auto asym = theorem_chain_check(block(sc("A1xA1"), InertialDatum{{{tp({Rational(1, 2), 0})}, {}}}));
  REQUIRE(asym.ok());
  REQUIRE(asym.clauses[0].status == ClauseStatus::Holds);
  REQUIRE(asym.clauses[1].status == ClauseStatus::Holds);

  BlockInput ns = g2_subregular();
  REQUIRE_THROWS_AS(theorem_chain_check(ns), NotSteinbergType);
}

TEST_CASE("verify suite", "[hii]") {
  VerifyOptions none;
  none.trials = 0;
  auto empty = verify_suite(none);
  REQUIRE(empty.identities.empty());
  REQUIRE(empty.data.empty());

  VerifyOptions o;
  o.max_rank = 2;
  o.trials = 10;
  auto a = verify_suite(o);
  REQUIRE(a.all_identities_pass());
  o.parallel = false;
  auto b = verify_suite(o);
  REQUIRE(a.render() == b.render());
  o.seed = 8;
  REQUIRE(verify_suite(o).render() != b.render());

  o.lattices = {"xx"};
  REQUIRE_THROWS_AS(verify_suite(o), InvalidInput);
}
