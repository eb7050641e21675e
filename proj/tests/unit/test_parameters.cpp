#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "hiicheck/errors.hpp"
#include "hiicheck/hii.hpp"
#include "hiicheck/parameters.hpp"

using namespace hii;

namespace {

RootDatum sc(const char* t) { return RootDatum::from_type(t, LatticeChoice::sc()); }
RootDatum ad(const char* t) { return RootDatum::from_type(t, LatticeChoice::ad()); }

TorsionPoint tp(std::initializer_list<Rational> c) { return TorsionPoint(std::vector<Rational>(c)); }

std::vector<size_t> all_roots(const RootDatum& rd) {
  std::vector<size_t> v(rd.num_roots());
  for (size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

Parameter steinberg(const RootDatum& rd, const Rational& q) {
  return {InertialDatum::trivial(), TorusElement::one(rd.rank()), principal_sl2_cocharacter(rd, all_roots(rd)), q};
}

Strand unit(long m) { return {Monomial::one(), m}; }

// Hand-evaluated Tate recipe for a single unipotent strand of length m.
Rational strand_gamma_oracle(long m, const Rational& q) {
  Rational det = 1;
  for (long j = 1; j <= m; ++j) det *= pow(q, -m + 2 * j);  // |q^{(-m+2j)/2}|^2
  Rational l0 = 1 - pow(q, -m / 2);  // m even
  Rational x1 = 1 - pow(q, -m / 2 - 1);
  return det * (l0 * l0) / (x1 * x1);
}

}  // namespace

TEST_CASE("principal sl2 cocharacter", "[parameters]") {
  RootDatum sl2 = sc("A1");
  Vec h = principal_sl2_cocharacter(sl2, all_roots(sl2));
  for (size_t a : sl2.simple()) REQUIRE(dot(h, sl2.coroot(a)) == 2);
  REQUIRE(principal_sl2_cocharacter(sl2, {}) == Vec{0});
  RootDatum a2 = sc("A2");
  Vec h2 = principal_sl2_cocharacter(a2, all_roots(a2));
  long top = 0;
  for (size_t a : a2.simple()) REQUIRE(dot(h2, a2.coroot(a)) == 2);
  for (size_t a = 0; a < a2.num_roots(); ++a) top = std::max(top, dot(h2, a2.coroot(a)));
  REQUIRE(top == 4);
}

TEST_CASE("string peeling", "[parameters]") {
  Monomial one;
  REQUIRE(string_peel({{one, 2}, {one, 0}, {one, -2}}) == std::vector<Strand>{unit(2)});
  REQUIRE(string_peel({{one, 0}, {one, 0}}) == std::vector<Strand>{unit(0), unit(0)});
  REQUIRE_THROWS_AS(string_peel({{one, 2}}), InconsistentStrings);
  REQUIRE_THROWS_AS(string_peel({{one, 1}, {one, 1}, {one, -1}}), InconsistentStrings);
  Monomial z = Monomial::root_of_unity(Rational(1, 3));
  auto mixed = string_peel({{z, 1}, {one, 0}, {z, -1}});
  REQUIRE(mixed.size() == 2);
}

TEST_CASE("adjoint Weil-Deligne representation", "[parameters]") {
  const Rational q(3);
  RootDatum pgl2 = ad("A1");
  REQUIRE(adjoint_wd(pgl2, steinberg(pgl2, q)).strands == std::vector<Strand>{unit(2)});
  RootDatum sl2 = sc("A1");
  Parameter trivial{InertialDatum::trivial(), TorusElement::one(1), {0}, q};
  REQUIRE(adjoint_wd(sl2, trivial).strands == std::vector<Strand>{unit(0), unit(0), unit(0)});
  RootDatum a2 = sc("A2");
  REQUIRE(adjoint_wd(a2, steinberg(a2, q)).strands == std::vector<Strand>{unit(2), unit(4)});
  // weights {±3, ±3, 0^4} have no partners at ±1
  Parameter odd{InertialDatum::trivial(), TorusElement::one(2), {3, 0}, q};
  REQUIRE_THROWS_AS(adjoint_wd(a2, odd), InconsistentStrings);
}

TEST_CASE("ramified lines", "[parameters]") {
  const Rational q(2);
  RootDatum sl2 = sc("A1");
  Parameter p{InertialDatum{{{tp({Rational(1, 2)})}, {}}}, TorusElement::one(1), {0}, q};
  auto wd = adjoint_wd(sl2, p);
  REQUIRE(wd.ramified.size() == 2);
  REQUIRE(wd.strands == std::vector<Strand>{unit(0)});
  for (const auto& line : wd.ramified) REQUIRE(line.c == 1);
  WDAdjointRep ram_only{wd.ramified, {}, q};
  REQUIRE(l_value(ram_only, 0, false) == Scalar(1));
  REQUIRE(gamma_abs_squared_at_zero(ram_only) == Scalar(pow(q, 4)));
}

TEST_CASE("L values", "[parameters]") {
  WDAdjointRep one{{}, {unit(2)}, Rational(3)};
  REQUIRE(l_value(one, 0, false) == Scalar(Rational(3, 2)));
  WDAdjointRep flat{{}, {unit(0)}, Rational(3)};
  REQUIRE_THROWS_AS(l_value(flat, 0, false), PoleFlag);
  REQUIRE_THROWS_AS(l_value(one, Rational(1, 3), false), InvalidInput);

  // adjoint L of the PGL2 Steinberg parameter is zeta(s+1)
  RootDatum pgl2 = ad("A1");
  for (long q : {2, 3, 5, 7}) {
    auto wd = adjoint_wd(pgl2, steinberg(pgl2, q));
    for (long twice_s = 0; twice_s <= 6; ++twice_s) {
      Rational s(twice_s, 2);
      Scalar expected = (Scalar(1) - Scalar::q_half_power(q, -twice_s - 2)).inverse();
      REQUIRE(l_value(wd, s, false) == expected);
    }
  }
}

TEST_CASE("gamma at zero", "[parameters]") {
  RootDatum pgl2 = ad("A1");
  REQUIRE(gamma_abs_squared_at_zero(adjoint_wd(pgl2, steinberg(pgl2, 2))) == Scalar(Rational(16, 9)));
  for (long q : {2, 3, 5}) {
    Rational g(q * q, q + 1);
    REQUIRE(gamma_abs_squared_at_zero(adjoint_wd(pgl2, steinberg(pgl2, q))) == Scalar(g * g));
  }
  RootDatum sl2 = sc("A1");
  Parameter trivial{InertialDatum::trivial(), TorusElement::one(1), {0}, 2};
  REQUIRE_THROWS_AS(gamma_abs_squared_at_zero(adjoint_wd(sl2, trivial)), PoleFlag);
}

TEST_CASE("discreteness", "[parameters]") {
  const Rational q(2);
  RootDatum pgl2 = ad("A1");
  REQUIRE(is_discrete(pgl2, adjoint_wd(pgl2, steinberg(pgl2, q))));
  RootDatum sl2 = sc("A1");
  Parameter trivial{InertialDatum::trivial(), TorusElement::one(1), {0}, q};
  REQUIRE_FALSE(is_discrete(sl2, adjoint_wd(sl2, trivial)));
  RootDatum gl2 = RootDatum::from_type("GL2", LatticeChoice::sc());
  auto wd = adjoint_wd(gl2, steinberg(gl2, q));
  REQUIRE(is_discrete(gl2, wd));
  REQUIRE(std::count(wd.strands.begin(), wd.strands.end(), unit(0)) == 1);
}

TEST_CASE("Steinberg strands are the exponents", "[parameters][property]") {
  const std::map<std::string, std::vector<long>> exponents = {
      {"A1", {1}}, {"A2", {1, 2}}, {"B2", {1, 3}}, {"C2", {1, 3}}, {"G2", {1, 5}}, {"A3", {1, 2, 3}}, {"B3", {1, 3, 5}}};
  for (const auto& [type, ex] : exponents) {
    for (bool adj : {false, true}) {
      RootDatum rd = adj ? ad(type.c_str()) : sc(type.c_str());
      auto wd = adjoint_wd(rd, steinberg(rd, 5));
      std::vector<long> got;
      for (const auto& s : wd.strands) {
        REQUIRE(s.mu.is_one());
        REQUIRE(s.m % 2 == 0);
        got.push_back(s.m / 2);
      }
      REQUIRE(got == ex);
      Rational oracle = 1;
      for (long e : ex) oracle *= strand_gamma_oracle(2 * e, 5);
      REQUIRE(gamma_abs_squared_at_zero(wd) == Scalar(oracle));
    }
  }
}

TEST_CASE("gamma additivity and bookkeeping on random Steinberg-type parameters", "[parameters][property]") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (const auto& type : sweep_types(3)) {
    for (bool adj : {false, true}) {
      RootDatum rd = adj ? ad(type.c_str()) : sc(type.c_str());
      for (int t = 0; t < 10; ++t) {
        BlockInput b;
        b.rd = rd;
        b.inertial = random_inertial(rd.rank(), rng);
        b.q = Rational(13, 2);
        BlockContext ctx = BlockContext::build(b);
        auto wd = adjoint_wd(rd, ctx.ram.c, ctx.parameter());
        size_t dim = wd.ramified.size();
        for (const auto& s : wd.strands) dim += static_cast<size_t>(s.m + 1);
        REQUIRE(dim == rd.dimension());
        std::vector<Weight> weights;
        for (size_t a = 0; a < rd.num_roots(); ++a) {
          if (ctx.ram.c[a] == 0) weights.push_back({ctx.s.evaluate(rd.coroot(a)), dot(ctx.h, rd.coroot(a))});
        }
        for (size_t i = 0; i < rd.rank(); ++i) weights.push_back({Monomial::one(), 0});
        std::sort(weights.begin(), weights.end());
        REQUIRE(strand_weights(wd.strands) == weights);
        if (!is_discrete(rd, wd)) continue;
        auto total = gamma_abs_squared_at_zero(wd);
        REQUIRE(total == gamma_ramified_abs_squared(wd) * gamma_unramified_abs_squared(wd));
        REQUIRE(gamma_ramified_abs_squared(wd) == Scalar(pow(b.q, ctx.ram.artin)));
        ++checked;
      }
    }
  }
  REQUIRE(checked > 10);
}
