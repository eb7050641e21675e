#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "hiicheck/errors.hpp"
#include "hiicheck/hii.hpp"
#include "hiicheck/ramification.hpp"
#include "hiicheck/volumes.hpp"

using namespace hii;

namespace {

RootDatum sc(const char* t) { return RootDatum::from_type(t, LatticeChoice::sc()); }
RootDatum ad(const char* t) { return RootDatum::from_type(t, LatticeChoice::ad()); }

TorsionPoint tp(std::initializer_list<Rational> c) { return TorsionPoint(std::vector<Rational>(c)); }

InertialDatum tame(std::vector<TorsionPoint> gens) { return InertialDatum{{std::move(gens), {}}}; }

Scalar qpow(const Rational& q, long k) { return Scalar(pow(q, k)); }

}  // namespace

TEST_CASE("conductor function", "[ramification]") {
  RootDatum sl2 = sc("A1");
  // <omega, alpha^vee> = 1, so alpha^vee(omega/2) = -1
  auto c = conductor_function(sl2, tame({tp({Rational(1, 2)})}));
  REQUIRE(c == ConductorData{1, 1});
  REQUIRE(conductor_function(sl2, InertialDatum::trivial()) == ConductorData{0, 0});
  InertialDatum deep{{{tp({Rational(1, 3)})}, {tp({Rational(1, 3)})}, {}}};
  REQUIRE(conductor_function(sl2, deep) == ConductorData{2, 2});
}

TEST_CASE("invalid inertial data", "[ramification]") {
  RootDatum sl2 = sc("A1");
  InertialDatum not_nested{{{tp({Rational(1, 2)})}, {tp({Rational(1, 3)})}, {}}};
  REQUIRE_THROWS_AS(not_nested.validate(1), InvalidInput);
  InertialDatum no_trivial_end{{{tp({Rational(1, 2)})}}};
  REQUIRE_THROWS_AS(no_trivial_end.validate(1), InvalidInput);
  InertialDatum wrong_rank{{{tp({Rational(1, 2), 0})}, {}}};
  REQUIRE_THROWS_AS(wrong_rank.validate(1), InvalidInput);
}

TEST_CASE("roche f and the displayed rule", "[ramification]") {
  RootDatum sl2 = sc("A1");
  const size_t pos = sl2.is_positive(0) ? 0 : 1, neg = 1 - pos;
  auto at = [&](long cval) {
    ConductorData c{cval, cval};
    auto f = roche_f(sl2, c);
    return std::pair{f[pos], f[neg]};
  };
  REQUIRE(at(1) == std::pair{0L, 1L});
  REQUIRE(at(0) == std::pair{0L, 0L});
  REQUIRE(at(3) == std::pair{1L, 2L});
  REQUIRE(f_divergences(sl2, ConductorData{2, 2}).empty());
  REQUIRE(f_divergences(sl2, ConductorData{3, 3}) == std::vector<size_t>{neg});
  for (long cv = 0; cv < 10; ++cv) {
    auto [a, b] = at(cv);
    REQUIRE(a + b == cv);
  }
}

TEST_CASE("phi_chi", "[ramification]") {
  RootDatum sl2 = sc("A1");
  auto phi = phi_chi(sl2, ConductorData{1, 1});
  REQUIRE(phi.roots.empty());
  REQUIRE(phi.h_datum.rank() == 1);
  REQUIRE(phi.h_datum.num_roots() == 0);

  for (const char* t : {"A2", "B2", "G2", "A1xA1"}) {
    RootDatum rd = ad(t);
    auto full = phi_chi(rd, ConductorData(rd.num_roots(), 0));
    REQUIRE(full.roots.size() == rd.num_roots());
    REQUIRE(full.h_datum == rd);
  }

  // Sp4 with S = <(1/2,1/2)>: oracle evaluates every coroot on the generator
  RootDatum sp4 = sc("C2");
  TorsionPoint g = tp({Rational(1, 2), Rational(1, 2)});
  auto c = conductor_function(sp4, tame({g}));
  auto got = phi_chi(sp4, c);
  std::vector<size_t> expect;
  for (size_t a = 0; a < sp4.num_roots(); ++a) {
    if (dot(sp4.coroot(a), Vec{1, 1}) % 2 == 0) expect.push_back(a);
  }
  REQUIRE(got.roots == expect);

  // a conductor table that does not come from a character
  RootDatum a2 = sc("A2");
  ConductorData bad(a2.num_roots(), 1);
  bad[a2.simple()[0]] = bad[a2.negative_of(a2.simple()[0])] = 0;
  bad[a2.simple()[1]] = bad[a2.negative_of(a2.simple()[1])] = 0;
  REQUIRE_THROWS_AS(phi_chi(a2, bad), NotClosed);
}

TEST_CASE("Weyl stabilizer and C_chi", "[ramification]") {
  RootDatum sl2 = sc("A1");
  WeylGroup W = WeylGroup::enumerate(sl2);
  auto S = tame({tp({Rational(1, 2)})});
  REQUIRE(weyl_stabilizer(W, S).size() == 2);
  REQUIRE(weyl_stabilizer(W, InertialDatum::trivial()).size() == 2);
  auto ram = analyze_ramification(sl2, W, S);
  REQUIRE(ram.cg.c_chi.size() == 2);
  REQUIRE(ram.cg.abelian);

  RootDatum pgl2 = ad("A1");
  WeylGroup Wp = WeylGroup::enumerate(pgl2);
  auto S4 = tame({tp({Rational(1, 4)})});
  REQUIRE(weyl_stabilizer(Wp, S4).size() == 1);
  REQUIRE(analyze_ramification(pgl2, Wp, S4).cg.c_chi.size() == 1);

  for (const char* t : {"A2", "C2", "G2"}) {
    RootDatum rd = sc(t);
    WeylGroup Wt = WeylGroup::enumerate(rd);
    REQUIRE(analyze_ramification(rd, Wt, InertialDatum::trivial()).cg.c_chi.size() == 1);
  }
}

TEST_CASE("artin conductor", "[ramification]") {
  REQUIRE(artin_conductor_ramified(ConductorData{1, 1}) == 4);
  REQUIRE(artin_conductor_ramified(ConductorData{0, 0, 0, 0}) == 0);
  REQUIRE(artin_conductor_ramified(ConductorData{2, 2}) == 6);
}

TEST_CASE("concavity fails on a concrete A2 datum", "[ramification]") {
  RootDatum a2 = sc("A2");
  WeylGroup W = WeylGroup::enumerate(a2);
  auto ram = analyze_ramification(a2, W, tame({tp({Rational(1, 2), Rational(1, 2)})}));
  auto v = concavity_violations(a2, ram.f);
  REQUIRE_FALSE(v.empty());
  for (const auto& x : v) REQUIRE(ram.f[x.alpha] + ram.f[x.beta] < ram.f[x.sum]);
}

TEST_CASE("volumes", "[volumes]") {
  const Rational q(5);
  RootDatum sl2 = sc("A1");
  REQUIRE(vol_iwahori(sl2, q) == qpow(q, -2) * Scalar(q - 1));
  RootDatum t1 = RootDatum::from_type("T1", LatticeChoice::sc());
  REQUIRE(vol_iwahori(t1, q) == qpow(q, -1) * Scalar(q - 1));
  RootDatum sp4 = sc("C2");
  REQUIRE(vol_iwahori(sp4, q) == qpow(q, -6) * Scalar((q - 1) * (q - 1)));

  REQUIRE(index_I_over_J(sl2, ConductorData{1, 1}, q) == Scalar(q));
  REQUIRE(index_I_over_J(sl2, ConductorData{0, 0}, q) == Scalar(1));
  ConductorData long_only(sp4.num_roots(), 0);
  for (size_t a = 0; a < sp4.num_roots(); ++a) {
    const Vec& r = sp4.root(a);
    if (dot(r, sp4.coroot(a)) == 2 && a != sp4.negative_of(a)) {
      // long roots of C2 are those whose coroot is primitive-short
      bool is_long = false;
      for (size_t b = 0; b < sp4.num_roots(); ++b) {
        if (b != a && b != sp4.negative_of(a) && std::abs(dot(sp4.root(b), sp4.coroot(a))) == 1 &&
            std::abs(dot(r, sp4.coroot(b))) == 2)
          is_long = true;
      }
      if (is_long) long_only[a] = 1;
    }
  }
  REQUIRE(index_I_over_J(sp4, long_only, q) == qpow(q, 2));

  WeylGroup W = WeylGroup::enumerate(sl2);
  auto r1 = volume_ratio_and_epsilon(sl2, analyze_ramification(sl2, W, tame({tp({Rational(1, 2)})})), q);
  REQUIRE(r1.ratio == qpow(q, 2));
  REQUIRE(r1.epsilon_ram == qpow(q, 2));
  REQUIRE(r1.vol_J * r1.index_I_over_J == r1.vol_I);
  auto r0 = volume_ratio_and_epsilon(sl2, analyze_ramification(sl2, W, InertialDatum::trivial()), q);
  REQUIRE(r0.ratio == Scalar(1));
  InertialDatum deep{{{tp({Rational(1, 3)})}, {tp({Rational(1, 3)})}, {}}};
  auto r2 = volume_ratio_and_epsilon(sl2, analyze_ramification(sl2, W, deep), q);
  REQUIRE(r2.ratio == qpow(q, 3));
  REQUIRE(r2.epsilon_ram == qpow(q, 3));
}

TEST_CASE("ramification properties on random data", "[ramification][property]") {
  std::mt19937_64 rng(2024);
  const Rational q(11, 3);
  for (const auto& type : sweep_types(3)) {
    for (bool adj : {false, true}) {
      RootDatum rd = RootDatum::from_type(type, adj ? LatticeChoice::ad() : LatticeChoice::sc());
      WeylGroup W = WeylGroup::enumerate(rd);
      const bool connected = center_is_connected(rd);
      for (int t = 0; t < 15; ++t) {
        InertialDatum S = random_inertial(rd.rank(), rng);
        auto ram = analyze_ramification(rd, W, S);
        for (size_t a = 0; a < rd.num_roots(); ++a) {
          REQUIRE(ram.c[a] == ram.c[rd.negative_of(a)]);
          REQUIRE(ram.f[a] + ram.f[rd.negative_of(a)] == ram.c[a]);
        }
        REQUIRE(ram.cg.stabilizer.size() == ram.cg.reflection.size() * ram.cg.c_chi.size());
        REQUIRE(ram.cg.abelian);
        if (connected) REQUIRE(ram.cg.c_chi.size() == 1);
        long ramified = 0;
        for (size_t a : rd.positive_roots()) ramified += ram.c[a] != 0;
        REQUIRE(rd.dimension() - ram.phi.h_datum.dimension() == static_cast<size_t>(2 * ramified));
        auto vol = volume_ratio_and_epsilon(rd, ram, q);
        REQUIRE(vol.ratio == vol.epsilon_ram);
        REQUIRE(vol.vol_J * vol.index_I_over_J == vol.vol_I);
      }
    }
  }
}
