#include <catch_amalgamated.hpp>

#include <random>

#include "hiicheck/centralizers.hpp"
#include "hiicheck/errors.hpp"
#include "hiicheck/hii.hpp"

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

Integer s_sharp_unramified(const RootDatum& rd) {
  WeylGroup W = WeylGroup::enumerate(rd);
  auto ram = analyze_ramification(rd, W, InertialDatum::trivial());
  return s_sharp_steinberg(rd, W, ram, TorusElement::one(rd.rank())).g.order;
}

}  // namespace

TEST_CASE("connected centralizer subsystem", "[centralizers]") {
  RootDatum a2 = sc("A2");
  REQUIRE(connected_centralizer_subsystem(a2, {{}, {TorusElement::one(2)}}) == all_roots(a2));
  RootDatum sl2 = sc("A1");
  REQUIRE(connected_centralizer_subsystem(sl2, {{tp({Rational(1, 2)})}, {}}).empty());
  RootDatum sp4 = sc("C2");
  InertialDatum S{{{tp({Rational(1, 2), Rational(1, 2)})}, {}}};
  auto c = conductor_function(sp4, S);
  REQUIRE(connected_centralizer_subsystem(sp4, {S.generators(), {}}) == phi_chi(sp4, c).roots);
  // q-power twists never kill a root
  TorusElement t(std::vector<Monomial>{Monomial::q_power(2)});
  REQUIRE(connected_centralizer_subsystem(sl2, {{}, {t}}).empty());
}

TEST_CASE("pi0 of torus subset centralizers", "[centralizers]") {
  RootDatum a2 = sc("A2");
  WeylGroup W2 = WeylGroup::enumerate(a2);
  REQUIRE(pi0_torus_subset_centralizer(a2, W2, {{}, {TorusElement::one(2)}}).order == 1);
  RootDatum sl2 = sc("A1");
  WeylGroup W = WeylGroup::enumerate(sl2);
  auto p = pi0_torus_subset_centralizer(sl2, W, {{tp({Rational(1, 2)})}, {}});
  REQUIRE(p.order == 2);
  REQUIRE(p.weyl_part.size() == 2);
  RootDatum pgl2 = ad("A1");
  WeylGroup Wp = WeylGroup::enumerate(pgl2);
  REQUIRE(pi0_torus_subset_centralizer(pgl2, Wp, {{tp({Rational(1, 4)})}, {}}).order == 1);
  // (1/2) is the central element of the SL2 dual
  REQUIRE(pi0_torus_subset_centralizer(pgl2, Wp, {{tp({Rational(1, 2)})}, {}}).order == 1);
}

TEST_CASE("pi0 of diagonalizable groups", "[centralizers]") {
  auto d = pi0_diagonalizable(ad("A1"), all_roots(ad("A1")));
  REQUIRE(d.order == 2);
  REQUIRE(d.free_rank == 0);
  RootDatum b2 = sc("B2");
  auto e = pi0_diagonalizable(b2, {});
  REQUIRE(e.order == 1);
  REQUIRE(e.free_rank == 2);
  REQUIRE(pi0_diagonalizable(ad("A2"), all_roots(ad("A2"))).order == 3);
  REQUIRE(pi0_diagonalizable(sc("A2"), all_roots(sc("A2"))).order == 1);
  // oracle: index of the coroot lattice = |det| of the coroot rows in full rank
  for (const char* t : {"A3", "B3", "C3", "G2", "B2", "C2"}) {
    for (bool adj : {false, true}) {
      RootDatum rd = adj ? ad(t) : sc(t);
      std::vector<Vec> rows;
      for (size_t a : rd.simple()) rows.push_back(rd.coroot(a));
      long det = std::abs(to_long(IntMatrix::from_rows(rows, rd.rank()).determinant()));
      REQUIRE(pi0_diagonalizable(rd, all_roots(rd)).order == det);
    }
  }
}

TEST_CASE("S sharp for Steinberg parameters", "[centralizers]") {
  REQUIRE(s_sharp_unramified(ad("A1")) == 2);
  REQUIRE(s_sharp_unramified(sc("A1")) == 1);
  REQUIRE(s_sharp_unramified(RootDatum::from_type("GL2", LatticeChoice::sc())) == 2);
  REQUIRE(s_sharp_unramified(RootDatum::from_type("GL3", LatticeChoice::sc())) == 3);
  REQUIRE(s_sharp_unramified(ad("A2")) == 3);
  REQUIRE(s_sharp_unramified(sc("C2")) == 1);
  REQUIRE(s_sharp_unramified(ad("C2")) == 2);

  RootDatum sl2 = sc("A1");
  WeylGroup W = WeylGroup::enumerate(sl2);
  auto ram = analyze_ramification(sl2, W, InertialDatum{{{tp({Rational(1, 2)})}, {}}});
  REQUIRE_THROWS_AS(s_sharp_steinberg(sl2, W, ram, TorusElement::one(1)), NotDiscrete);
}

TEST_CASE("S sharp factorization on random blocks", "[centralizers][property]") {
  std::mt19937_64 rng(5);
  int discrete = 0;
  for (const auto& type : sweep_types(3)) {
    for (bool adj : {false, true}) {
      RootDatum rd = adj ? ad(type.c_str()) : sc(type.c_str());
      WeylGroup W = WeylGroup::enumerate(rd);
      for (int t = 0; t < 12; ++t) {
        InertialDatum S = random_inertial(rd.rank(), rng);
        auto ram = analyze_ramification(rd, W, S);
        auto pi0 = pi0_torus_subset_centralizer(rd, W, {S.generators(), {}});
        REQUIRE(pi0.order == ram.cg.c_chi.size());
        REQUIRE(connected_centralizer_subsystem(rd, {S.generators(), {}}) == ram.phi.roots);
        if (ram.phi.h_datum.semisimple_rank() != rd.semisimple_rank()) continue;
        auto ss = s_sharp_steinberg(rd, W, ram, TorusElement::one(rd.rank()));
        REQUIRE(ss.c_nu == ss.c_chi);
        REQUIRE(ss.g.order == ss.h.order * static_cast<unsigned long>(ss.c_chi));
        ++discrete;
      }
    }
  }
  REQUIRE(discrete > 0);
}
