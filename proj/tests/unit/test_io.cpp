#include <catch_amalgamated.hpp>

#include "hiicheck/errors.hpp"
#include "hiicheck/io.hpp"

using namespace hii;
using hii::io::json;

TEST_CASE("datum specs", "[io]") {
  auto b2 = io::datum_from_json(json::parse(R"({"type": "B2", "lattice": "ad"})"));
  REQUIRE(b2 == RootDatum::from_type("B2", LatticeChoice::ad()));
  auto a3 = io::datum_from_json(json::parse(R"({"type": "A3", "lattice": {"basis": [[1,0,1],[0,1,0],[0,0,2]]}})"));
  REQUIRE(a3.num_roots() == 12);
  auto gl2 = io::datum_from_json(json::parse(R"({"rank": 2, "roots": [[1,-1],[-1,1]], "coroots": [[1,-1],[-1,1]]})"));
  REQUIRE(gl2.semisimple_rank() == 1);
  auto t2 = io::datum_from_json(json::parse(R"({"rank": 2, "roots": [], "coroots": []})"));
  REQUIRE(t2.num_roots() == 0);
  REQUIRE_THROWS_AS(io::datum_from_json(json::parse(R"({"type": "B2", "lattice": "weird"})")), InvalidInput);
  REQUIRE_THROWS_AS(io::datum_from_json(json::parse(R"({"roots": [[2]]})")), InvalidInput);
  REQUIRE_THROWS_AS(io::datum_from_json(json::parse(R"({"type": "Q7"})")), UnknownType);
}

TEST_CASE("inertial and monomials", "[io]") {
  auto S = io::inertial_from_json(json::parse(R"({"levels": [[["1/2", "0"]], []]})"), 2);
  REQUIRE(S.levels.size() == 2);
  REQUIRE(S.levels[0][0].coords[0] == Rational(1, 2));
  auto implied = io::inertial_from_json(json::parse(R"({"levels": [[["1/3"]]]})"), 1);
  REQUIRE(implied.levels.size() == 2);
  REQUIRE_THROWS_AS(io::inertial_from_json(json::parse(R"({"levels": [[["1/3"]], [["1/2"]], []]})"), 1), InvalidInput);
  REQUIRE_THROWS_AS(io::inertial_from_json(json::parse(R"({"levels": [[["1/3", "0"]], []]})"), 1), InvalidInput);

  REQUIRE(io::monomial_from_json("1").is_one());
  REQUIRE(io::monomial_from_json("q^(1/2)") == Monomial::q_power(1));
  REQUIRE(io::monomial_from_json("q^(-1)*zeta(1/4)") == Monomial(-2, Rational(1, 4)));
  REQUIRE(io::monomial_from_json("-1") == Monomial::root_of_unity(Rational(1, 2)));
  REQUIRE(io::monomial_from_json(json::parse(R"({"q_half": 3, "zeta": "2/3"})")) == Monomial(3, Rational(2, 3)));
  REQUIRE_THROWS_AS(io::monomial_from_json("q^(1/3)"), InvalidInput);
  REQUIRE_THROWS_AS(io::monomial_from_json("2"), InvalidInput);
  for (const Monomial& m : {Monomial(5, Rational(1, 6)), Monomial(-3, 0), Monomial(0, Rational(5, 8))}) {
    REQUIRE(io::monomial_from_json(m.to_string()) == m);
  }
}

TEST_CASE("reports", "[io]") {
  auto r = io::hii_rhs_json(json::parse(R"({"datum": {"type": "A1", "lattice": "ad"}, "q": "3"})"));
  REQUIRE(r["rhs_squared"] == "81/64");
  REQUIRE(r["s_sharp"] == "2");
  auto a = io::analyze_json(json::parse(
      R"({"datum": {"type": "A1", "lattice": "sc"}, "inertial": {"levels": [[["1/2"]], []]}, "q": "2", "p": 3})"));
  REQUIRE(a["ramification"]["c_chi_order"] == 2);
  REQUIRE(a["volumes"]["ratio"] == "4");
  REQUIRE(a["condition"]["satisfied"] == true);
  auto g = io::gamma_json(json::parse(R"({"datum": {"type": "A1", "lattice": "sc"}, "h": [0], "q": "2"})"));
  REQUIRE(g["gamma_abs_squared"].is_null());
  REQUIRE(g["gamma_abs_squared_flag"] == "PoleFlag");
  auto p = io::gamma_json(json::parse(R"({"datum": {"type": "A1", "lattice": "ad"}, "h": "principal", "q": "2"})"));
  REQUIRE(p["gamma_abs_squared"] == "16/9");
  auto c = io::chain_json(json::parse(R"({"datum": {"type": "C2"}, "inertial": {"levels": [[["0", "1/2"]], []]}})"));
  REQUIRE(c["ok"] == true);
}
