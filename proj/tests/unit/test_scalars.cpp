#include <catch_amalgamated.hpp>

#include <random>

#include "hiicheck/errors.hpp"
#include "hiicheck/scalar.hpp"

using namespace hii;

namespace {

Scalar z(long n, long k = 1) { return Scalar::root_of_unity(Rational(k, n)); }

// Independent evaluation: sum of c_k zeta_n^k with coefficients on all n
// powers, reduced by expanding into a length-n vector and comparing after
// subtracting multiples of 1 + z + ... + z^{p-1} patterns is awkward, so the
// oracle for small cases is numerical with exact tolerance on integers.
Scalar random_scalar(std::mt19937_64& rng, const Rational& q) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> conductor_pick(0, 4);
  const long conductors[] = {1, 3, 4, 6, 8};
  long n = conductors[conductor_pick(rng)];
  Scalar out;
  for (long k = 0; k < n; ++k) {
    out += Scalar(Rational(coef(rng), den(rng))) * z(n, k);
    out += Scalar(Rational(coef(rng), den(rng))) * z(n, k) * Scalar::sqrt_q(q);
  }
  return out;
}

}  // namespace

TEST_CASE("roots of unity multiply by adding turns", "[scalars]") {
  REQUIRE(z(4) * z(4) == Scalar(-1));
  REQUIRE(z(4) * z(4) == z(2));
  REQUIRE(z(6).pow(6) == Scalar(1));
  REQUIRE(z(12, 5).pow(12) == Scalar(1));
}

TEST_CASE("cyclotomic reduction", "[scalars]") {
  // 1 + z + z^2 = 0 for z a primitive cube root
  REQUIRE((Scalar(1) + z(3)) + (Scalar(1) + z(3, 2)) == Scalar(1));
  REQUIRE(Scalar(1) + z(5) + z(5, 2) + z(5, 3) + z(5, 4) == Scalar(0));
  REQUIRE(z(4).rational_part().size() == 2);
  REQUIRE(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  REQUIRE(euler_phi(12) == 4);
  REQUIRE(z(3) == z(6, 2));
}

TEST_CASE("inverse and sqrt(q)", "[scalars]") {
  Scalar y = Scalar::sqrt_q(4);
  REQUIRE(y * y == Scalar(4));
  REQUIRE(y.inverse().collapse_sqrt() == Scalar(Rational(1, 2)));
  REQUIRE_FALSE(y.inverse() == Scalar(Rational(1, 2)));
  REQUIRE_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  Scalar a = Scalar(2) + z(5) * Scalar(Rational(3, 7));
  REQUIRE(a * a.inverse() == Scalar(1));
  REQUIRE(Scalar::q_half_power(3, -3) * Scalar::q_half_power(3, 3) == Scalar(1));
  REQUIRE(Scalar::q_half_power(3, -2) == Scalar(Rational(1, 3)));
}

TEST_CASE("conjugation", "[scalars]") {
  REQUIRE(z(8).conjugate() == z(8, 7));
  REQUIRE(Scalar(Rational(3, 2)).conjugate() == Scalar(Rational(3, 2)));
  REQUIRE((Scalar(1) + z(4)).conjugate() == Scalar(1) - z(4));
}

TEST_CASE("absolute value squared", "[scalars]") {
  REQUIRE(z(3).abs_squared() == Scalar(1));
  // (1+i)(1-i) expanded by hand
  Scalar i = z(4);
  REQUIRE((Scalar(1) + i).abs_squared() == Scalar(1) - i * i);
  REQUIRE((Scalar(1) + i).abs_squared() == Scalar(2));
  REQUIRE((Scalar::sqrt_q(3) * z(8)).abs_squared() == Scalar(3));
}

TEST_CASE("monomials embed with modulus q^k", "[scalars]") {
  Rational q(5, 2);
  for (long k = -5; k <= 5; ++k) {
    for (long d : {1L, 2L, 3L, 8L}) {
      Monomial m(k, Rational(1, d));
      REQUIRE(m.to_scalar(q).abs_squared() == Scalar(pow(q, k)));
      REQUIRE(m.abs_squared(q) == pow(q, k));
      REQUIRE((m * m.inverse()).is_one());
      REQUIRE(m.to_scalar(q) * m.inverse().to_scalar(q) == Scalar(1));
    }
  }
  REQUIRE(Monomial(1, Rational(3, 2)).zeta == Rational(1, 2));
  REQUIRE(Monomial(3, Rational(1, 4)).to_string() == "q^(3/2)*zeta(1/4)");
}

TEST_CASE("field axioms on random elements", "[scalars][property]") {
  std::mt19937_64 rng(20251014);
  Rational q(7, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(rng, q);
    Scalar b = random_scalar(rng, q);
    Scalar c = random_scalar(rng, q);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a.conjugate().conjugate() == a);
    REQUIRE((a * b).abs_squared() == a.abs_squared() * b.abs_squared());
    REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
    REQUIRE(a - a == Scalar(0));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar(1));
  }
}
