#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hiicheck/rational.hpp"

namespace hii {

/// Exact element a + b*sqrt(q) with a, b in Q(zeta_N).
///
/// sqrt(q) is a formal quadratic element y with y^2 = q, adjoined even when q
/// is a rational square; collapse_sqrt() substitutes the rational root when it
/// exists. Coordinates are in the power basis 1, z, ..., z^(phi(N)-1) of
/// Q(zeta_N) reduced modulo the N-th cyclotomic polynomial.
///
/// A Scalar built from rationals and roots of unity alone carries no q
/// ("q-free") and adopts the q of the other operand in binary operations.
/// Mixing two different q values throws InvalidInput.
class Scalar {
 public:
  Scalar();
  Scalar(const Rational& r);  // NOLINT: implicit rational embedding is intended
  Scalar(long v);             // NOLINT

  /// e^{2 pi i * turn}; turn is reduced mod 1.
  static Scalar root_of_unity(const Rational& turn);
  static Scalar sqrt_q(const Rational& q);
  /// q^{k/2} for any integer k.
  static Scalar q_half_power(const Rational& q, long k);

  long conductor() const noexcept { return conductor_; }
  const Rational& q() const noexcept { return q_; }
  bool has_q() const noexcept { return q_ != 0; }

  const std::vector<Rational>& rational_part() const noexcept { return re_; }
  const std::vector<Rational>& sqrt_part() const noexcept { return sq_; }

  bool is_zero() const;
  /// True iff the value is a rational number (no zeta and no sqrt(q) part).
  bool is_rational() const;
  Rational to_rational() const;  // throws InvalidInput unless is_rational()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws DivisionByZero when the value is zero or a zero divisor of the
  /// formal ring (possible only when sqrt(q) already lies in Q(zeta_N)).
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// Field automorphism zeta -> zeta^{-1}, fixing Q and sqrt(q).
  Scalar conjugate() const;
  Scalar abs_squared() const;

  /// Replaces sqrt(q) by r when q = r^2 with r rational; otherwise identity.
  Scalar collapse_sqrt() const;

  /// Same value expressed over Q(zeta_M) for a multiple M of conductor().
  Scalar lifted_to(long conductor) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Scalar(long conductor, Rational q, std::vector<Rational> re, std::vector<Rational> sq);
  void adopt_common(Scalar& other);

  long conductor_ = 1;
  Rational q_ = 0;
  std::vector<Rational> re_;
  std::vector<Rational> sq_;
};

/// zeta * q^{twice_q_exponent/2}, zeta a root of unity stored as a turn in [0,1).
struct Monomial {
  long twice_q_exponent = 0;
  Rational zeta = 0;

  Monomial() = default;
  Monomial(long twice_q_exponent, const Rational& zeta_turn);

  static Monomial one() { return Monomial(); }
  static Monomial q_power(long twice_exponent) { return Monomial(twice_exponent, 0); }
  static Monomial root_of_unity(const Rational& turn) { return Monomial(0, turn); }

  bool is_one() const { return twice_q_exponent == 0 && zeta == 0; }
  bool is_unitary() const { return twice_q_exponent == 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(long e) const;

  Scalar to_scalar(const Rational& q) const;
  /// |m|^2 = q^{twice_q_exponent}.
  Rational abs_squared(const Rational& q) const;

  /// "q^(k/2)*zeta(a/b)" style rendering; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Element of Q/Z, stored in [0, 1).
struct TorsionValue {
  Rational r = 0;

  TorsionValue() = default;
  explicit TorsionValue(const Rational& value);

  bool is_trivial() const { return r == 0; }
  TorsionValue operator+(const TorsionValue& other) const { return TorsionValue(r + other.r); }
  TorsionValue operator-() const { return TorsionValue(-r); }
  friend bool operator==(const TorsionValue&, const TorsionValue&) = default;
};

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);
long euler_phi(long n);

}  // namespace hii
