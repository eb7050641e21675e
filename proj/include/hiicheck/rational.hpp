#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hii {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b" or "-a/b" (surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Representative of r in [0, 1).
Rational mod_one(const Rational& r);

Rational pow(const Rational& base, long exponent);

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
std::string to_decimal(const Rational& r, int digits);

/// Decimal rendering of sqrt(r) for r >= 0, truncated, computed with integer
/// square roots only.
std::string sqrt_to_decimal(const Rational& r, int digits);

long to_long(const Integer& z);

}  // namespace hii
