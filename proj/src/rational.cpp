#include "hiicheck/rational.hpp"

#include <cctype>
#include <climits>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den)) throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational mod_one(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c - Rational(floor(c));
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational out(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out = Rational(num, den);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled;
  Integer num = r.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den_mpz_t());
  bool negative = scaled < 0;
  Integer mag = abs(scaled);
  std::string body = mag.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<size_t>(digits + 1) - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  if (negative || (scaled == 0 && r < 0)) body.insert(0, "-");
  return body;
}

std::string sqrt_to_decimal(const Rational& r, int digits) {
  if (r < 0) throw InvalidInput("square root of a negative rational");
  // floor(sqrt(num/den) * 10^d) = floor(sqrt(num * den * 10^(2d)) / den)
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * digits));
  Integer radicand = r.get_num() * r.get_den() * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  // floor(floor(x) / den) == floor(x / den) for a positive integer den.
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), root.get_mpz_t(), r.get_den_mpz_t());
  Rational scaled(q);
  Integer ten_d;
  mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return to_decimal(scaled / Rational(ten_d), digits);
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidInput("integer out of machine range: " + z.get_str());
  return z.get_si();
}

}  // namespace hii
