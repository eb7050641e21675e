#include "hiicheck/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

using Poly = std::vector<Rational>;

std::mutex& cyclotomic_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic
  const size_t dd = den.size() - 1;
  std::vector<Integer> quot(num.size() - dd, 0);
  for (size_t k = num.size(); k-- > dd;) {
    Integer c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return quot;
}

std::vector<Integer> compute_cyclotomic(long n, const std::map<long, std::vector<Integer>>& cache);

const std::vector<Integer>& cyclotomic_locked(long n, std::map<long, std::vector<Integer>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) cyclotomic_locked(d, cache);
  }
  auto poly = compute_cyclotomic(n, cache);
  return cache.emplace(n, std::move(poly)).first->second;
}

std::vector<Integer> compute_cyclotomic(long n, const std::map<long, std::vector<Integer>>& cache) {
  std::vector<Integer> p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cache.at(d));
  }
  return p;
}

void reduce_mod_cyclotomic(Poly& p, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const size_t deg = phi.size() - 1;
  for (size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (size_t j = 0; j <= deg; ++j) p[k - deg + j] -= c * Rational(phi[j]);
  }
  p.resize(deg, Rational(0));
}

Poly lift(const Poly& p, long from, long to) {
  if (from == to) return p;
  const long step = to / from;
  Poly out(static_cast<size_t>(to), Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    out[(i * static_cast<size_t>(step)) % static_cast<size_t>(to)] += p[i];
  }
  reduce_mod_cyclotomic(out, to);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, long n) {
  if (a.empty() || b.empty()) return Poly(static_cast<size_t>(euler_phi(n)), Rational(0));
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  reduce_mod_cyclotomic(out, n);
  return out;
}

bool poly_is_zero(const Poly& p) {
  for (const auto& c : p) {
    if (c != 0) return false;
  }
  return true;
}

// Inverse in Q(zeta_n) by solving (multiplication by a) * x = 1.
Poly poly_inverse(const Poly& a, long n) {
  const size_t d = a.size();
  std::vector<Poly> mat(d, Poly(d + 1, Rational(0)));
  Poly column = a;
  for (size_t j = 0; j < d; ++j) {
    for (size_t i = 0; i < d; ++i) mat[i][j] = column[i];
    Poly shifted(d + 1, Rational(0));
    for (size_t i = 0; i < d; ++i) shifted[i + 1] = column[i];
    reduce_mod_cyclotomic(shifted, n);
    column = shifted;
  }
  mat[0][d] = 1;
  for (size_t col = 0; col < d; ++col) {
    size_t pivot = col;
    while (pivot < d && mat[pivot][col] == 0) ++pivot;
    if (pivot == d) throw DivisionByZero("element of Q(zeta_" + std::to_string(n) + ") is not invertible");
    std::swap(mat[pivot], mat[col]);
    Rational inv = 1 / mat[col][col];
    for (size_t k = col; k <= d; ++k) mat[col][k] *= inv;
    for (size_t r = 0; r < d; ++r) {
      if (r == col || mat[r][col] == 0) continue;
      Rational f = mat[r][col];
      for (size_t k = col; k <= d; ++k) mat[r][k] -= f * mat[col][k];
    }
  }
  Poly out(d);
  for (size_t i = 0; i < d; ++i) out[i] = mat[i][d];
  return out;
}

Poly poly_conjugate(const Poly& a, long n) {
  Poly out(static_cast<size_t>(n), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    out[(static_cast<size_t>(n) - i) % static_cast<size_t>(n)] += a[i];
  }
  reduce_mod_cyclotomic(out, n);
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

std::string render_poly(const Poly& p, long n) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << p[i].get_str();
    } else {
      if (p[i] != 1) os << p[i].get_str() << "*";
      os << "zeta" << n;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) throw InvalidInput("cyclotomic polynomial of non-positive order");
  static std::map<long, std::vector<Integer>> cache;
  std::lock_guard lock(cyclotomic_mutex());
  return cyclotomic_locked(n, cache);
}

Scalar::Scalar() : re_(1, Rational(0)), sq_(1, Rational(0)) {}

Scalar::Scalar(const Rational& r) : re_(1, r), sq_(1, Rational(0)) { re_[0].canonicalize(); }

Scalar::Scalar(long v) : Scalar(Rational(v)) {}

Scalar::Scalar(long conductor, Rational q, std::vector<Rational> re, std::vector<Rational> sq)
    : conductor_(conductor), q_(std::move(q)), re_(std::move(re)), sq_(std::move(sq)) {
  q_.canonicalize();
}

Scalar Scalar::root_of_unity(const Rational& turn) {
  Rational t = mod_one(turn);
  long n = to_long(Integer(t.get_den()));
  long k = to_long(Integer(t.get_num()));
  Poly p(static_cast<size_t>(std::max(n, 1L)), Rational(0));
  p[static_cast<size_t>(k)] = 1;
  reduce_mod_cyclotomic(p, n);
  Poly zero(p.size(), Rational(0));
  return Scalar(n, Rational(0), std::move(p), std::move(zero));
}

Scalar Scalar::sqrt_q(const Rational& q) {
  if (q <= 1) throw InvalidInput("q must be a rational > 1, got " + q.get_str());
  return Scalar(1, q, {Rational(0)}, {Rational(1)});
}

Scalar Scalar::q_half_power(const Rational& q, long k) {
  if (q <= 1) throw InvalidInput("q must be a rational > 1, got " + q.get_str());
  long whole = k >= 0 ? k / 2 : -((-k + 1) / 2);
  bool odd = (k - 2 * whole) != 0;
  Rational c = hii::pow(q, whole);
  if (odd) return Scalar(1, q, {Rational(0)}, {c});
  return Scalar(1, q, {c}, {Rational(0)});
}

void Scalar::adopt_common(Scalar& other) {
  if (has_q() && other.has_q() && q_ != other.q_) {
    throw InvalidInput("scalars over different q: " + q_.get_str() + " vs " + other.q_.get_str());
  }
  if (!has_q()) q_ = other.q_;
  if (!other.has_q()) other.q_ = q_;
  if (conductor_ != other.conductor_) {
    long n = std::lcm(conductor_, other.conductor_);
    *this = lifted_to(n);
    other = other.lifted_to(n);
  }
}

Scalar Scalar::lifted_to(long conductor) const {
  if (conductor % conductor_ != 0) {
    throw InvalidInput("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(conductor));
  }
  return Scalar(conductor, q_, lift(re_, conductor_, conductor), lift(sq_, conductor_, conductor));
}

bool Scalar::is_zero() const { return poly_is_zero(re_) && poly_is_zero(sq_); }

bool Scalar::is_rational() const {
  if (!poly_is_zero(sq_)) return false;
  for (size_t i = 1; i < re_.size(); ++i) {
    if (re_[i] != 0) return false;
  }
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw InvalidInput("scalar is not rational: " + to_string());
  return re_.empty() ? Rational(0) : re_[0];
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.re_) c = -c;
  for (auto& c : out.sq_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar rhs = other;
  adopt_common(rhs);
  re_ = poly_add(re_, rhs.re_);
  sq_ = poly_add(sq_, rhs.sq_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar rhs = other;
  adopt_common(rhs);
  const long n = conductor_;
  Poly ac = poly_mul(re_, rhs.re_, n);
  Poly bd = poly_mul(sq_, rhs.sq_, n);
  Poly ad = poly_mul(re_, rhs.sq_, n);
  Poly bc = poly_mul(sq_, rhs.re_, n);
  for (auto& c : bd) c *= q_;
  re_ = poly_add(ac, bd);
  sq_ = poly_add(ad, bc);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  const long n = conductor_;
  if (poly_is_zero(sq_)) {
    return Scalar(n, q_, poly_inverse(re_, n), Poly(re_.size(), Rational(0)));
  }
  // (a + b y)^{-1} = (a - b y) / (a^2 - q b^2)
  Poly a2 = poly_mul(re_, re_, n);
  Poly b2 = poly_mul(sq_, sq_, n);
  for (size_t i = 0; i < a2.size(); ++i) a2[i] -= q_ * b2[i];
  if (poly_is_zero(a2)) throw DivisionByZero("zero divisor in Q(zeta_" + std::to_string(n) + ")(sqrt q): " + to_string());
  Poly norm_inv = poly_inverse(a2, n);
  Poly minus_b = sq_;
  for (auto& c : minus_b) c = -c;
  return Scalar(n, q_, poly_mul(re_, norm_inv, n), poly_mul(minus_b, norm_inv, n));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Scalar out(1);
  while (e > 0) {
    if (e & 1UL) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  if (out.has_q() == false && has_q()) out.q_ = q_;
  return out;
}

Scalar Scalar::conjugate() const {
  return Scalar(conductor_, q_, poly_conjugate(re_, conductor_), poly_conjugate(sq_, conductor_));
}

Scalar Scalar::abs_squared() const { return *this * conjugate(); }

Scalar Scalar::collapse_sqrt() const {
  if (!has_q() || poly_is_zero(sq_)) return *this;
  auto root = rational_sqrt(q_);
  if (!root) return *this;
  Poly re = re_;
  for (size_t i = 0; i < re.size(); ++i) re[i] += sq_[i] * *root;
  return Scalar(conductor_, q_, std::move(re), Poly(sq_.size(), Rational(0)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar x = a;
  Scalar y = b;
  bool sq_free = poly_is_zero(x.sq_) && poly_is_zero(y.sq_);
  if (x.has_q() && y.has_q() && x.q_ != y.q_ && !sq_free) return false;
  if (x.conductor_ != y.conductor_) {
    long n = std::lcm(x.conductor_, y.conductor_);
    x = x.lifted_to(n);
    y = y.lifted_to(n);
  }
  return x.re_ == y.re_ && x.sq_ == y.sq_;
}

std::string Scalar::to_string() const {
  if (is_rational()) return to_rational().get_str();
  std::string head = render_poly(re_, conductor_);
  if (poly_is_zero(sq_)) return head;
  std::string tail = "(" + render_poly(sq_, conductor_) + ")*sqrt(q)";
  if (poly_is_zero(re_)) return tail;
  return head + " + " + tail;
}

Monomial::Monomial(long twice_exponent, const Rational& zeta_turn)
    : twice_q_exponent(twice_exponent), zeta(mod_one(zeta_turn)) {}

Monomial Monomial::operator*(const Monomial& other) const {
  return Monomial(twice_q_exponent + other.twice_q_exponent, zeta + other.zeta);
}

Monomial Monomial::inverse() const { return Monomial(-twice_q_exponent, -zeta); }

Monomial Monomial::pow(long e) const { return Monomial(twice_q_exponent * e, zeta * Rational(e)); }

Scalar Monomial::to_scalar(const Rational& q) const {
  return Scalar::q_half_power(q, twice_q_exponent) * Scalar::root_of_unity(zeta);
}

Rational Monomial::abs_squared(const Rational& q) const { return hii::pow(q, twice_q_exponent); }

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  if (twice_q_exponent != 0) {
    Rational e(twice_q_exponent, 2);
    e.canonicalize();
    out = "q^(" + e.get_str() + ")";
  }
  if (zeta != 0) {
    if (!out.empty()) out += "*";
    out += "zeta(" + zeta.get_str() + ")";
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.twice_q_exponent <=> b.twice_q_exponent; c != 0) return c;
  int cmp_val = cmp(a.zeta, b.zeta);
  if (cmp_val < 0) return std::strong_ordering::less;
  if (cmp_val > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TorsionValue::TorsionValue(const Rational& value) : r(mod_one(value)) {}

}  // namespace hii
