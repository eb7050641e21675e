#include "hiicheck/torus.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "hiicheck/errors.hpp"

namespace hii {

TorsionPoint::TorsionPoint(std::vector<Rational> c) : coords(std::move(c)) {
  for (auto& x : coords) x = mod_one(x);
}

TorsionValue TorsionPoint::evaluate(const Vec& lambda) const {
  if (lambda.size() != coords.size()) throw InvalidInput("torsion point and cocharacter have different ranks");
  Rational s = 0;
  for (size_t i = 0; i < coords.size(); ++i) s += Rational(lambda[i]) * coords[i];
  return TorsionValue(s);
}

bool TorsionPoint::is_trivial() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

long TorsionPoint::order() const {
  long out = 1;
  for (const auto& c : coords) out = std::lcm(out, to_long(Integer(c.get_den())));
  return out;
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& other) const {
  std::vector<Rational> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] + other.coords[i];
  return TorsionPoint(std::move(c));
}

TorsionPoint TorsionPoint::scaled(long k) const {
  std::vector<Rational> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] * Rational(k);
  return TorsionPoint(std::move(c));
}

std::string TorsionPoint::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].get_str();
  }
  return out + ")";
}

TorusElement TorusElement::from_torsion(const TorsionPoint& t) {
  std::vector<Monomial> c;
  for (const auto& x : t.coords) c.emplace_back(0, x);
  return TorusElement(std::move(c));
}

Monomial TorusElement::evaluate(const Vec& lambda) const {
  if (lambda.size() != coords.size()) throw InvalidInput("torus element and cocharacter have different ranks");
  Monomial m;
  for (size_t i = 0; i < coords.size(); ++i) m = m * coords[i].pow(lambda[i]);
  return m;
}

bool TorusElement::is_one() const {
  for (const auto& c : coords) {
    if (!c.is_one()) return false;
  }
  return true;
}

TorusElement TorusElement::operator*(const TorusElement& other) const {
  std::vector<Monomial> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] * other.coords[i];
  return TorusElement(std::move(c));
}

std::string TorusElement::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

std::vector<TorsionPoint> generated_group(const std::vector<TorsionPoint>& generators, size_t rank) {
  std::set<TorsionPoint> seen{TorsionPoint::zero(rank)};
  std::deque<TorsionPoint> queue{TorsionPoint::zero(rank)};
  while (!queue.empty()) {
    TorsionPoint cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      TorsionPoint next = cur + g;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_generated_group(const TorsionPoint& p, const std::vector<TorsionPoint>& generators) {
  const size_t n = p.size();
  Integer den = 1;
  auto absorb = [&](const TorsionPoint& t) {
    for (const auto& x : t.coords) den = lcm(den, Integer(x.get_den()));
  };
  absorb(p);
  for (const auto& g : generators) absorb(g);
  auto scaled = [&](const TorsionPoint& t) {
    Vec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = to_long(Integer(t.coords[i] * den));
    return v;
  };
  // p in <g> + Z^n  <=>  den*p in span(den*g, den*e_i)
  std::vector<Vec> rows;
  for (const auto& g : generators) rows.push_back(scaled(g));
  for (size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = to_long(den);
    rows.push_back(e);
  }
  return solve_row_combination(rows, scaled(p)).has_value();
}

}  // namespace hii
