#pragma once

#include <string>
#include <vector>

#include "hiicheck/lattice.hpp"
#include "hiicheck/scalar.hpp"

namespace hii {

/// Torsion point of the dual torus: an element of X* (x) Q/Z, coordinates in [0,1).
struct TorsionPoint {
  std::vector<Rational> coords;

  TorsionPoint() = default;
  explicit TorsionPoint(std::vector<Rational> c);
  static TorsionPoint zero(size_t n) { return TorsionPoint(std::vector<Rational>(n, Rational(0))); }

  size_t size() const noexcept { return coords.size(); }
  /// lambda(t) = sum lambda_i * t_i mod 1 for lambda in X_*.
  TorsionValue evaluate(const Vec& lambda) const;
  bool is_trivial() const;
  /// Order in X* (x) Q/Z (lcm of denominators).
  long order() const;

  TorsionPoint operator+(const TorsionPoint& other) const;
  TorsionPoint scaled(long k) const;
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend auto operator<=>(const TorsionPoint& a, const TorsionPoint& b) {
    return std::lexicographical_compare_three_way(
        a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
        [](const Rational& x, const Rational& y) { return cmp(x, y) <=> 0; });
  }
  std::string to_string() const;
};

/// Point of the dual torus X* (x) C^x with Monomial coordinates.
struct TorusElement {
  std::vector<Monomial> coords;

  TorusElement() = default;
  explicit TorusElement(std::vector<Monomial> c) : coords(std::move(c)) {}
  static TorusElement one(size_t n) { return TorusElement(std::vector<Monomial>(n)); }
  static TorusElement from_torsion(const TorsionPoint& t);

  size_t size() const noexcept { return coords.size(); }
  Monomial evaluate(const Vec& lambda) const;
  bool is_one() const;
  TorusElement operator*(const TorusElement& other) const;
  friend bool operator==(const TorusElement&, const TorusElement&) = default;
  std::string to_string() const;
};

/// Finite subgroup generated by torsion points, enumerated exhaustively.
std::vector<TorsionPoint> generated_group(const std::vector<TorsionPoint>& generators, size_t rank);

/// Membership in the subgroup generated by `generators`, decided by lattice
/// arithmetic (no enumeration).
bool in_generated_group(const TorsionPoint& p, const std::vector<TorsionPoint>& generators);

}  // namespace hii
