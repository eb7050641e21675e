#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hiicheck/ramification.hpp"
#include "hiicheck/scalar.hpp"

namespace hii {

struct Parameter {
  InertialDatum inertial;
  TorusElement s;  // Frobenius twist commuting with inertia
  Vec h;           // sl2 weight cocharacter, in X*
  Rational q;
};

struct RamifiedLine {
  size_t root = 0;
  long c = 0;
  Monomial eigenvalue;
};

/// mu (x) Sym^m
struct Strand {
  Monomial mu;
  long m = 0;
  friend bool operator==(const Strand&, const Strand&) = default;
  friend auto operator<=>(const Strand&, const Strand&) = default;
};

struct WDAdjointRep {
  std::vector<RamifiedLine> ramified;
  std::vector<Strand> strands;
  Rational q;
};

struct Weight {
  Monomial mu;
  long k = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Sum of the positive roots of the subsystem: pairs to 2 with every simple coroot.
Vec principal_sl2_cocharacter(const RootDatum& rd, const std::vector<size_t>& subsystem);

/// Peels maximal weights first within each mu class; throws InconsistentStrings.
std::vector<Strand> string_peel(std::vector<Weight> weights);

WDAdjointRep adjoint_wd(const RootDatum& rd, const ConductorData& c, const Parameter& p);
WDAdjointRep adjoint_wd(const RootDatum& rd, const Parameter& p);

/// prod over strands of (1 - mu^{+-1} q^{-m/2 - s0})^{-1}; s0 must lie in (1/2)Z.
/// Throws PoleFlag when a factor's denominator vanishes.
Scalar l_value(const WDAdjointRep& wd, const Rational& s0, bool dualize);

/// |gamma(0)|^2. PoleFlag when L(0) has a pole, ZeroFlag when L(1, dual) does.
Scalar gamma_abs_squared_at_zero(const WDAdjointRep& wd);
/// |epsilon|^2 of the ramified lines, q^{sum (c+1)}.
Scalar gamma_ramified_abs_squared(const WDAdjointRep& wd);
/// The unramified strands alone.
Scalar gamma_unramified_abs_squared(const WDAdjointRep& wd);

bool is_discrete(const RootDatum& rd, const WDAdjointRep& wd);

/// Adjoint representation on Lie(G∨)/Lie(Z(G∨)): drops rank - semisimple_rank
/// trivial strands (1, 0). InvalidInput if there are not that many.
WDAdjointRep modulo_center(const RootDatum& rd, WDAdjointRep wd);

/// Weight multiset rebuilt from the strands (for round-trip checks).
std::vector<Weight> strand_weights(const std::vector<Strand>& strands);

}  // namespace hii
