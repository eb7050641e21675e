#pragma once

#include <vector>

#include "hiicheck/ramification.hpp"
#include "hiicheck/torus.hpp"
#include "hiicheck/weyl.hpp"

namespace hii {

struct Pi0Description {
  Integer order = 1;
  std::vector<std::vector<size_t>> weyl_part;   // reduced words of coset representatives
  std::vector<Integer> torus_part_invariants;   // torsion invariant factors
  size_t free_rank = 0;
};

/// Finite subset A of the dual torus: torsion points and Monomial torus elements.
struct TorusSubset {
  std::vector<TorsionPoint> torsion;
  std::vector<TorusElement> elements;
};

/// {alpha : alpha^vee(a) = 1 for all a in A}
std::vector<size_t> connected_centralizer_subsystem(const RootDatum& rd, const TorusSubset& A);

/// Pointwise stabilizer of A in W modulo W(Phi_A), representatives preserving Phi_A+.
Pi0Description pi0_torus_subset_centralizer(const RootDatum& rd, const WeylGroup& W, const TorusSubset& A);

/// X_* / Z(subsystem coroots): torsion invariants and free rank.
Pi0Description pi0_diagonalizable(const RootDatum& rd, const std::vector<size_t>& subsystem);

struct SSharp {
  Pi0Description g;          // S#_phi over G
  Pi0Description h;          // S#_phi' over H°
  size_t c_chi = 1;
  size_t c_nu = 1;           // image in C_chi of the G-side Weyl part
  std::vector<size_t> phi_a; // Phi_A inside the ambient datum
};

/// Phi_A = {alpha in Phi_chi : alpha^vee(s) = 1}
std::vector<size_t> steinberg_subsystem(const RootDatum& rd, const Ramification& ram, const TorusElement& s);

/// S# for the Steinberg-type parameter attached to (S, s): the sl2 is principal
/// in the connected centralizer of S(0) and s. Throws NotDiscrete if the
/// centralizer is not finite modulo the center.
SSharp s_sharp_steinberg(const RootDatum& rd, const WeylGroup& W, const Ramification& ram, const TorusElement& s);

}  // namespace hii
