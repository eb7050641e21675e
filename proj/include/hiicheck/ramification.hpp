#pragma once

#include <memory>
#include <vector>

#include "hiicheck/rootdata.hpp"
#include "hiicheck/torus.hpp"
#include "hiicheck/weyl.hpp"

namespace hii {

/// Decreasing filtration S(0) >= S(1) >= ... of finite subgroups of torsion
/// points of the dual torus; each level is a list of generators.
struct InertialDatum {
  std::vector<std::vector<TorsionPoint>> levels;

  static InertialDatum trivial() { return InertialDatum{{{}}}; }
  size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  const std::vector<TorsionPoint>& generators() const;  // level 0
  /// Throws InvalidInput when levels are not nested or the last level is nontrivial.
  void validate(size_t rank) const;
};

using ConductorData = std::vector<long>;  // indexed by root

ConductorData conductor_function(const RootDatum& rd, const InertialDatum& S);

/// floor(c/2) on positive roots, ceil(c/2) on negative roots.
std::vector<long> roche_f(const RootDatum& rd, const ConductorData& c);
/// min{1, floor((c+1)/2)} on negative roots, as displayed in the source formula.
std::vector<long> displayed_f(const RootDatum& rd, const ConductorData& c);
/// Root indices where the displayed formula and roche_f disagree.
std::vector<size_t> f_divergences(const RootDatum& rd, const ConductorData& c);

struct ConcavityViolation {
  size_t alpha, beta, sum;
};
std::vector<ConcavityViolation> concavity_violations(const RootDatum& rd, const std::vector<long>& f);

/// a = sum over roots with c != 0 of (c + 1).
long artin_conductor_ramified(const ConductorData& c);

struct PhiChi {
  std::vector<size_t> roots;      // indices into the ambient datum
  RootDatum h_datum;              // Psi_chi with the inherited positive system
  std::vector<size_t> parent;     // h_datum root index -> ambient root index
};

/// {alpha : c_alpha = 0}; throws NotClosed unless the coroots form a closed subsystem.
PhiChi phi_chi(const RootDatum& rd, const ConductorData& c);

std::vector<size_t> weyl_stabilizer(const WeylGroup& W, const InertialDatum& S);

struct CGroup {
  std::vector<size_t> stabilizer;  // W(chi)
  std::vector<size_t> reflection;  // W°_chi
  std::vector<size_t> c_chi;       // C_chi
  bool abelian = true;
};

/// C_chi inside W(chi); certifies W(chi) = W°_chi x| C_chi, else DecompositionFailure.
CGroup c_group(const RootDatum& rd, const WeylGroup& W, const InertialDatum& S, const PhiChi& phi);

/// Everything derived from (rd, S) in one value.
struct Ramification {
  InertialDatum inertial;
  ConductorData c;
  std::vector<long> f;
  std::vector<size_t> divergences;
  PhiChi phi;
  CGroup cg;
  long artin = 0;
};

Ramification analyze_ramification(const RootDatum& rd, const WeylGroup& W, const InertialDatum& S);

}  // namespace hii
