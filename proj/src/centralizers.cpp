#include "hiicheck/centralizers.hpp"

#include <algorithm>
#include <set>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

bool kills(const Vec& coroot, const TorusSubset& A) {
  for (const auto& t : A.torsion) {
    if (!t.evaluate(coroot).is_trivial()) return false;
  }
  for (const auto& s : A.elements) {
    if (!s.evaluate(coroot).is_one()) return false;
  }
  return true;
}

std::vector<size_t> positive_part(const RootDatum& rd, const std::vector<size_t>& subset) {
  std::vector<size_t> out;
  for (size_t a : subset) {
    if (rd.is_positive(a)) out.push_back(a);
  }
  return out;
}

// Torsion of L / <rows>, where L = Z^r.
Pi0Description lattice_quotient(const std::vector<Vec>& rows, size_t r) {
  Pi0Description d;
  if (rows.empty()) {
    d.free_rank = r;
    return d;
  }
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(rows, r));
  d.torus_part_invariants = snf.torsion();
  d.free_rank = r - snf.rank;
  for (const auto& x : d.torus_part_invariants) d.order *= x;
  return d;
}

// Images of the coroots in X_* / X_0 with X_0 the annihilator of the roots.
std::vector<Vec> derived_coroots(const RootDatum& rd, const std::vector<size_t>& coroots, size_t* derived_rank) {
  const size_t n = rd.rank();
  if (rd.num_roots() == 0) {
    *derived_rank = 0;
    return {};
  }
  // U R V = D; lambda -> first r entries of V^{-1} lambda
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(rd.roots(), n));
  const size_t r = snf.rank;
  auto vinv = rational_inverse(snf.V);
  std::vector<Vec> out;
  for (size_t a : coroots) {
    Vec img(r, 0);
    for (size_t i = 0; i < r; ++i) {
      Rational s = 0;
      for (size_t j = 0; j < n; ++j) s += (*vinv)[i][j] * Rational(rd.coroot(a)[j]);
      if (s.get_den() != 1) throw DecompositionFailure("projection to the derived cocharacter lattice is not integral");
      img[i] = to_long(Integer(s.get_num()));
    }
    out.push_back(img);
  }
  *derived_rank = r;
  return out;
}

// w fixing S(0) pointwise and s, preserving Phi_A+, optionally restricted to `within`.
std::vector<size_t> steinberg_weyl_part(const WeylGroup& W, const std::vector<size_t>& candidates,
                                        const TorusElement& s, const std::vector<size_t>& phi_a_positive) {
  std::vector<size_t> fix_s;
  for (size_t w : candidates) {
    if (W.act(w, s) == s) fix_s.push_back(w);
  }
  return preserving(W, fix_s, phi_a_positive);
}

}  // namespace

std::vector<size_t> connected_centralizer_subsystem(const RootDatum& rd, const TorusSubset& A) {
  std::vector<size_t> out;
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    if (kills(rd.coroot(a), A)) out.push_back(a);
  }
  return out;
}

Pi0Description pi0_torus_subset_centralizer(const RootDatum& rd, const WeylGroup& W, const TorusSubset& A) {
  std::vector<size_t> stab;
  for (size_t w = 0; w < W.order(); ++w) {
    bool ok = std::all_of(A.torsion.begin(), A.torsion.end(), [&](const TorsionPoint& t) { return W.act(w, t) == t; }) &&
              std::all_of(A.elements.begin(), A.elements.end(), [&](const TorusElement& s) { return W.act(w, s) == s; });
    if (ok) stab.push_back(w);
  }
  auto phi_a = connected_centralizer_subsystem(rd, A);
  auto reps = preserving(W, stab, positive_part(rd, phi_a));
  auto refl = reflection_subgroup(W, rd, phi_a);
  if (reps.size() * refl.size() != stab.size()) {
    throw DecompositionFailure("stabilizer is not W(Phi_A) x| (Phi_A+ preserving part)");
  }
  Pi0Description d;
  d.order = static_cast<unsigned long>(reps.size());
  for (size_t w : reps) d.weyl_part.push_back(W.element(w).word);
  return d;
}

Pi0Description pi0_diagonalizable(const RootDatum& rd, const std::vector<size_t>& subsystem) {
  std::vector<Vec> rows;
  for (size_t a : subsystem) rows.push_back(rd.coroot(a));
  return lattice_quotient(rows, rd.rank());
}

std::vector<size_t> steinberg_subsystem(const RootDatum& rd, const Ramification& ram, const TorusElement& s) {
  std::vector<size_t> out;
  for (size_t a : ram.phi.roots) {
    if (s.evaluate(rd.coroot(a)).is_one()) out.push_back(a);
  }
  return out;
}

SSharp s_sharp_steinberg(const RootDatum& rd, const WeylGroup& W, const Ramification& ram, const TorusElement& s) {
  SSharp out;
  out.phi_a = steinberg_subsystem(rd, ram, s);
  const auto phi_a_pos = positive_part(rd, out.phi_a);

  // torus part, shared by G and H° once Phi_A has full rank
  size_t r = 0;
  auto projected = derived_coroots(rd, out.phi_a, &r);
  Pi0Description torus = lattice_quotient(projected, r);
  if (torus.free_rank != 0) {
    throw NotDiscrete("the centralizer of the Steinberg-type parameter is not finite modulo the center");
  }

  std::vector<size_t> g_part = steinberg_weyl_part(W, ram.cg.stabilizer, s, phi_a_pos);
  std::vector<size_t> h_part = steinberg_weyl_part(W, ram.cg.reflection, s, phi_a_pos);

  // H° side: derived lattice of Psi_chi itself
  const RootDatum& hd = ram.phi.h_datum;
  std::vector<size_t> phi_a_in_h;
  for (size_t i = 0; i < ram.phi.parent.size(); ++i) {
    if (std::binary_search(out.phi_a.begin(), out.phi_a.end(), ram.phi.parent[i])) phi_a_in_h.push_back(i);
  }
  size_t rh = 0;
  auto projected_h = derived_coroots(hd, phi_a_in_h, &rh);
  Pi0Description torus_h = lattice_quotient(projected_h, rh);
  if (torus_h.free_rank != 0) throw NotDiscrete("the H° centralizer is not finite modulo the center");

  auto fill = [&](const Pi0Description& t, const std::vector<size_t>& part) {
    Pi0Description d = t;
    d.order = t.order * static_cast<unsigned long>(part.size());
    for (size_t w : part) d.weyl_part.push_back(W.element(w).word);
    return d;
  };
  out.g = fill(torus, g_part);
  out.h = fill(torus_h, h_part);
  out.c_chi = ram.cg.c_chi.size();

  // image of g_part in C_chi = W(chi) / W°_chi: each coset meets C_chi once
  std::set<size_t> w0(ram.cg.reflection.begin(), ram.cg.reflection.end());
  std::set<size_t> image;
  for (size_t w : g_part) {
    for (size_t c : ram.cg.c_chi) {
      if (w0.count(W.multiply(w, W.inverse(c)))) {
        image.insert(c);
        break;
      }
    }
  }
  out.c_nu = image.size();
  return out;
}

}  // namespace hii
