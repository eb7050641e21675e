#include "hiicheck/ramification.hpp"

#include <algorithm>
#include <set>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

const std::vector<TorsionPoint> kNoGenerators;

bool contained_in(const std::vector<TorsionPoint>& gens, const std::vector<TorsionPoint>& group_gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const TorsionPoint& t) { return in_generated_group(t, group_gens); });
}

}  // namespace

const std::vector<TorsionPoint>& InertialDatum::generators() const {
  return levels.empty() ? kNoGenerators : levels.front();
}

void InertialDatum::validate(size_t rank) const {
  if (levels.empty()) throw InvalidInput("inertial datum needs at least one level");
  for (const auto& level : levels) {
    for (const auto& t : level) {
      if (t.size() != rank) {
        throw InvalidInput("torsion generator " + t.to_string() + " does not have rank " + std::to_string(rank));
      }
    }
  }
  for (size_t j = 0; j + 1 < levels.size(); ++j) {
    if (!contained_in(levels[j + 1], levels[j])) {
      throw InvalidInput("inertial level " + std::to_string(j + 1) + " is not contained in level " + std::to_string(j));
    }
  }
  for (const auto& t : levels.back()) {
    if (!t.is_trivial()) throw InvalidInput("the last inertial level must be trivial");
  }
}

ConductorData conductor_function(const RootDatum& rd, const InertialDatum& S) {
  ConductorData c(rd.num_roots(), 0);
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    const Vec& cor = rd.coroot(a);
    long deepest = -1;
    for (size_t j = 0; j < S.levels.size(); ++j) {
      bool nontrivial = std::any_of(S.levels[j].begin(), S.levels[j].end(),
                                    [&](const TorsionPoint& t) { return !t.evaluate(cor).is_trivial(); });
      if (nontrivial) deepest = static_cast<long>(j);
    }
    c[a] = deepest < 0 ? 0 : deepest + 1;
  }
  return c;
}

std::vector<long> roche_f(const RootDatum& rd, const ConductorData& c) {
  std::vector<long> f(c.size());
  for (size_t a = 0; a < c.size(); ++a) f[a] = rd.is_positive(a) ? c[a] / 2 : (c[a] + 1) / 2;
  return f;
}

std::vector<long> displayed_f(const RootDatum& rd, const ConductorData& c) {
  std::vector<long> f(c.size());
  for (size_t a = 0; a < c.size(); ++a) f[a] = rd.is_positive(a) ? c[a] / 2 : std::min(1L, (c[a] + 1) / 2);
  return f;
}

std::vector<size_t> f_divergences(const RootDatum& rd, const ConductorData& c) {
  auto a = roche_f(rd, c);
  auto b = displayed_f(rd, c);
  std::vector<size_t> out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) out.push_back(i);
  }
  return out;
}

std::vector<ConcavityViolation> concavity_violations(const RootDatum& rd, const std::vector<long>& f) {
  std::vector<ConcavityViolation> out;
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    for (size_t b = 0; b < rd.num_roots(); ++b) {
      Vec s = rd.root(a);
      for (size_t i = 0; i < s.size(); ++i) s[i] += rd.root(b)[i];
      auto idx = rd.find_root(s);
      if (idx && f[a] + f[b] < f[*idx]) out.push_back({a, b, *idx});
    }
  }
  return out;
}

long artin_conductor_ramified(const ConductorData& c) {
  long a = 0;
  for (long x : c) {
    if (x != 0) a += x + 1;
  }
  return a;
}

PhiChi phi_chi(const RootDatum& rd, const ConductorData& c) {
  PhiChi out;
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    if (c.at(a) == 0) out.roots.push_back(a);
  }
  if (!is_coroot_closed(rd, out.roots)) throw NotClosed("roots with c = 0 do not form a closed coroot subsystem");
  out.h_datum = rd.subdatum(out.roots, &out.parent);
  return out;
}

std::vector<size_t> weyl_stabilizer(const WeylGroup& W, const InertialDatum& S) {
  return pointwise_stabilizer(W, S.generators());
}

CGroup c_group(const RootDatum& rd, const WeylGroup& W, const InertialDatum& S, const PhiChi& phi) {
  CGroup cg;
  cg.stabilizer = weyl_stabilizer(W, S);
  cg.reflection = reflection_subgroup(W, rd, phi.roots);
  std::vector<size_t> positive;
  for (size_t a : phi.roots) {
    if (rd.is_positive(a)) positive.push_back(a);
  }
  cg.c_chi = preserving(W, cg.stabilizer, positive);

  std::set<size_t> stab(cg.stabilizer.begin(), cg.stabilizer.end());
  for (size_t w : cg.reflection) {
    if (!stab.count(w)) throw DecompositionFailure("a reflection in Phi_chi does not fix the inertial image");
  }
  std::set<size_t> c(cg.c_chi.begin(), cg.c_chi.end());
  size_t meet = 0;
  for (size_t w : cg.reflection) meet += c.count(w);
  if (meet != 1) throw DecompositionFailure("W°_chi and C_chi meet nontrivially");
  if (cg.reflection.size() * cg.c_chi.size() != cg.stabilizer.size()) {
    throw DecompositionFailure("|W(chi)| != |W°_chi| * |C_chi|");
  }
  std::set<size_t> products;
  for (size_t a : cg.reflection) {
    for (size_t b : cg.c_chi) products.insert(W.multiply(a, b));
  }
  if (products != stab) throw DecompositionFailure("W°_chi * C_chi does not exhaust W(chi)");
  cg.abelian = is_abelian(W, cg.c_chi);
  return cg;
}

Ramification analyze_ramification(const RootDatum& rd, const WeylGroup& W, const InertialDatum& S) {
  S.validate(rd.rank());
  Ramification r;
  r.inertial = S;
  r.c = conductor_function(rd, S);
  r.f = roche_f(rd, r.c);
  r.divergences = f_divergences(rd, r.c);
  r.phi = phi_chi(rd, r.c);
  r.cg = c_group(rd, W, S, r.phi);
  r.artin = artin_conductor_ramified(r.c);
  return r;
}

}  // namespace hii
