#include "hiicheck/hii.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

bool same_pairings(const RootDatum& rd, const Vec& a, const Vec& b) {
  for (const auto& cor : rd.coroots()) {
    if (dot(a, cor) != dot(b, cor)) return false;
  }
  return true;
}

Scalar square(const Rational& r) { return Scalar(r * r); }

}  // namespace

BlockContext BlockContext::build(const BlockInput& b) {
  if (b.q <= 1) throw InvalidInput("q must be a rational > 1");
  BlockContext ctx{b, WeylGroup::enumerate(b.rd), {}, {}, {}, {}, false};
  ctx.ram = analyze_ramification(b.rd, ctx.W, b.inertial);
  ctx.s = b.s ? *b.s : TorusElement::one(b.rd.rank());
  if (ctx.s.size() != b.rd.rank()) throw InvalidInput("s must have " + std::to_string(b.rd.rank()) + " coordinates");
  ctx.phi_a = steinberg_subsystem(b.rd, ctx.ram, ctx.s);
  Vec principal = principal_sl2_cocharacter(b.rd, ctx.phi_a);
  if (b.steinberg) {
    ctx.h = principal;
    ctx.steinberg_type = true;
  } else {
    if (b.h.size() != b.rd.rank()) throw InvalidInput("h must have " + std::to_string(b.rd.rank()) + " coordinates");
    ctx.h = b.h;
    ctx.steinberg_type = same_pairings(b.rd, b.h, principal);
  }
  return ctx;
}

HiiReport hii_rhs(const BlockInput& b) {
  BlockContext ctx = BlockContext::build(b);
  HiiReport rep;
  rep.ram = ctx.ram;
  rep.volumes = volume_ratio_and_epsilon(b.rd, ctx.ram, b.q);
  rep.wd = adjoint_wd(b.rd, ctx.ram.c, ctx.parameter());
  rep.steinberg_type = ctx.steinberg_type;
  if (!is_discrete(b.rd, rep.wd)) throw NotDiscrete("parameter is not discrete: its centralizer is infinite modulo the center");
  rep.gamma_sq = gamma_abs_squared_at_zero(modulo_center(b.rd, rep.wd));

  if (ctx.steinberg_type) {
    if (b.overrides.any()) throw InvalidInput("overrides are only accepted for parameters that are not Steinberg-type");
    SSharp ss = s_sharp_steinberg(b.rd, ctx.W, ctx.ram, ctx.s);
    rep.s_sharp = ss.g.order;
    // dim rho_pi = [C_chi : C_nu] * dim rho_nu with dim rho_nu = 1
    rep.dim_rho = static_cast<unsigned long>(ss.c_chi / ss.c_nu);
    if (ss.c_nu != ss.c_chi) {
      rep.notes.push_back("C_nu is a proper subgroup of C_chi for this s; the enhancement bookkeeping "
                          "dim rho = [C_chi:C_nu] does not match the computed S# (see theorem chain clause iii)");
    }
    rep.s_sharp_detail = ss;
  } else {
    if (!b.overrides.dim_rho || !b.overrides.s_sharp) {
      throw MissingEnhancement("parameter is not Steinberg-type: supply dim_rho and s_sharp overrides");
    }
    if (*b.overrides.dim_rho < 1 || *b.overrides.s_sharp < 1) throw InvalidInput("overrides must be positive");
    rep.dim_rho = *b.overrides.dim_rho;
    rep.s_sharp = *b.overrides.s_sharp;
  }
  Rational factor(rep.dim_rho, rep.s_sharp);
  factor.canonicalize();
  rep.rhs_squared = square(factor) * rep.gamma_sq;
  if (rep.rhs_squared.is_rational()) {
    rep.rhs_decimal = sqrt_to_decimal(rep.rhs_squared.to_rational(), 12);
  } else {
    rep.notes.push_back("rhs^2 is not rational; no decimal rendering");
  }
  return rep;
}

std::string_view to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Holds: return "holds";
    case ClauseStatus::Violated: return "violated";
    case ClauseStatus::Vacuous: return "vacuous";
  }
  return "?";
}

bool ChainReport::ok() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.status == ClauseStatus::Violated; });
}

ChainReport theorem_chain_check(const BlockInput& b) {
  BlockContext ctx = BlockContext::build(b);
  if (!ctx.steinberg_type) throw NotSteinbergType("theorem chain check needs a Steinberg-type parameter");
  const RootDatum& rd = b.rd;
  const Rational& q = b.q;
  ChainReport rep;
  rep.clauses.resize(4);
  rep.clauses[0].name = "(i) vol(I_H)/vol(J) = |eps_ram|";
  rep.clauses[1].name = "(ii) |gamma_G|^2 = |eps_ram|^2 |gamma_H|^2";
  rep.clauses[2].name = "(iii) |S#_phi| = |S#_phi'| |C_chi|";
  rep.clauses[3].name = "(iv) assembled right-hand sides agree";

  std::optional<VolumeReport> vol;
  try {
    vol = volume_ratio_and_epsilon(rd, ctx.ram, q);
    rep.clauses[0].status = ClauseStatus::Holds;
    rep.clauses[0].detail = "ratio = " + vol->ratio.to_string();
  } catch (const IdentityViolation& e) {
    rep.clauses[0].status = ClauseStatus::Violated;
    rep.clauses[0].detail = e.what();
  }

  Parameter p = ctx.parameter();
  WDAdjointRep wd_g = adjoint_wd(rd, ctx.ram.c, p);
  const RootDatum& hd = ctx.ram.phi.h_datum;
  Parameter ph{InertialDatum::trivial(), ctx.s, ctx.h, q};
  WDAdjointRep wd_h = adjoint_wd(hd, ConductorData(hd.num_roots(), 0), ph);
  rep.discrete = is_discrete(rd, wd_g);

  std::optional<Scalar> gamma_g, gamma_h;
  try {
    gamma_g = gamma_abs_squared_at_zero(modulo_center(rd, wd_g));
    gamma_h = gamma_abs_squared_at_zero(modulo_center(hd, wd_h));
  } catch (const Error&) {
    gamma_g.reset();
    gamma_h.reset();
  }
  {
    Clause& c = rep.clauses[1];
    const Scalar eps_sq = Scalar(pow(q, ctx.ram.artin));
    if (wd_g.strands != wd_h.strands) {
      c.status = ClauseStatus::Violated;
      c.detail = "strand tables of G and H° differ";
    } else if (!gamma_g) {
      c.status = ClauseStatus::Holds;
      c.detail = "strand tables agree; gamma is degenerate at 0";
    } else if (*gamma_g == eps_sq * *gamma_h) {
      c.status = ClauseStatus::Holds;
      c.detail = "|gamma_G|^2 = " + gamma_g->to_string() + ", |gamma_H|^2 = " + gamma_h->to_string();
    } else {
      c.status = ClauseStatus::Violated;
      c.detail = "|gamma_G|^2 = " + gamma_g->to_string() + " but |eps|^2 |gamma_H|^2 = " + (eps_sq * *gamma_h).to_string();
    }
  }

  if (!rep.discrete) {
    bool any = ctx.ram.phi.h_datum.semisimple_rank() == rd.semisimple_rank();
    rep.outcome = any ? "parameter not discrete" : "no discrete parameters";
    rep.clauses[2].detail = rep.clauses[3].detail = rep.outcome;
    return rep;
  }

  SSharp ss = s_sharp_steinberg(rd, ctx.W, ctx.ram, ctx.s);
  {
    Clause& c = rep.clauses[2];
    Integer rhs = ss.h.order * static_cast<unsigned long>(ss.c_chi);
    c.status = ss.g.order == rhs ? ClauseStatus::Holds : ClauseStatus::Violated;
    c.detail = "|S#_phi| = " + ss.g.order.get_str() + ", |S#_phi'| = " + ss.h.order.get_str() +
               ", |C_chi| = " + std::to_string(ss.c_chi) + ", |C_nu| = " + std::to_string(ss.c_nu);
  }
  {
    Clause& c = rep.clauses[3];
    const long dim_rho_nu = 1;
    const Integer dim_rho = dim_rho_nu * static_cast<long>(ss.c_chi / ss.c_nu);
    if (!gamma_g || !vol) {
      c.status = ClauseStatus::Violated;
      c.detail = "gamma or volume ratio unavailable for a discrete parameter";
    } else {
      Rational left_factor(dim_rho_nu, Integer(static_cast<unsigned long>(ss.c_nu)) * ss.h.order);
      left_factor.canonicalize();
      Rational right_factor(dim_rho, ss.g.order);
      right_factor.canonicalize();
      Scalar lhs = vol->ratio * vol->ratio * square(left_factor) * *gamma_h;
      Scalar rhs = square(right_factor) * *gamma_g;
      c.status = lhs == rhs ? ClauseStatus::Holds : ClauseStatus::Violated;
      c.detail = "lhs^2 = " + lhs.to_string() + ", rhs^2 = " + rhs.to_string();
    }
  }
  rep.outcome = rep.ok() ? "all clauses hold" : "identity violated";
  return rep;
}

// ---------------------------------------------------------------------------
// randomized sweep

std::vector<std::string> sweep_types(int max_rank) {
  const std::vector<std::pair<std::string, int>> all = {
      {"A1", 1}, {"A2", 2}, {"B2", 2}, {"C2", 2}, {"G2", 2}, {"A1xA1", 2},
      {"A3", 3}, {"B3", 3}, {"C3", 3}, {"A1xA2", 3}, {"A1xA1xA1", 3}};
  std::vector<std::string> out;
  for (const auto& [t, r] : all) {
    if (r <= max_rank) out.push_back(t);
  }
  return out;
}

InertialDatum random_inertial(size_t rank, std::mt19937_64& rng, long wild_prime) {
  static const long tame_orders[] = {2, 3, 4, 6};
  std::uniform_int_distribution<int> depth_dist(1, 3);
  std::uniform_int_distribution<int> count_dist(1, 2);
  std::uniform_int_distribution<int> tame_pick(0, 3);
  std::uniform_int_distribution<long> wild_num(0, wild_prime * wild_prime - 1);
  std::uniform_int_distribution<long> coef(0, wild_prime - 1);
  auto random_point = [&](long d, auto& num) {
    std::vector<Rational> c(rank);
    for (auto& x : c) x = Rational(num(rng), d);
    return TorsionPoint(std::move(c));
  };

  const int depth = depth_dist(rng);
  std::vector<std::vector<TorsionPoint>> wild;
  if (depth > 1) {
    std::vector<TorsionPoint> level;
    const long d = wild_prime * wild_prime;
    for (int g = count_dist(rng); g > 0; --g) level.push_back(random_point(d, wild_num));
    wild.push_back(level);
    for (int j = 2; j < depth; ++j) {
      std::vector<TorsionPoint> next;
      for (int g = count_dist(rng); g > 0; --g) {
        TorsionPoint t = TorsionPoint::zero(rank);
        for (const auto& prev : wild.back()) t = t + prev.scaled(coef(rng) * (g == 1 ? wild_prime : 1));
        next.push_back(t);
      }
      wild.push_back(next);
    }
  }

  const long d = tame_orders[tame_pick(rng)];
  std::uniform_int_distribution<long> tame_num(0, d - 1);
  InertialDatum S;
  S.levels.push_back({random_point(d, tame_num)});
  if (!wild.empty()) {
    for (const auto& t : wild.front()) S.levels.front().push_back(t);
  }
  for (auto& level : wild) S.levels.push_back(std::move(level));
  S.levels.push_back({});
  return S;
}

namespace {

// Same group, different generators.
std::vector<TorsionPoint> regenerate(const std::vector<TorsionPoint>& gens, std::mt19937_64& rng) {
  if (gens.empty()) return gens;
  std::uniform_int_distribution<long> coef(1, 5);
  if (gens.size() == 1) {
    long n = gens[0].order();
    long k = coef(rng);
    while (std::gcd(k, n) != 1) ++k;
    return {gens[0].scaled(k)};
  }
  std::vector<TorsionPoint> out = gens;
  out[0] = gens[0] + gens[1].scaled(coef(rng));
  std::swap(out[0], out[1]);
  return out;
}

struct Tallies {
  std::vector<IdentityTally> identities;
  std::vector<IdentityTally> claims;
  std::map<std::string, size_t> index;
  std::map<std::string, size_t> claim_index;

  void record(std::vector<IdentityTally>& list, std::map<std::string, size_t>& idx, const std::string& name, bool ok,
              const std::function<std::string()>& witness) {
    auto it = idx.find(name);
    if (it == idx.end()) {
      it = idx.emplace(name, list.size()).first;
      list.push_back({name, 0, 0, ""});
    }
    IdentityTally& t = list[it->second];
    if (ok) {
      ++t.passed;
    } else {
      if (t.failed == 0) t.first_counterexample = witness();
      ++t.failed;
    }
  }
  void identity(const std::string& name, bool ok, const std::function<std::string()>& witness) {
    record(identities, index, name, ok, witness);
  }
  void claim(const std::string& name, bool ok, const std::function<std::string()>& witness) {
    record(claims, claim_index, name, ok, witness);
  }
};

std::string describe(const std::string& type, const std::string& lattice, const InertialDatum& S) {
  std::ostringstream os;
  os << type << " " << lattice << " levels=[";
  for (size_t j = 0; j < S.levels.size(); ++j) {
    if (j) os << ", ";
    os << "[";
    for (size_t g = 0; g < S.levels[j].size(); ++g) {
      if (g) os << ", ";
      os << S.levels[j][g].to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Tallies verify_datum(const std::string& type, const std::string& lattice, int trials, unsigned long long seed) {
  Tallies tal;
  RootDatum rd = RootDatum::from_type(type, lattice == "ad" ? LatticeChoice::ad() : LatticeChoice::sc());
  WeylGroup W = WeylGroup::enumerate(rd);
  const bool connected = center_is_connected(rd);
  const Rational q(7, 2);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    InertialDatum S = random_inertial(rd.rank(), rng);
    auto who = [&]() { return describe(type, lattice, S); };
    Ramification ram;
    try {
      ram = analyze_ramification(rd, W, S);
      tal.identity("W(chi) = W°_chi x| C_chi", true, who);
    } catch (const Error& e) {
      tal.identity("W(chi) = W°_chi x| C_chi", false, [&]() { return who() + ": " + e.what(); });
      continue;
    }

    bool eq3 = true;
    try {
      volume_ratio_and_epsilon(rd, ram, q);
    } catch (const Error&) {
      eq3 = false;
    }
    tal.identity("vol(I_H)/vol(J) = |eps_ram|", eq3, who);

    VolumeReport vol;
    long index_exp = 0;
    Scalar index = index_I_over_J(rd, ram.c, q, &index_exp);
    tal.identity("vol(J) [I:J] = vol(I)", vol_iwahori(rd, q) / index * index == vol_iwahori(rd, q), who);

    bool fsum = true;
    for (size_t a = 0; a < rd.num_roots(); ++a) fsum = fsum && ram.f[a] + ram.f[rd.negative_of(a)] == ram.c[a];
    tal.identity("f(a) + f(-a) = c_a", fsum, who);

    long ramified_pos = 0;
    for (size_t a : rd.positive_roots()) ramified_pos += ram.c[a] != 0;
    tal.identity("dim G - dim H = 2 #{a > 0 : c_a != 0}",
                 static_cast<long>(rd.dimension() - ram.phi.h_datum.dimension()) == 2 * ramified_pos, who);

    bool invariant = true, stable = true;
    std::set<size_t> phi(ram.phi.roots.begin(), ram.phi.roots.end());
    for (size_t w : ram.cg.stabilizer) {
      const auto& perm = W.element(w).perm;
      for (size_t a = 0; a < rd.num_roots(); ++a) {
        invariant = invariant && ram.c[perm[a]] == ram.c[a];
        if (phi.count(a)) stable = stable && phi.count(perm[a]) > 0;
      }
    }
    tal.identity("c is W(chi)-invariant", invariant, who);
    tal.identity("Phi_chi is W(chi)-stable and coroot-closed", stable && is_coroot_closed(rd, ram.phi.roots), who);
    tal.identity("C_chi abelian", ram.cg.abelian, who);
    tal.identity("connected center => C_chi = 1", !connected || ram.cg.c_chi.size() == 1, who);

    TorusSubset A{S.generators(), {}};
    auto centralizer = connected_centralizer_subsystem(rd, A);
    tal.identity("Z(S)° roots = Phi_chi", centralizer == ram.phi.roots, who);
    Pi0Description pi0 = pi0_torus_subset_centralizer(rd, W, A);
    tal.identity("pi0(Z(S)) = |C_chi|", pi0.order == static_cast<unsigned long>(ram.cg.c_chi.size()), who);
    TorusSubset A2{regenerate(S.generators(), rng), {}};
    tal.identity("pi0 independent of generators", pi0_torus_subset_centralizer(rd, W, A2).order == pi0.order, who);
    tal.identity("dual of Psi_chi = datum of Z(S)°", rd.dual().subdatum(centralizer) == ram.phi.h_datum.dual(), who);

    tal.claim("f concave", concavity_violations(rd, ram.f).empty(), [&]() {
      auto v = concavity_violations(rd, ram.f).front();
      std::ostringstream os;
      os << who() << ": f(" << v.alpha << ") + f(" << v.beta << ") = " << ram.f[v.alpha] + ram.f[v.beta] << " < f("
         << v.sum << ") = " << ram.f[v.sum];
      return os.str();
    });

    // Steinberg-type chain with s = 1 whenever the block admits discrete parameters
    if (ram.phi.h_datum.semisimple_rank() == rd.semisimple_rank()) {
      BlockInput b;
      b.rd = rd;
      b.inertial = S;
      b.q = q;
      ChainReport chain = theorem_chain_check(b);
      tal.identity("theorem chain (i)-(iv)", chain.ok() && chain.discrete, [&]() {
        std::string out = who();
        for (const auto& c : chain.clauses) out += "; " + c.name + ": " + std::string(to_string(c.status)) + " " + c.detail;
        return out;
      });
    }
  }
  return tal;
}

unsigned long long mix(unsigned long long seed, const std::string& key) {
  unsigned long long h = seed ^ 0x9E3779B97F4A7C15ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  h ^= h >> 31;
  return h;
}

}  // namespace

bool VerifySummary::all_identities_pass() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityTally& t) { return t.failed == 0; });
}

std::string VerifySummary::render() const {
  std::ostringstream os;
  os << "data:";
  for (const auto& d : data) os << " " << d;
  os << "\ntrials per datum: " << trials << "\n";
  os << "identities:\n";
  for (const auto& t : identities) {
    os << "  " << (t.failed == 0 ? "PASS" : "FAIL") << "  " << t.name << "  (" << t.passed << " pass, " << t.failed
       << " fail)\n";
    if (t.failed) os << "        first counterexample: " << t.first_counterexample << "\n";
  }
  if (!claims.empty()) {
    os << "claims checked (reported, not required):\n";
    for (const auto& t : claims) {
      os << "  " << (t.failed == 0 ? "HOLDS" : "FAILS") << " " << t.name << "  (" << t.passed << " hold, " << t.failed
         << " fail)\n";
      if (t.failed) os << "        first counterexample: " << t.first_counterexample << "\n";
    }
  }
  return os.str();
}

VerifySummary verify_suite(const VerifyOptions& options) {
  VerifySummary summary;
  summary.trials = std::max(0, options.trials);
  if (options.trials <= 0) return summary;
  std::vector<std::pair<std::string, std::string>> jobs;
  for (const auto& t : sweep_types(options.max_rank)) {
    for (const auto& l : options.lattices) {
      if (l != "sc" && l != "ad") throw InvalidInput("unknown lattice '" + l + "' (expected sc or ad)");
      jobs.emplace_back(t, l);
    }
  }
  std::vector<Tallies> results(jobs.size());
  if (options.parallel) {
    std::vector<std::future<Tallies>> futures;
    for (const auto& [t, l] : jobs) {
      futures.push_back(std::async(std::launch::async, verify_datum, t, l, options.trials, mix(options.seed, t + "/" + l)));
    }
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < jobs.size(); ++i) {
      results[i] = verify_datum(jobs[i].first, jobs[i].second, options.trials, mix(options.seed, jobs[i].first + "/" + jobs[i].second));
    }
  }
  Tallies total;
  for (size_t i = 0; i < jobs.size(); ++i) {
    summary.data.push_back(jobs[i].first + "/" + jobs[i].second);
    for (const auto& t : results[i].identities) {
      total.identity(t.name, true, [] { return std::string(); });
      auto& slot = total.identities[total.index[t.name]];
      slot.passed += t.passed - 1;
      if (t.failed && slot.failed == 0) slot.first_counterexample = t.first_counterexample;
      slot.failed += t.failed;
    }
    for (const auto& t : results[i].claims) {
      total.claim(t.name, true, [] { return std::string(); });
      auto& slot = total.claims[total.claim_index[t.name]];
      slot.passed += t.passed - 1;
      if (t.failed && slot.failed == 0) slot.first_counterexample = t.first_counterexample;
      slot.failed += t.failed;
    }
  }
  summary.identities = std::move(total.identities);
  summary.claims = std::move(total.claims);
  return summary;
}

}  // namespace hii
