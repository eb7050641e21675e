#include "hiicheck/io.hpp"

#include <regex>

#include "hiicheck/errors.hpp"

namespace hii::io {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

Vec int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
    v.push_back(x.get<long>());
  }
  return v;
}

std::vector<Vec> int_matrix(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integer vectors");
  std::vector<Vec> out;
  for (const auto& row : j) out.push_back(int_vector(row, what));
  return out;
}

json vec_json(const Vec& v) { return json(v); }

json words_json(const WeylGroup& W, const std::vector<size_t>& elements) {
  json out = json::array();
  for (size_t e : elements) out.push_back(W.element(e).word);
  return out;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as an integer or a string \"a/b\", got " + j.dump());
}

RootDatum datum_from_json(const json& j) {
  return guarded([&] {
    if (j.is_string()) return RootDatum::from_type(j.get<std::string>(), LatticeChoice::sc());
    if (j.contains("type")) {
      LatticeChoice lattice = LatticeChoice::sc();
      if (j.contains("lattice")) {
        const json& l = j.at("lattice");
        if (l.is_string()) {
          const std::string name = l.get<std::string>();
          if (name == "sc") {
            lattice = LatticeChoice::sc();
          } else if (name == "ad") {
            lattice = LatticeChoice::ad();
          } else {
            throw InvalidInput("lattice must be \"sc\", \"ad\" or {\"basis\": ...}, got \"" + name + "\"");
          }
        } else {
          lattice = LatticeChoice::with_basis(int_matrix(field(l, "basis"), "basis"));
        }
      }
      return RootDatum::from_type(field(j, "type").get<std::string>(), lattice);
    }
    auto roots = int_matrix(field(j, "roots"), "roots");
    auto coroots = int_matrix(field(j, "coroots"), "coroots");
    size_t rank = 0;
    if (j.contains("rank")) {
      rank = j.at("rank").get<size_t>();
    } else if (!roots.empty()) {
      rank = roots.front().size();
    } else {
      throw InvalidInput("a datum with no roots needs an explicit \"rank\"");
    }
    return RootDatum::from_lists(rank, std::move(roots), std::move(coroots));
  });
}

InertialDatum inertial_from_json(const json& j, size_t rank) {
  return guarded([&] {
    InertialDatum S;
    const json& levels = j.is_array() ? j : field(j, "levels");
    if (!levels.is_array()) throw InvalidInput("levels must be an array");
    for (const auto& level : levels) {
      std::vector<TorsionPoint> gens;
      for (const auto& g : level) {
        std::vector<Rational> c;
        for (const auto& x : g) c.push_back(rational_from_json(x));
        gens.emplace_back(std::move(c));
      }
      S.levels.push_back(std::move(gens));
    }
    if (S.levels.empty() || !S.levels.back().empty()) {
      // a missing trailing trivial level is implied
      bool trailing_trivial = !S.levels.empty() && std::all_of(S.levels.back().begin(), S.levels.back().end(),
                                                               [](const TorsionPoint& t) { return t.is_trivial(); });
      if (!trailing_trivial) S.levels.push_back({});
    }
    S.validate(rank);
    return S;
  });
}

Monomial monomial_from_json(const json& j) {
  return guarded([&] {
    if (j.is_object()) {
      long k = j.contains("q_half") ? j.at("q_half").get<long>() : 0;
      Rational z = j.contains("zeta") ? rational_from_json(j.at("zeta")) : Rational(0);
      return Monomial(k, z);
    }
    if (j.is_number_integer()) {
      long v = j.get<long>();
      if (v == 1) return Monomial::one();
      if (v == -1) return Monomial::root_of_unity(Rational(1, 2));
      throw InvalidInput("integer monomials must be 1 or -1");
    }
    if (!j.is_string()) throw InvalidInput("monomial must be a string or object, got " + j.dump());
    const std::string text = trim(j.get<std::string>());
    if (text == "1") return Monomial::one();
    if (text == "-1") return Monomial::root_of_unity(Rational(1, 2));
    static const std::regex factor(R"(\s*(?:q\^\(?\s*([-+]?\d+(?:/\d+)?)\s*\)?|zeta\(\s*([-+]?\d+(?:/\d+)?)\s*\))\s*)");
    Monomial m;
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
      if (!first) {
        if (text[pos] != '*') throw InvalidInput("cannot parse monomial \"" + text + "\"");
        ++pos;
      }
      std::smatch sm;
      std::string rest = text.substr(pos);
      if (!std::regex_search(rest, sm, factor, std::regex_constants::match_continuous)) {
        throw InvalidInput("cannot parse monomial \"" + text + "\"");
      }
      if (sm[1].matched) {
        Rational e = parse_rational(sm[1].str()) * 2;
        if (e.get_den() != 1) throw InvalidInput("q exponents must be half-integers in \"" + text + "\"");
        m = m * Monomial::q_power(to_long(e.get_num()));
      } else {
        m = m * Monomial::root_of_unity(parse_rational(sm[2].str()));
      }
      pos += sm.length(0);
      first = false;
    }
    if (first) throw InvalidInput("empty monomial");
    return m;
  });
}

TorusElement torus_from_json(const json& j, size_t rank) {
  return guarded([&] {
    if (!j.is_array() || j.size() != rank) {
      throw InvalidInput("torus element must be an array of " + std::to_string(rank) + " monomials");
    }
    std::vector<Monomial> c;
    for (const auto& x : j) c.push_back(monomial_from_json(x));
    return TorusElement(std::move(c));
  });
}

ParameterInput parameter_from_json(const json& j) {
  return guarded([&] {
    RootDatum rd = datum_from_json(field(j, "datum"));
    const size_t n = rd.rank();
    Parameter p;
    p.inertial = j.contains("inertial") ? inertial_from_json(j.at("inertial"), n) : InertialDatum::trivial();
    p.s = j.contains("s") ? torus_from_json(j.at("s"), n) : TorusElement::one(n);
    p.q = j.contains("q") ? rational_from_json(j.at("q")) : Rational(2);
    if (p.q <= 1) throw InvalidInput("q must be > 1");
    if (j.contains("h") && j.at("h").is_string() && j.at("h").get<std::string>() == "principal") {
      WeylGroup W = WeylGroup::enumerate(rd);
      auto ram = analyze_ramification(rd, W, p.inertial);
      p.h = principal_sl2_cocharacter(rd, steinberg_subsystem(rd, ram, p.s));
    } else {
      p.h = j.contains("h") ? int_vector(j.at("h"), "h") : Vec(n, 0);
    }
    if (p.h.size() != n) throw InvalidInput("h must have " + std::to_string(n) + " entries");
    return ParameterInput{std::move(rd), std::move(p)};
  });
}

BlockInput block_from_json(const json& j) {
  return guarded([&] {
    BlockInput b;
    b.rd = datum_from_json(field(j, "datum"));
    const size_t n = b.rd.rank();
    if (j.contains("inertial")) b.inertial = inertial_from_json(j.at("inertial"), n);
    if (j.contains("q")) b.q = rational_from_json(j.at("q"));
    if (b.q <= 1) throw InvalidInput("q must be > 1");
    if (j.contains("parameter")) {
      const json& p = j.at("parameter");
      if (p.is_string()) {
        if (p.get<std::string>() != "steinberg") throw InvalidInput("parameter must be \"steinberg\" or an object");
      } else {
        if (p.contains("s")) b.s = torus_from_json(p.at("s"), n);
        b.steinberg = p.value("steinberg", !p.contains("h"));
        if (!b.steinberg) b.h = int_vector(field(p, "h"), "h");
      }
    }
    if (j.contains("overrides")) {
      const json& o = j.at("overrides");
      auto take = [&](const char* key, std::optional<long>& slot) {
        if (!o.contains(key)) return;
        long v = o.at(key).get<long>();
        if (v < 1) throw InvalidInput(std::string("override ") + key + " must be a positive integer");
        slot = v;
      };
      take("dim_rho", b.overrides.dim_rho);
      take("s_sharp", b.overrides.s_sharp);
      take("c_nu_order", b.overrides.c_nu_order);
      take("dim_rho_nu", b.overrides.dim_rho_nu);
    }
    return b;
  });
}

json to_json(const Scalar& s) { return s.to_string(); }
json to_json(const Monomial& m) { return m.to_string(); }

json to_json(const TorusElement& t) {
  json out = json::array();
  for (const auto& m : t.coords) out.push_back(m.to_string());
  return out;
}

json to_json(const RootDatum& rd) {
  json out;
  out["type"] = rd.type_label();
  out["rank"] = rd.rank();
  out["semisimple_rank"] = rd.semisimple_rank();
  out["dimension"] = rd.dimension();
  json roots = json::array(), coroots = json::array();
  for (size_t a : rd.positive_roots()) {
    roots.push_back(vec_json(rd.root(a)));
    coroots.push_back(vec_json(rd.coroot(a)));
  }
  out["positive_roots"] = roots;
  out["positive_coroots"] = coroots;
  return out;
}

json to_json(const InertialDatum& S) {
  json levels = json::array();
  for (const auto& level : S.levels) {
    json l = json::array();
    for (const auto& g : level) {
      json c = json::array();
      for (const auto& x : g.coords) c.push_back(x.get_str());
      l.push_back(c);
    }
    levels.push_back(l);
  }
  return json{{"levels", levels}};
}

json to_json(const Pi0Description& p) {
  json inv = json::array();
  for (const auto& d : p.torus_part_invariants) inv.push_back(d.get_str());
  return json{{"order", p.order.get_str()},
              {"weyl_part", p.weyl_part},
              {"torus_part_invariants", inv},
              {"free_rank", p.free_rank}};
}

json ramification_json(const RootDatum& rd, const WeylGroup& W, const Ramification& ram) {
  auto displayed = displayed_f(rd, ram.c);
  json table = json::array();
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    table.push_back({{"root", vec_json(rd.root(a))},
                     {"coroot", vec_json(rd.coroot(a))},
                     {"positive", rd.is_positive(a)},
                     {"c", ram.c[a]},
                     {"f", ram.f[a]},
                     {"f_displayed", displayed[a]}});
  }
  json divergent = json::array();
  for (size_t a : ram.divergences) divergent.push_back(vec_json(rd.root(a)));
  json phi = json::array();
  for (size_t a : ram.phi.roots) phi.push_back(vec_json(rd.root(a)));
  json concavity = json::array();
  for (const auto& v : concavity_violations(rd, ram.f)) {
    concavity.push_back({{"alpha", vec_json(rd.root(v.alpha))}, {"beta", vec_json(rd.root(v.beta))}, {"sum", vec_json(rd.root(v.sum))}});
  }
  return json{{"inertial", to_json(ram.inertial)},
              {"depth", ram.inertial.depth()},
              {"conductors", table},
              {"f_rule_divergences", divergent},
              {"concavity_violations", concavity},
              {"phi_chi", phi},
              {"h_datum", to_json(ram.phi.h_datum)},
              {"weyl_stabilizer_order", ram.cg.stabilizer.size()},
              {"reflection_subgroup_order", ram.cg.reflection.size()},
              {"c_chi_order", ram.cg.c_chi.size()},
              {"c_chi", words_json(W, ram.cg.c_chi)},
              {"c_chi_abelian", ram.cg.abelian},
              {"artin_conductor", ram.artin}};
}

json to_json(const VolumeReport& v) {
  return json{{"vol_I", to_json(v.vol_I)},
              {"vol_I_H", to_json(v.vol_I_H)},
              {"vol_J", to_json(v.vol_J)},
              {"index_I_over_J", to_json(v.index_I_over_J)},
              {"index_exponent", v.index_exponent},
              {"ratio", to_json(v.ratio)},
              {"epsilon_ram", to_json(v.epsilon_ram)},
              {"ratio_equals_epsilon", v.ratio == v.epsilon_ram}};
}

json to_json(const WDAdjointRep& wd) {
  json ram = json::array();
  for (const auto& l : wd.ramified) ram.push_back({{"root", l.root}, {"c", l.c}, {"eigenvalue", to_json(l.eigenvalue)}});
  json strands = json::array();
  for (const auto& s : wd.strands) strands.push_back({{"mu", to_json(s.mu)}, {"m", s.m}});
  return json{{"q", wd.q.get_str()}, {"ramified_lines", ram}, {"strands", strands}};
}

json to_json(const HiiReport& r, const RootDatum& rd, const WeylGroup& W) {
  json out;
  out["datum"] = to_json(rd);
  out["ramification"] = ramification_json(rd, W, r.ram);
  out["volumes"] = to_json(r.volumes);
  out["wd"] = to_json(r.wd);
  out["gamma_abs_squared"] = to_json(r.gamma_sq);
  out["steinberg_type"] = r.steinberg_type;
  out["s_sharp"] = r.s_sharp.get_str();
  out["dim_rho"] = r.dim_rho.get_str();
  if (r.s_sharp_detail) {
    out["s_sharp_detail"] = {{"g", to_json(r.s_sharp_detail->g)},
                             {"h", to_json(r.s_sharp_detail->h)},
                             {"c_chi", r.s_sharp_detail->c_chi},
                             {"c_nu", r.s_sharp_detail->c_nu}};
  }
  out["rhs_squared"] = to_json(r.rhs_squared);
  out["rhs_decimal"] = r.rhs_decimal;
  out["notes"] = r.notes;
  out["measure_note"] = "volumes use vol(I) = q^-(dim G + dim T)/2 (q-1)^rank; absolute values are relative to this normalization";
  return out;
}

json to_json(const ChainReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  return json{{"clauses", clauses}, {"discrete", r.discrete}, {"outcome", r.outcome}, {"ok", r.ok()}};
}

json to_json(const VerifySummary& s) {
  auto tallies = [](const std::vector<IdentityTally>& list) {
    json out = json::array();
    for (const auto& t : list) {
      json e{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}};
      if (t.failed) e["first_counterexample"] = t.first_counterexample;
      out.push_back(e);
    }
    return out;
  };
  return json{{"data", s.data},
              {"trials", s.trials},
              {"identities", tallies(s.identities)},
              {"claims", tallies(s.claims)},
              {"all_identities_pass", s.all_identities_pass()}};
}

json analyze_json(const json& block) {
  BlockInput b = block_from_json(block);
  WeylGroup W = WeylGroup::enumerate(b.rd);
  Ramification ram = analyze_ramification(b.rd, W, b.inertial);
  json out;
  out["datum"] = to_json(b.rd);
  out["center_connected"] = center_is_connected(b.rd);
  out["ramification"] = ramification_json(b.rd, W, ram);
  out["volumes"] = to_json(volume_ratio_and_epsilon(b.rd, ram, b.q));
  out["q"] = b.q.get_str();
  if (block.contains("p")) {
    ConditionReport cr = condition_check(b.rd, block.at("p").get<long>());
    out["condition"] = {{"p", block.at("p").get<long>()}, {"satisfied", cr.satisfied}, {"excluded_primes", cr.excluded}, {"lines", cr.lines}};
  }
  return out;
}

json gamma_json(const json& param) {
  ParameterInput in = parameter_from_json(param);
  WDAdjointRep wd = adjoint_wd(in.rd, in.p);
  json out;
  out["datum"] = to_json(in.rd);
  out["wd"] = to_json(wd);
  out["discrete"] = is_discrete(in.rd, wd);
  auto attempt = [&](const char* key, auto&& f) {
    try {
      out[key] = to_json(f());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleFlag && e.kind() != ErrorKind::ZeroFlag) throw;
      out[key] = nullptr;
      out[std::string(key) + "_flag"] = std::string(hii::to_string(e.kind()));
    }
  };
  attempt("L_0", [&] { return l_value(wd, 0, false); });
  attempt("L_1_dual", [&] { return l_value(wd, 1, true); });
  out["gamma_ramified_abs_squared"] = to_json(gamma_ramified_abs_squared(wd));
  attempt("gamma_unramified_abs_squared", [&] { return gamma_unramified_abs_squared(wd); });
  attempt("gamma_abs_squared", [&] { return gamma_abs_squared_at_zero(wd); });
  if (in.rd.rank() > in.rd.semisimple_rank()) {
    attempt("gamma_abs_squared_mod_center", [&] { return gamma_abs_squared_at_zero(modulo_center(in.rd, wd)); });
  }
  return out;
}

json hii_rhs_json(const json& block) {
  BlockInput b = block_from_json(block);
  HiiReport r = hii_rhs(b);
  WeylGroup W = WeylGroup::enumerate(b.rd);
  return to_json(r, b.rd, W);
}

json chain_json(const json& block) { return to_json(theorem_chain_check(block_from_json(block))); }

}  // namespace hii::io
