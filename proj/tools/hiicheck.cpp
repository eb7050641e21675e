#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hiicheck/errors.hpp"
#include "hiicheck/io.hpp"

using hii::io::json;

namespace {

constexpr int kIdentityViolation = 1;
constexpr int kInputError = 2;

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw hii::InvalidInput("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw hii::InvalidInput(path + ": " + e.what());
  }
}

std::string vec(const json& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].dump();
  return out + ")";
}

std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_ramification(const json& r) {
  std::cout << "depth " << r["depth"] << ", Artin conductor a = " << r["artin_conductor"] << "\n\n";
  std::cout << "  root            coroot          c   f   f(displayed)\n";
  for (const auto& row : r["conductors"]) {
    std::string root = vec(row["root"]), cor = vec(row["coroot"]);
    std::cout << "  " << std::left << std::setw(16) << root << std::setw(16) << cor << std::setw(4) << row["c"].dump()
              << std::setw(4) << row["f"].dump() << row["f_displayed"].dump()
              << (row["f"] != row["f_displayed"] ? "  <- rules differ" : "") << "\n";
  }
  if (!r["f_rule_divergences"].empty()) {
    std::cout << "\n  note: the displayed min{1, floor((c+1)/2)} rule differs from ceil(c/2) on "
              << r["f_rule_divergences"].size() << " root(s)\n";
  }
  if (!r["concavity_violations"].empty()) {
    const auto& v = r["concavity_violations"][0];
    std::cout << "  note: f is not concave here (" << r["concavity_violations"].size() << " triple(s)), e.g. f"
              << vec(v["alpha"]) << " + f" << vec(v["beta"]) << " < f" << vec(v["sum"]) << "\n";
  }
  std::cout << "\nPhi_chi: " << r["phi_chi"].size() << " roots, H° type " << str(r["h_datum"]["type"]) << "\n";
  std::cout << "|W(chi)| = " << r["weyl_stabilizer_order"] << ", |W°_chi| = " << r["reflection_subgroup_order"]
            << ", |C_chi| = " << r["c_chi_order"] << (r["c_chi_abelian"].get<bool>() ? " (abelian)" : " (non-abelian)") << "\n";
  if (r["c_chi_order"].get<size_t>() > 1) {
    std::cout << "C_chi words:";
    for (const auto& w : r["c_chi"]) {
      std::cout << " ";
      if (w.empty()) std::cout << "1";
      for (const auto& s : w) std::cout << "s" << s.get<long>() + 1;
    }
    std::cout << "\n";
  }
}

void print_volumes(const json& v) {
  std::cout << "vol(I)        = " << str(v["vol_I"]) << "\n"
            << "vol(I_H)      = " << str(v["vol_I_H"]) << "\n"
            << "vol(J_chi)    = " << str(v["vol_J"]) << "\n"
            << "[I : J_chi]   = " << str(v["index_I_over_J"]) << "  (q^" << v["index_exponent"] << ")\n"
            << "vol ratio     = " << str(v["ratio"]) << "\n"
            << "|eps_ram|     = " << str(v["epsilon_ram"]) << "\n";
}

void print_wd(const json& wd) {
  std::cout << "ramified lines: " << wd["ramified_lines"].size() << "\n";
  std::cout << "strands (mu, m):";
  for (const auto& s : wd["strands"]) std::cout << " (" << str(s["mu"]) << ", " << s["m"] << ")";
  std::cout << "\n";
}

void print_chain(const json& c) {
  std::cout << "theorem chain: " << str(c["outcome"]) << "\n";
  for (const auto& cl : c["clauses"]) {
    std::cout << "  [" << str(cl["status"]) << "] " << str(cl["name"]);
    if (!str(cl["detail"]).empty()) std::cout << "\n      " << str(cl["detail"]);
    std::cout << "\n";
  }
}

int emit(const json& j, bool as_json, void (*text)(const json&)) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    text(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for principal-series formal degrees via root data and adjoint gamma factors"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "conductors, Phi_chi, H, C_chi and volumes of a block");
  analyze->add_option("block", file, "block JSON file ('-' for stdin)")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");

  auto* gamma = app.add_subcommand("gamma", "adjoint Weil-Deligne decomposition, L values and |gamma(0)|^2");
  gamma->add_option("param", file, "parameter JSON file ('-' for stdin)")->required();
  gamma->add_flag("--json", as_json, "machine-readable output");

  auto* rhs = app.add_subcommand("hii-rhs", "right-hand side of the formal degree formula (with the theorem chain)");
  rhs->add_option("block", file, "block JSON file ('-' for stdin)")->required();
  rhs->add_flag("--json", as_json, "machine-readable output");

  auto* chain = app.add_subcommand("chain", "theorem chain check for a Steinberg-type block");
  chain->add_option("block", file, "block JSON file ('-' for stdin)")->required();
  chain->add_flag("--json", as_json, "machine-readable output");

  hii::VerifyOptions vopt;
  std::string lattices = "sc,ad";
  bool sequential = false;
  auto* verify = app.add_subcommand("verify", "randomized identity sweep over named root data");
  verify->add_option("--max-rank", vopt.max_rank, "largest rank swept")->capture_default_str();
  verify->add_option("--lattices", lattices, "comma separated subset of sc,ad")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "random inertial data per datum")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "RNG seed")->capture_default_str();
  verify->add_flag("--sequential", sequential, "run data one after another");
  verify->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      return emit(hii::io::analyze_json(read_json(file)), as_json, [](const json& j) {
        std::cout << "datum " << str(j["datum"]["type"]) << " (rank " << j["datum"]["rank"] << "), q = " << str(j["q"])
                  << (j["center_connected"].get<bool>() ? ", connected center" : ", disconnected center") << "\n";
        if (j.contains("condition")) {
          const auto& c = j["condition"];
          std::cout << "residue characteristic p = " << c["p"] << ": "
                    << (c["satisfied"].get<bool>() ? "allowed" : "WARNING excluded") << "\n";
        }
        print_ramification(j["ramification"]);
        std::cout << "\n";
        print_volumes(j["volumes"]);
      });
    }
    if (gamma->parsed()) {
      return emit(hii::io::gamma_json(read_json(file)), as_json, [](const json& j) {
        std::cout << "datum " << str(j["datum"]["type"]) << ", q = " << str(j["wd"]["q"]) << "\n";
        print_wd(j["wd"]);
        std::cout << "discrete: " << (j["discrete"].get<bool>() ? "yes" : "no") << "\n";
        for (const char* k : {"L_0", "L_1_dual", "gamma_ramified_abs_squared", "gamma_unramified_abs_squared", "gamma_abs_squared"}) {
          std::cout << std::left << std::setw(30) << k << " = "
                    << (j[k].is_null() ? j[std::string(k) + "_flag"].get<std::string>() : str(j[k])) << "\n";
        }
      });
    }
    if (rhs->parsed()) {
      json in = read_json(file);
      json report = hii::io::hii_rhs_json(in);
      int code = 0;
      if (report["steinberg_type"].get<bool>()) {
        report["theorem_chain"] = hii::io::chain_json(in);
        if (!report["theorem_chain"]["ok"].get<bool>()) code = kIdentityViolation;
      }
      emit(report, as_json, [](const json& j) {
        std::cout << "datum " << str(j["datum"]["type"]) << ", H° " << str(j["ramification"]["h_datum"]["type"])
                  << ", |C_chi| = " << j["ramification"]["c_chi_order"] << "\n";
        print_volumes(j["volumes"]);
        print_wd(j["wd"]);
        std::cout << "|gamma(0)|^2   = " << str(j["gamma_abs_squared"]) << "\n"
                  << "|S#|           = " << str(j["s_sharp"]) << "\n"
                  << "dim rho        = " << str(j["dim_rho"]) << "\n"
                  << "rhs^2          = " << str(j["rhs_squared"]) << "\n"
                  << "rhs            ~ " << str(j["rhs_decimal"]) << "\n";
        for (const auto& n : j["notes"]) std::cout << "note: " << str(n) << "\n";
        std::cout << "(" << str(j["measure_note"]) << ")\n";
        if (j.contains("theorem_chain")) print_chain(j["theorem_chain"]);
      });
      return code;
    }
    if (chain->parsed()) {
      json c = hii::io::chain_json(read_json(file));
      emit(c, as_json, print_chain);
      return c["ok"].get<bool>() ? 0 : kIdentityViolation;
    }
    if (verify->parsed()) {
      vopt.lattices.clear();
      std::stringstream ls(lattices);
      for (std::string l; std::getline(ls, l, ',');) {
        if (!l.empty()) vopt.lattices.push_back(l);
      }
      vopt.parallel = !sequential;
      hii::VerifySummary s = hii::verify_suite(vopt);
      if (as_json) {
        std::cout << hii::io::to_json(s).dump(2) << "\n";
      } else {
        std::cout << s.render();
      }
      return s.all_identities_pass() ? 0 : kIdentityViolation;
    }
  } catch (const hii::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == hii::ErrorKind::IdentityViolation ? kIdentityViolation : kInputError;
  }
  return 0;
}
