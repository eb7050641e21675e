#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hiicheck/centralizers.hpp"
#include "hiicheck/parameters.hpp"
#include "hiicheck/volumes.hpp"

namespace hii {

struct Overrides {
  std::optional<long> dim_rho;
  std::optional<long> s_sharp;
  std::optional<long> c_nu_order;
  std::optional<long> dim_rho_nu;
  bool any() const { return dim_rho || s_sharp || c_nu_order || dim_rho_nu; }
};

struct BlockInput {
  RootDatum rd;
  InertialDatum inertial = InertialDatum::trivial();
  bool steinberg = true;  // h is the principal cocharacter of Phi_A
  std::optional<TorusElement> s;  // defaults to 1
  Vec h;                  // used when !steinberg
  Rational q = 2;
  Overrides overrides;
};

/// Weyl group and ramification data of a block, computed once.
struct BlockContext {
  BlockInput input;
  WeylGroup W;
  Ramification ram;
  TorusElement s;
  Vec h;
  std::vector<size_t> phi_a;
  bool steinberg_type = false;

  static BlockContext build(const BlockInput& b);
  Parameter parameter() const { return {ram.inertial, s, h, input.q}; }
};

struct HiiReport {
  Ramification ram;
  VolumeReport volumes;
  WDAdjointRep wd;
  Scalar gamma_sq;
  bool steinberg_type = false;
  Integer s_sharp;
  Integer dim_rho;
  std::optional<SSharp> s_sharp_detail;
  Scalar rhs_squared;
  std::string rhs_decimal;
  std::vector<std::string> notes;
};

HiiReport hii_rhs(const BlockInput& b);

enum class ClauseStatus { Holds, Violated, Vacuous };
std::string_view to_string(ClauseStatus s);

struct Clause {
  std::string name;
  ClauseStatus status = ClauseStatus::Vacuous;
  std::string detail;
};

struct ChainReport {
  std::vector<Clause> clauses;  // (i)..(iv)
  bool discrete = false;
  std::string outcome;          // "all clauses hold", "no discrete parameters", ...
  bool ok() const;
};

/// Throws NotSteinbergType for a non Steinberg-type parameter.
ChainReport theorem_chain_check(const BlockInput& b);

struct VerifyOptions {
  int max_rank = 2;
  std::vector<std::string> lattices = {"sc", "ad"};
  int trials = 50;
  unsigned long long seed = 7;
  bool parallel = true;
};

struct IdentityTally {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::string first_counterexample;
};

struct VerifySummary {
  std::vector<std::string> data;        // datum labels covered
  std::vector<IdentityTally> identities;
  std::vector<IdentityTally> claims;    // source statements checked but not required
  long trials = 0;
  bool all_identities_pass() const;
  std::string render() const;
};

VerifySummary verify_suite(const VerifyOptions& options);

/// Named types of rank <= max_rank used by the sweep.
std::vector<std::string> sweep_types(int max_rank);

/// Random filtration of the shape an inertia image can have: level 0 is one
/// tame generator (order dividing 2, 3, 4 or 6) together with level 1, and
/// levels >= 1 form a `wild_prime`-group. Depth 1..3.
InertialDatum random_inertial(size_t rank, std::mt19937_64& rng, long wild_prime = 7);

}  // namespace hii
