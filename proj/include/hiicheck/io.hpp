#pragma once

#include <json.hpp>

#include "hiicheck/hii.hpp"

namespace hii::io {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& j);

/// {"type": "B2", "lattice": "sc" | "ad" | {"basis": [[...]]}}
/// or {"rank": n, "roots": [...], "coroots": [...]}.
RootDatum datum_from_json(const json& j);

/// {"levels": [[["1/2", "0"]], []]}; validated against `rank`.
InertialDatum inertial_from_json(const json& j, size_t rank);

/// "1", "q^(1/2)", "zeta(1/3)", "q^(-1)*zeta(1/4)" or {"q_half": k, "zeta": "a/b"}.
Monomial monomial_from_json(const json& j);
TorusElement torus_from_json(const json& j, size_t rank);

struct ParameterInput {
  RootDatum rd;
  Parameter p;
};

/// {"datum": ..., "inertial": ..., "s": [...], "h": [...], "q": "a/b"}
ParameterInput parameter_from_json(const json& j);

/// {"datum": ..., "inertial": ..., "q": "3",
///  "parameter": "steinberg" | {"steinberg": true, "s": [...]} | {"s": [...], "h": [...]},
///  "overrides": {"dim_rho": 1, "s_sharp": 2, ...}}
BlockInput block_from_json(const json& j);

json to_json(const Scalar& s);
json to_json(const Monomial& m);
json to_json(const TorusElement& t);
json to_json(const RootDatum& rd);
json to_json(const InertialDatum& S);
json to_json(const Pi0Description& p);
json ramification_json(const RootDatum& rd, const WeylGroup& W, const Ramification& ram);
json to_json(const VolumeReport& v);
json to_json(const WDAdjointRep& wd);
json to_json(const HiiReport& r, const RootDatum& rd, const WeylGroup& W);
json to_json(const ChainReport& r);
json to_json(const VerifySummary& s);

/// analyze: conductors, Phi_chi, H°, C_chi, volumes (and the condition check when "p" is given).
json analyze_json(const json& block);
/// gamma: strand table, L values, |gamma(0)|^2 when finite.
json gamma_json(const json& param);
json hii_rhs_json(const json& block);
json chain_json(const json& block);

}  // namespace hii::io
