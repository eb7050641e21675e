#pragma once

#include "hiicheck/ramification.hpp"
#include "hiicheck/scalar.hpp"

namespace hii {

struct VolumeReport {
  Scalar vol_I;
  Scalar vol_I_H;
  Scalar vol_J;
  Scalar ratio;
  Scalar index_I_over_J;
  long index_exponent = 0;  // [I : J] = q^index_exponent
  Scalar epsilon_ram;
  long artin = 0;
};

/// q^{-(|Phi+| + l)} (q - 1)^l
Scalar vol_iwahori(const RootDatum& rd, const Rational& q);

/// q^{sum over positive roots of c}, cross checked against q^{sum over all roots of f}.
Scalar index_I_over_J(const RootDatum& rd, const ConductorData& c, const Rational& q, long* exponent = nullptr);

/// Throws IdentityViolation if vol(I_H)/vol(J) != q^{a/2}.
VolumeReport volume_ratio_and_epsilon(const RootDatum& rd, const Ramification& ram, const Rational& q);

}  // namespace hii
