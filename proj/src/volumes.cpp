#include "hiicheck/volumes.hpp"

#include "hiicheck/errors.hpp"

namespace hii {

Scalar vol_iwahori(const RootDatum& rd, const Rational& q) {
  const long l = static_cast<long>(rd.rank());
  const long exponent = static_cast<long>(rd.num_positive()) + l;
  return Scalar(pow(q, -exponent) * pow(q - 1, l));
}

Scalar index_I_over_J(const RootDatum& rd, const ConductorData& c, const Rational& q, long* exponent) {
  long from_c = 0;
  for (size_t a = 0; a < c.size(); ++a) {
    if (rd.is_positive(a)) from_c += c[a];
  }
  long from_f = 0;
  for (long x : roche_f(rd, c)) from_f += x;
  if (from_c != from_f) {
    throw FormulaMismatch("q^(sum_{Phi+} c) = q^" + std::to_string(from_c) + " but q^(sum_Phi f) = q^" +
                          std::to_string(from_f));
  }
  if (exponent) *exponent = from_c;
  return Scalar(pow(q, from_c));
}

VolumeReport volume_ratio_and_epsilon(const RootDatum& rd, const Ramification& ram, const Rational& q) {
  VolumeReport v;
  v.vol_I = vol_iwahori(rd, q);
  v.vol_I_H = vol_iwahori(ram.phi.h_datum, q);
  v.index_I_over_J = index_I_over_J(rd, ram.c, q, &v.index_exponent);
  v.vol_J = v.vol_I / v.index_I_over_J;
  v.ratio = v.vol_I_H / v.vol_J;
  v.artin = ram.artin;
  v.epsilon_ram = Scalar::q_half_power(q, ram.artin);
  if (!(v.ratio == v.epsilon_ram)) {
    throw IdentityViolation("vol(I_H)/vol(J) = " + v.ratio.to_string() + " but |epsilon| = " + v.epsilon_ram.to_string());
  }
  return v;
}

}  // namespace hii
