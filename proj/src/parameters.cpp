#include "hiicheck/parameters.hpp"

#include <algorithm>
#include <map>

#include "hiicheck/errors.hpp"

namespace hii {

Vec principal_sl2_cocharacter(const RootDatum& rd, const std::vector<size_t>& subsystem) {
  if (!is_coroot_closed(rd, subsystem)) throw NotClosed("subsystem is not closed on the coroot side");
  Vec h(rd.rank(), 0);
  for (size_t a : subsystem) {
    if (!rd.is_positive(a)) continue;
    for (size_t i = 0; i < h.size(); ++i) h[i] += rd.root(a)[i];
  }
  return h;
}

std::vector<Strand> string_peel(std::vector<Weight> weights) {
  std::map<Monomial, std::map<long, long, std::greater<>>> classes;
  for (const auto& w : weights) classes[w.mu][w.k] += 1;
  std::vector<Strand> out;
  for (auto& [mu, mult] : classes) {
    while (!mult.empty()) {
      long top = mult.begin()->first;
      if (top < 0) {
        throw InconsistentStrings("weight " + std::to_string(top) + " of class " + mu.to_string() +
                                  " has no partner");
      }
      for (long k = top; k >= -top; k -= 2) {
        auto it = mult.find(k);
        if (it == mult.end()) {
          throw InconsistentStrings("string of highest weight " + std::to_string(top) + " in class " +
                                    mu.to_string() + " is missing weight " + std::to_string(k));
        }
        if (--it->second == 0) mult.erase(it);
      }
      out.push_back({mu, top});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> strand_weights(const std::vector<Strand>& strands) {
  std::vector<Weight> out;
  for (const auto& s : strands) {
    for (long k = s.m; k >= -s.m; k -= 2) out.push_back({s.mu, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

WDAdjointRep adjoint_wd(const RootDatum& rd, const ConductorData& c, const Parameter& p) {
  if (p.s.size() != rd.rank() || p.h.size() != rd.rank()) throw InvalidInput("parameter rank does not match the datum");
  WDAdjointRep wd;
  wd.q = p.q;
  std::vector<Weight> weights;
  for (size_t a = 0; a < rd.num_roots(); ++a) {
    Monomial mu = p.s.evaluate(rd.coroot(a));
    long k = dot(p.h, rd.coroot(a));
    if (c.at(a) != 0) {
      wd.ramified.push_back({a, c[a], mu * Monomial::q_power(k)});
    } else {
      weights.push_back({mu, k});
    }
  }
  for (size_t i = 0; i < rd.rank(); ++i) weights.push_back({Monomial::one(), 0});
  wd.strands = string_peel(weights);
  return wd;
}

WDAdjointRep adjoint_wd(const RootDatum& rd, const Parameter& p) {
  return adjoint_wd(rd, conductor_function(rd, p.inertial), p);
}

namespace {

// 1 - m, or nullopt when m = 1 exactly
std::optional<Scalar> one_minus(const Monomial& m, const Rational& q) {
  if (m.is_one()) return std::nullopt;
  return Scalar(1) - m.to_scalar(q);
}

Monomial kernel_term(const Strand& st, long twice_s0, bool dualize) {
  Monomial mu = dualize ? st.mu.inverse() : st.mu;
  return mu * Monomial::q_power(-st.m - twice_s0);
}

long twice(const Rational& s0) {
  Rational t = s0 * 2;
  t.canonicalize();
  if (t.get_den() != 1) throw InvalidInput("s0 must be a multiple of 1/2, got " + s0.get_str());
  return to_long(Integer(t.get_num()));
}

}  // namespace

Scalar l_value(const WDAdjointRep& wd, const Rational& s0, bool dualize) {
  const long t = twice(s0);
  Scalar out(1);
  for (const auto& st : wd.strands) {
    auto denom = one_minus(kernel_term(st, t, dualize), wd.q);
    if (!denom) {
      throw PoleFlag("L-factor of strand (" + st.mu.to_string() + ", " + std::to_string(st.m) + ") has a pole at s = " +
                     s0.get_str());
    }
    out /= *denom;
  }
  return out;
}

Scalar gamma_ramified_abs_squared(const WDAdjointRep& wd) {
  long a = 0;
  for (const auto& line : wd.ramified) a += line.c + 1;
  return Scalar(pow(wd.q, a));
}

Scalar gamma_unramified_abs_squared(const WDAdjointRep& wd) {
  Scalar out(1);
  for (const auto& st : wd.strands) {
    // |det(-Frob)|^2 over quotient eigenvalues mu q^{-m/2 + j}, j = 1..m
    Rational det = 1;
    for (long j = 1; j <= st.m; ++j) det *= (st.mu * Monomial::q_power(-st.m + 2 * j)).abs_squared(wd.q);
    auto l0 = one_minus(kernel_term(st, 0, false), wd.q);
    if (!l0) {
      throw PoleFlag("L(0) has a pole on strand (" + st.mu.to_string() + ", " + std::to_string(st.m) + ")");
    }
    auto l1 = one_minus(kernel_term(st, 2, true), wd.q);
    if (!l1) {
      throw ZeroFlag("L(1, dual) has a pole on strand (" + st.mu.to_string() + ", " + std::to_string(st.m) + ")");
    }
    // |L(1)|^2 / |L(0)|^2 = |1 - x0|^2 / |1 - x1|^2
    out *= Scalar(det) * l0->abs_squared() / l1->abs_squared();
  }
  return out;
}

Scalar gamma_abs_squared_at_zero(const WDAdjointRep& wd) {
  return gamma_ramified_abs_squared(wd) * gamma_unramified_abs_squared(wd);
}

bool is_discrete(const RootDatum& rd, const WDAdjointRep& wd) {
  long invariant = 0;
  for (const auto& st : wd.strands) {
    if (st.m == 0 && st.mu.is_one()) ++invariant;
  }
  return invariant == static_cast<long>(rd.rank() - rd.semisimple_rank());
}

WDAdjointRep modulo_center(const RootDatum& rd, WDAdjointRep wd) {
  long central = static_cast<long>(rd.rank() - rd.semisimple_rank());
  const Strand trivial{Monomial::one(), 0};
  for (; central > 0; --central) {
    auto it = std::find(wd.strands.begin(), wd.strands.end(), trivial);
    if (it == wd.strands.end()) throw InvalidInput("fewer trivial strands than the dimension of the center");
    wd.strands.erase(it);
  }
  return wd;
}

}  // namespace hii
