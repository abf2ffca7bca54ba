#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fockarith/arith.hpp"

namespace fockarith {

/// Hurwitz zeta sum_{k>=0} (k + a)^{-s} for Re(s) > 1, a > 0, by
/// Euler-Maclaurin with 32 explicit terms and 7 Bernoulli corrections.
inline cplx hurwitz_zeta(cplx s, double a) {
  if (s.real() <= 1.0) throw std::domain_error("hurwitz_zeta: need Re(s) > 1");
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: need a > 0");
  constexpr int kDirect = 32;
  static constexpr double kBernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  cplx acc = 0.0;
  for (int k = 0; k < kDirect; ++k) acc += std::pow(k + a, -s);
  const double x = kDirect + a;
  acc += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // term_p = B_{2p}/(2p)! * s(s+1)...(s+2p-2) * x^{-s-2p+1}
  cplx rising = s;  // s(s+1)...(s+2p-2)
  double fact = 2.0;  // (2p)!
  cplx xpow = std::pow(x, -s - 1.0);
  for (int p = 1; p <= 7; ++p) {
    acc += kBernoulli[p - 1] / fact * rising * xpow;
    rising *= (s + static_cast<double>(2 * p - 1)) * (s + static_cast<double>(2 * p));
    fact *= static_cast<double>((2 * p + 1) * (2 * p + 2));
    xpow /= x * x;
  }
  return acc;
}

inline cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

}  // namespace fockarith
