// SPDX-License-Identifier: Apache-2.0
//
// Hurwitz, shifted Hurwitz, Riemann and Lerch zeta functions.
//
//   zeta(s, a)       = sum_{n>=0} (n + a)^-s
//   zeta_k(s, a)     = sum_{n>=k} (n + a)^-s = zeta(s, a + k)
//   phi(lambda,a,s)  = sum_{n>=0} exp(2 pi i lambda n) (n + a)^-s
//
// s-derivatives are returned as jets (see jet.hpp).

#ifndef HZETA_ZETA_HPP
#define HZETA_ZETA_HPP

#include "hzeta/jet.hpp"
#include "hzeta/types.hpp"

namespace hzeta {

struct HurwitzPoint {
  Complex s;
  double alpha = 1.0;
  int shift_k = 0;
  int deriv_order = 0;
};

struct LerchPoint {
  double lambda = 1.0;
  double alpha = 1.0;
  Complex s;
};

/// Points closer than this to s = 1 are refused.
inline constexpr double kPoleExclusion = 1e-8;

/// Jet in s of zeta(s, alpha + shift_k) to order deriv_order, by
/// Euler-Maclaurin summation carried out in jet arithmetic.
SJet hurwitz_zeta_jet(const HurwitzPoint& p, const EvalParams& params = {});

/// Convenience: value of zeta(s, alpha).
Complex hurwitz_zeta(Complex s, double alpha, const EvalParams& params = {});

struct ShiftedRoutes {
  SJet by_shift;        // zeta(s, alpha + k)
  SJet by_subtraction;  // zeta(s, alpha) - sum_{n<k} (n + alpha)^-s
};

/// zeta_k^(r)(s, alpha) through both routes.
ShiftedRoutes hurwitz_shifted_routes(Complex s, double alpha, int k, int r,
                                     const EvalParams& params = {});

/// zeta_k^(r)(s, alpha); returns the shift route.
SJet hurwitz_shifted(Complex s, double alpha, int k, int r, const EvalParams& params = {});

/// Jet of the Riemann zeta function, zeta(s) = zeta(s, 1).
SJet riemann_zeta_jet(Complex s, int r, const EvalParams& params = {});

/// zeta_k^(r)(s, alpha) from the power series in alpha about 0, valid for
/// |alpha| < k. Terms are Pochhammer-times-zeta products in jet arithmetic.
Complex taylor_alpha_eval(Complex s, Complex alpha, int k, int r, const EvalParams& params = {});

/// Lerch zeta phi(lambda, alpha, s) for 0 < lambda <= 1, alpha > 0, any s
/// (s != 1 when lambda = 1). lambda = 1 is the Hurwitz evaluator.
Complex lerch_phi(const LerchPoint& p, const EvalParams& params = {});

/// sum_{n>=0} exp(2 pi i theta n) (n + beta)^-s for any real theta; integer
/// theta reduces to zeta(s, beta). Unlike lerch_phi, theta close to 1 can be
/// passed as a small negative number without losing its fractional part.
Complex lerch_phi_phase(double theta, double beta, Complex s, const EvalParams& params = {});

/// Lerch zeta from its expansion in alpha (the transformation formula):
///   exp(2 pi i lambda alpha) phi = Gamma(1-s) sum_n exp(-2 pi i n alpha) (-2 pi i (n+lambda))^(s-1).
/// Requires 0 < lambda < 1, 0 < alpha < 1, Re s < 1.
Complex lerch_phi_left(const LerchPoint& p, const EvalParams& params = {});

namespace detail {

/// Tail sum_{m>=0} z^m (x + m)^-s with z = exp(2 pi i theta), 0 < |theta| <= 1/2,
/// by resummation of the operator series 1/(1 - z e^D).
Complex phase_tail_resummed(double theta, double x, Complex s, double tolerance);

/// sum_{m>=0} h(x + m) with h(u) = u^-s exp(2 pi i theta u), which is
/// exp(2 pi i theta x) times the tail above, by Euler-Maclaurin with the
/// integral term in closed form through the upper incomplete gamma function.
Complex phase_tail_euler_maclaurin(double theta, double x, Complex s, int em_order);

}  // namespace detail

}  // namespace hzeta

#endif  // HZETA_ZETA_HPP
