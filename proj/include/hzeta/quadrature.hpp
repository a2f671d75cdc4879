// SPDX-License-Identifier: Apache-2.0
//
// Double-exponential (tanh-sinh) quadrature on (0, 1) for complex-valued
// integrands with algebraic or logarithmic endpoint singularities, plus a
// half-period panel scheme with Wynn epsilon acceleration for oscillatory
// integrals over [lower, inf).
//
// This module is the independent oracle for every closed form in
// fourier.hpp: nothing here calls back into the closed-form code.

#ifndef HZETA_QUADRATURE_HPP
#define HZETA_QUADRATURE_HPP

#include <functional>

#include "hzeta/types.hpp"

namespace hzeta {

enum class SingularityKind { none, left_algebraic, right_algebraic };

struct SingularityHint {
  SingularityKind kind = SingularityKind::none;
  double exponent = 0.0;  // f ~ x^exponent (left) or (1-x)^exponent (right); must be > -1
};

struct Integrand {
  /// Evaluated on the open interval only.
  std::function<Complex(double)> f;
  /// Optional: y -> f(1 - y) computed without forming 1 - y. Used near the
  /// right endpoint when present.
  std::function<Complex(double)> f_right;
  SingularityHint hint;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// int_0^1 f(x) dx. Levels are refined (step halved) until two successive
/// estimates differ by less than params.tolerance * max(1, |I|), up to
/// params.quad_level. Throws ConvergenceError at the cap.
QuadratureResult integrate_01(const Integrand& f, const EvalParams& params = {});

/// int_0^1 f(x) exp(-2 pi i n x) dx; |n| > 8 is split into |n| panels.
QuadratureResult fourier_coeff_numeric_result(const Integrand& f, int n, const EvalParams& params = {});
Complex fourier_coeff_numeric(const Integrand& f, int n, const EvalParams& params = {});

/// int_0^1 |f(x)|^2 dx.
double parseval_lhs_numeric(const Integrand& f, const EvalParams& params = {});

/// int_lower^inf exp(i omega u) u^-s du for Re s > 0 (Re s > 1 when omega = 0).
Complex oscillatory_tail(Complex s, double omega, double lower, const EvalParams& params = {});

}  // namespace hzeta

#endif  // HZETA_QUADRATURE_HPP
