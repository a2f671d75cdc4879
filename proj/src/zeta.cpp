// SPDX-License-Identifier: Apache-2.0
//
// Hurwitz zeta by Euler-Maclaurin summation in jet arithmetic.

#include <algorithm>
#include <cmath>
#include <string>

#include "hzeta/special.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

constexpr int kMaxHeadTerms = 1 << 16;

// Jet of x^-s in s for real x > 0: coefficient k is x^-s0 (-log x)^k / k!.
SJet inverse_power_jet(double x, Complex s0, std::size_t order) {
  SJet out(order);
  const double lx = std::log(x);
  Complex c = std::exp(-s0 * lx);
  out[0] = c;
  for (std::size_t k = 1; k <= order; ++k) {
    c *= -lx / static_cast<double>(k);
    out[k] = c;
  }
  return out;
}

void check_away_from_pole(Complex s, const char* who) {
  if (std::abs(s - 1.0) < kPoleExclusion) {
    throw DomainError(std::string(who) + ": s is within 1e-8 of the pole at s = 1");
  }
}

struct EmResult {
  SJet value;
  double remainder;  // magnitude of the first omitted correction
  double scale;      // magnitude of x^-s at the cut, the working precision floor
};

EmResult euler_maclaurin(Complex s, double a, std::size_t order, int head, int em_order) {
  const SJet S = SJet::variable(s, order);
  SJet sum(order);
  for (int n = 0; n < head; ++n) sum += inverse_power_jet(n + a, s, order);

  const double x = head + a;
  const SJet tail_pow = inverse_power_jet(x, s, order);  // x^-s
  sum += (tail_pow * Complex(x)) / (S - 1.0);
  sum += tail_pow * Complex(0.5);

  SJet poch = S;  // (s)_{2j-1}
  double x_pow = 1.0 / x;  // x^-(2j-1)
  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= em_order; ++j) {
    const double coef = bernoulli_number(2 * j) / fact * x_pow;
    sum += (poch * tail_pow) * Complex(coef);
    poch *= (S + static_cast<double>(2 * j - 1));
    poch *= (S + static_cast<double>(2 * j));
    x_pow /= x * x;
    fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
  }
  // Next correction, value part only.
  const double remainder =
      std::abs(bernoulli_number(2 * em_order + 2) / fact * x_pow * poch.value() * tail_pow.value());
  return {std::move(sum), remainder, std::abs(tail_pow.value())};
}

}  // namespace

SJet hurwitz_zeta_jet(const HurwitzPoint& p, const EvalParams& params) {
  params.validate();
  check_away_from_pole(p.s, "hurwitz_zeta_jet");
  if (p.deriv_order < 0) throw DomainError("hurwitz_zeta_jet: derivative order must be >= 0");
  if (p.shift_k < 0) throw DomainError("hurwitz_zeta_jet: shift k must be >= 0");
  const double a = p.alpha + p.shift_k;
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz_zeta_jet: alpha + k must be > 0");

  const int em_order = std::min(params.em_order, kMaxBernoulli / 2 - 1);
  const auto order = static_cast<std::size_t>(p.deriv_order);
  int head = std::max({params.truncation_n, 10,
                       static_cast<int>(std::ceil(std::abs(p.s.imag()))) + 10});
  for (;;) {
    EmResult r = euler_maclaurin(p.s, a, order, head, em_order);
    const double scale = std::max({std::abs(r.value.value()), r.scale, 1e-300});
    if (r.remainder <= params.tolerance * scale || head >= kMaxHeadTerms) {
      for (Complex c : r.value.coeffs()) ensure_finite(c, "hurwitz_zeta_jet");
      return std::move(r.value);
    }
    head *= 2;
  }
}

Complex hurwitz_zeta(Complex s, double alpha, const EvalParams& params) {
  return hurwitz_zeta_jet({s, alpha, 0, 0}, params).value();
}

ShiftedRoutes hurwitz_shifted_routes(Complex s, double alpha, int k, int r, const EvalParams& params) {
  if (k < 0) throw DomainError("hurwitz_shifted: k must be >= 0");
  if (!(alpha > 0.0)) throw DomainError("hurwitz_shifted: subtraction route needs alpha > 0");
  SJet by_shift = hurwitz_zeta_jet({s, alpha, k, r}, params);
  SJet by_subtraction = hurwitz_zeta_jet({s, alpha, 0, r}, params);
  for (int n = 0; n < k; ++n) by_subtraction -= inverse_power_jet(n + alpha, s, static_cast<std::size_t>(r));
  return {std::move(by_shift), std::move(by_subtraction)};
}

SJet hurwitz_shifted(Complex s, double alpha, int k, int r, const EvalParams& params) {
  if (k < 0) throw DomainError("hurwitz_shifted: k must be >= 0");
  if (!(alpha + k > 0.0)) throw DomainError("hurwitz_shifted: alpha + k must be > 0");
  if (k == 0 || !(alpha > 0.0)) return hurwitz_zeta_jet({s, alpha, k, r}, params);

  ShiftedRoutes routes = hurwitz_shifted_routes(s, alpha, k, r, params);
  // The subtraction route cancels against the removed head terms; compare on
  // the scale of the largest quantity involved.
  const auto order = static_cast<std::size_t>(r);
  for (std::size_t i = 0; i <= order; ++i) {
    double scale = std::abs(routes.by_shift[i]) + std::abs(routes.by_subtraction[i]);
    for (int n = 0; n < k; ++n) scale += std::abs(inverse_power_jet(n + alpha, s, order)[i]);
    if (std::abs(routes.by_shift[i] - routes.by_subtraction[i]) > 1e3 * params.tolerance * scale + 1e-300) {
      throw NumericError("hurwitz_shifted: shift and subtraction routes disagree");
    }
  }
  return std::move(routes.by_shift);
}

SJet riemann_zeta_jet(Complex s, int r, const EvalParams& params) {
  return hurwitz_zeta_jet({s, 1.0, 0, r}, params);
}

Complex taylor_alpha_eval(Complex s, Complex alpha, int k, int r, const EvalParams& params) {
  params.validate();
  if (k < 1) throw DomainError("taylor_alpha_eval: k must be >= 1");
  if (r < 0) throw DomainError("taylor_alpha_eval: r must be >= 0");
  const double rho = std::abs(alpha) / k;
  if (!(rho < 1.0)) throw DomainError("taylor_alpha_eval: requires |alpha| < k");
  // zeta_k(s + n) must be finite for every n >= 0.
  if (std::abs(s.imag()) < kPoleExclusion && s.real() <= 1.0 + kPoleExclusion &&
      std::abs(s.real() - std::round(s.real())) < kPoleExclusion) {
    throw DomainError("taylor_alpha_eval: s + n hits the pole at 1 for some n >= 0");
  }

  const auto order = static_cast<std::size_t>(r);
  const SJet S = SJet::variable(s, order);
  const double kd = static_cast<double>(k);
  Complex sum = hurwitz_zeta_jet({s, kd, 0, r}, params).derivative(order);

  // q_n = (s)_n (-alpha)^n / n!, as a jet in s.
  SJet q = SJet::constant(1.0, order);
  const double stop = 0.1 * params.tolerance;
  constexpr int kMaxTerms = 5000;
  int small_run = 0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    q *= (S + static_cast<double>(n - 1));
    q *= (-alpha / static_cast<double>(n));
    const SJet z = hurwitz_zeta_jet({s + static_cast<double>(n), kd, 0, r}, params);
    const Complex term = (q * z).derivative(order);
    sum += term;
    const double tail_bound = std::abs(term) / (1.0 - rho);
    if (tail_bound <= stop * std::abs(sum) || (alpha == Complex{} && n >= 1)) {
      if (++small_run >= 2) return ensure_finite(sum, "taylor_alpha_eval");
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("taylor_alpha_eval: series did not converge within the term budget");
}

}  // namespace hzeta
