// SPDX-License-Identifier: Apache-2.0
//
// Lerch zeta function. A head of N terms is summed directly; the remaining
// phase-weighted tail is evaluated by one of two expansions:
//
//  * |theta| < 0.2: Euler-Maclaurin on h(u) = u^-s exp(i w u) with the
//    integral term int_x^inf h = (-i w)^(s-1) Gamma(1-s, -i w x);
//  * otherwise: sum_m z^m g(x+m) = [1/(1 - z e^D)] g(x), expanded in powers
//    of D with coefficients from 1/(1 - z e^t) (radius 2 pi min(|theta|, 1-|theta|)).

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hzeta/special.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

constexpr double kEmThetaCut = 0.2;

Complex inverse_power(double x, Complex s) { return std::exp(-s * std::log(x)); }

// 1 - exp(i w) without cancellation for small w.
Complex one_minus_phase(double w) { return Complex(0.0, -2.0 * std::sin(0.5 * w)) * std::polar(1.0, 0.5 * w); }

int resummation_head(double theta, Complex s, int minimum) {
  const double dist = kTwoPi * std::min(std::abs(theta), 1.0 - std::abs(theta));
  return std::max(minimum, static_cast<int>(std::ceil((std::abs(s) + 40.0) / dist)));
}

int euler_maclaurin_head(Complex s, int minimum) {
  return std::max(minimum, 40 + static_cast<int>(std::ceil(4.0 * std::abs(s))));
}

// E_s(z) = int_1^inf e^(-z t) t^-s dt = z^(s-1) Gamma(1-s, z). For small |z|
// and Re s > 1 the two factors under- and overflow, so the value is carried
// up from Re s in (0, 1] by (s-1) E_s = e^-z - z E_(s-1).
Complex exponential_integral_power(Complex s, Complex z) {
  if (s.real() <= 1.0 || std::abs(z) >= 1.0) return pow_principal(z, s - 1.0) * upper_incomplete_gamma(1.0 - s, z);
  const int steps = static_cast<int>(std::ceil(s.real() - 1.0));
  Complex order = s - static_cast<double>(steps);
  Complex value = pow_principal(z, order - 1.0) * upper_incomplete_gamma(1.0 - order, z);
  const Complex decay = std::exp(-z);
  for (int j = 0; j < steps; ++j) {
    order += 1.0;
    value = (decay - z * value) / (order - 1.0);
  }
  return value;
}

}  // namespace

namespace detail {

Complex phase_tail_resummed(double theta, double x, Complex s, double tolerance) {
  const double w = kTwoPi * theta;
  const Complex z = std::polar(1.0, w);
  const Complex inv_one_minus_z = 1.0 / one_minus_phase(w);
  constexpr int kMaxTerms = 80;

  // a_k: 1/(1 - z e^t) = sum a_k t^k, a_k (1-z) = z sum_{j=1..k} a_{k-j}/j!.
  std::vector<Complex> a;
  a.reserve(kMaxTerms + 1);
  a.push_back(inv_one_minus_z);

  // g^(k)(x) = (-1)^k (s)_k x^(-s-k)
  Complex deriv = inverse_power(x, s);
  Complex sum = a[0] * deriv;
  // Odd/even coefficients can vanish (z = -1), so growth is judged on
  // consecutive pairs of terms.
  double last = std::abs(sum);
  double previous_pair = std::numeric_limits<double>::infinity();
  int small_run = 0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    Complex acc{};
    double inv_fact = 1.0;
    for (int j = 1; j <= k; ++j) {
      inv_fact /= j;
      acc += a[k - j] * inv_fact;
    }
    a.push_back(z * inv_one_minus_z * acc);
    deriv *= -(s + static_cast<double>(k - 1)) / x;
    const Complex term = a[k] * deriv;
    sum += term;
    const double mag = std::abs(term);
    if (mag <= tolerance * std::abs(sum)) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
    // Asymptotic series: stop at the smallest pair once terms start growing.
    const double pair = mag + last;
    if (k > 8 && pair > previous_pair) return sum - term;
    previous_pair = pair;
    last = mag;
  }
  return sum;
}

Complex phase_tail_euler_maclaurin(double theta, double x, Complex s, int em_order) {
  const double w = kTwoPi * theta;
  const Complex iw(0.0, w);
  const Complex base = inverse_power(x, s) * std::polar(1.0, w * x);  // h(x)

  // int_x^inf u^-s e^{i w u} du = x^(1-s) E_s(-i w x)
  const Complex integral = std::exp((1.0 - s) * std::log(x)) * exponential_integral_power(s, -iw * x);

  Complex sum = integral + 0.5 * base;

  // h^(k)(x) = h(x) sum_i C(k,i) (i w)^(k-i) (-1)^i (s)_i x^-i
  const int max_k = 2 * em_order - 1;
  std::vector<Complex> poch(max_k + 1);  // (-1)^i (s)_i x^-i
  poch[0] = 1.0;
  for (int i = 1; i <= max_k; ++i) poch[i] = poch[i - 1] * (-(s + static_cast<double>(i - 1)) / x);
  std::vector<Complex> iw_pow(max_k + 1);
  iw_pow[0] = 1.0;
  for (int i = 1; i <= max_k; ++i) iw_pow[i] = iw_pow[i - 1] * iw;

  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= em_order; ++j) {
    const int k = 2 * j - 1;
    Complex dk{};
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      dk += binom * iw_pow[k - i] * poch[i];
      binom = binom * (k - i) / (i + 1);
    }
    sum -= bernoulli_number(2 * j) / fact * base * dk;
    fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
  }
  return sum;
}

}  // namespace detail

Complex lerch_phi_phase(double theta, double beta, Complex s, const EvalParams& params) {
  params.validate();
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("lerch_phi: alpha must be > 0");
  if (!std::isfinite(theta)) throw DomainError("lerch_phi: lambda must be finite");
  theta -= std::round(theta);
  if (theta == 0.0) return hurwitz_zeta_jet({s, beta, 0, 0}, params).value();

  const bool use_em = std::abs(theta) < kEmThetaCut;
  const int head = use_em ? euler_maclaurin_head(s, params.truncation_n)
                          : resummation_head(theta, s, params.truncation_n);
  const double w = kTwoPi * theta;

  Complex sum{};
  for (int n = 0; n < head; ++n) sum += std::polar(1.0, w * n) * inverse_power(n + beta, s);

  const double x = head + beta;
  Complex tail;
  if (use_em) {
    // sum_{n>=N} e^{iwn}(n+beta)^-s = e^{-iw beta} sum_m h(x + m)
    const int em_order = std::clamp(params.em_order, 15, kMaxBernoulli / 2);
    tail = std::polar(1.0, -w * beta) * detail::phase_tail_euler_maclaurin(theta, x, s, em_order);
  } else {
    tail = std::polar(1.0, w * head) * detail::phase_tail_resummed(theta, x, s, 0.1 * params.tolerance);
  }
  return ensure_finite(sum + tail, "lerch_phi");
}

Complex lerch_phi(const LerchPoint& p, const EvalParams& params) {
  if (!(p.lambda > 0.0 && p.lambda <= 1.0)) throw DomainError("lerch_phi: lambda must lie in (0, 1]");
  if (!(p.alpha > 0.0)) throw DomainError("lerch_phi: alpha must be > 0");
  if (p.lambda == 1.0) return hurwitz_zeta_jet({p.s, p.alpha, 0, 0}, params).value();
  return lerch_phi_phase(p.lambda, p.alpha, p.s, params);
}

Complex lerch_phi_left(const LerchPoint& p, const EvalParams& params) {
  if (!(p.lambda > 0.0 && p.lambda < 1.0)) {
    throw DomainError("lerch_phi_left: lambda must lie in (0, 1); lambda = 1 is the Hurwitz case");
  }
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw DomainError("lerch_phi_left: alpha must lie in (0, 1)");
  if (!(p.s.real() < 1.0)) throw DomainError("lerch_phi_left: requires Re s < 1");

  const Complex s = p.s;
  const Complex common = gamma_function(1.0 - s) * std::exp((s - 1.0) * std::log(kTwoPi));
  const Complex half_turn = std::exp(kI * (kPi / 2.0) * (s - 1.0));  // e^{i pi (s-1)/2}

  // n >= 0: -2 pi i (n + lambda) has arg -pi/2.
  const Complex positive = common / half_turn * lerch_phi_phase(-p.alpha, p.lambda, 1.0 - s, params);
  // n = -m-1 < 0: -2 pi i (n + lambda) = 2 pi i (m + 1 - lambda), arg +pi/2.
  const Complex negative = common * half_turn * std::polar(1.0, kTwoPi * p.alpha) *
                           lerch_phi_phase(p.alpha, 1.0 - p.lambda, 1.0 - s, params);
  return ensure_finite(std::polar(1.0, -kTwoPi * p.lambda * p.alpha) * (positive + negative),
                       "lerch_phi_left");
}

}  // namespace hzeta
