// SPDX-License-Identifier: Apache-2.0

#include "hzeta/fourier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include "hzeta/jet.hpp"
#include "hzeta/special.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

constexpr double kRouteTolerance = 1e-9;
constexpr double kImagResidue = 1e-12;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string format_s(Complex s) {
  return "s = " + std::to_string(s.real()) + (s.imag() < 0 ? " - " : " + ") +
         std::to_string(std::abs(s.imag())) + "i";
}

void require_gamma_finite(Complex z, const char* what) {
  if (near_nonpositive_integer(z)) throw DomainError(std::string(what) + ": Gamma(1-s) has a pole at this s");
}

// Real part after checking the imaginary residue is negligible.
double real_part(Complex v, const char* what) {
  if (std::abs(v.imag()) > kImagResidue * std::max(1.0, std::abs(v.real()))) {
    throw NumericError(std::string(what) + ": imaginary residue in a real quantity");
  }
  return v.real();
}

// (2 pi i n)^(s-1) on the principal branch, arg = +-pi/2.
Complex two_pi_i_n_pow(Complex s, int n) { return pow_principal(Complex(0.0, kTwoPi * n), s - 1.0); }

// Gamma^(k)(1-s) for k = 0..r.
std::vector<Complex> gamma_derivatives(Complex s, int r) {
  const SJet g = gamma_jet(1.0 - s, static_cast<std::size_t>(r));
  std::vector<Complex> out(r + 1);
  for (int k = 0; k <= r; ++k) out[k] = g[static_cast<std::size_t>(k)] * factorial(k);
  return out;
}

// Coefficients of P(z) = sum_l (-1)^(r-l) C(r,l) Gamma^(r-l)(1-s) z^l.
std::vector<Complex> leibniz_polynomial(Complex s, int r) {
  const std::vector<Complex> gd = gamma_derivatives(s, r);
  std::vector<Complex> p(r + 1);
  for (int l = 0; l <= r; ++l) p[l] = ((r - l) % 2 == 0 ? 1.0 : -1.0) * binomial(r, l) * gd[r - l];
  return p;
}

double hurwitz_deriv_parseval(Complex s, int r, const EvalParams& params) {
  const double sigma = s.real();
  const double t = s.imag();
  const double p = 2.0 - 2.0 * sigma;
  const std::vector<Complex> poly = leibniz_polynomial(s, r);

  // sum_n n^-p log^m n = (-1)^m zeta^(m)(p)
  const SJet zj = riemann_zeta_jet(p, 2 * r, params);
  std::vector<double> log_moments(2 * r + 1);
  for (int m = 0; m <= 2 * r; ++m) {
    log_moments[m] = (m % 2 == 0 ? 1.0 : -1.0) * factorial(m) * zj[static_cast<std::size_t>(m)].real();
  }

  Complex total{};
  for (const double side : {1.0, -1.0}) {
    // P(c + x) as a polynomial in x = log n, c = log 2 pi +- i pi/2
    const Complex c(std::log(kTwoPi), side * kPi / 2.0);
    std::vector<Complex> q(r + 1);
    for (int j = 0; j <= r; ++j) {
      for (int l = j; l <= r; ++l) q[j] += poly[l] * binomial(l, j) * std::pow(c, l - j);
    }
    Complex side_sum{};
    for (int j = 0; j <= r; ++j) {
      for (int k = 0; k <= r; ++k) side_sum += q[j] * std::conj(q[k]) * log_moments[j + k];
    }
    total += std::exp(-side * kPi * t) * side_sum;
  }
  return real_part(std::pow(kTwoPi, 2.0 * sigma - 2.0) * total, "parseval_rhs");
}

double zeta1_pair_norm(Complex s, int n, const EvalParams& params) {
  return std::norm(coeff_zeta1(s, n, params)) + std::norm(coeff_zeta1(s, -n, params));
}

ParsevalValue zeta1_parseval(Complex s, const EvalParams& params) {
  // |a_n|^2 + |a_-n|^2 = 2/v^2 + 2(|s|^2 - 2 Re(s^2 + s))/v^4 + O(v^-6), v = 2 pi n
  const double c4 = 2.0 * (std::norm(s) - 2.0 * (s * s + s).real());
  const double c6 = 2.0 * std::pow(std::abs(s) + 2.0, 6.0);  // crude bound on the next coefficient
  const double v2 = kTwoPi * kTwoPi;

  int N = std::max(params.truncation_n, 32);
  constexpr int kMaxN = 1 << 14;
  auto tail_zeta = [&](double order, int from) { return hurwitz_zeta(order, from, params).real(); };
  double budget = c6 / (v2 * v2 * v2) * tail_zeta(6.0, N + 1);
  double head = std::norm(coeff_zeta1(s, 0, params));
  for (int n = 1; n <= N; ++n) head += zeta1_pair_norm(s, n, params);
  while (budget > 0.5 * params.tolerance * head && N < kMaxN) {
    for (int n = N + 1; n <= 2 * N; ++n) head += zeta1_pair_norm(s, n, params);
    N *= 2;
    budget = c6 / (v2 * v2 * v2) * tail_zeta(6.0, N + 1);
  }
  const double tail = 2.0 / v2 * tail_zeta(2.0, N + 1) + c4 / (v2 * v2) * tail_zeta(4.0, N + 1);
  return {head + tail, budget, N};
}

}  // namespace

const char* family_tag(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: return "ZETA1_IN_ALPHA";
    case SeriesFamily::hurwitz_in_alpha: return "HURWITZ_IN_ALPHA";
    case SeriesFamily::hurwitz_deriv_in_alpha: return "HURWITZ_DERIV_IN_ALPHA";
    case SeriesFamily::lerch_in_lambda: return "LERCH_IN_LAMBDA";
    case SeriesFamily::lerch_in_alpha: return "LERCH_IN_ALPHA";
  }
  return "?";
}

std::optional<SeriesFamily> parse_family(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  struct Alias {
    const char* name;
    SeriesFamily family;
  };
  static const std::array<Alias, 10> aliases = {{
      {"zeta1", SeriesFamily::zeta1_in_alpha},
      {"zeta1_in_alpha", SeriesFamily::zeta1_in_alpha},
      {"hurwitz", SeriesFamily::hurwitz_in_alpha},
      {"hurwitz_in_alpha", SeriesFamily::hurwitz_in_alpha},
      {"hurwitz_deriv", SeriesFamily::hurwitz_deriv_in_alpha},
      {"hurwitz_deriv_in_alpha", SeriesFamily::hurwitz_deriv_in_alpha},
      {"lerch_lambda", SeriesFamily::lerch_in_lambda},
      {"lerch_in_lambda", SeriesFamily::lerch_in_lambda},
      {"lerch_alpha", SeriesFamily::lerch_in_alpha},
      {"lerch_in_alpha", SeriesFamily::lerch_in_alpha},
  }};
  for (const Alias& a : aliases) {
    if (key == a.name) return a.family;
  }
  return std::nullopt;
}

std::string coefficient_strip(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: return "0 < Re s < 1";
    case SeriesFamily::lerch_in_lambda: return "Re s > 0";
    default: return "Re s < 1";
  }
}

std::string parseval_strip(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: return "0 < Re s < 1";
    case SeriesFamily::lerch_in_lambda: return "Re s > 1/2";
    default: return "Re s < 1/2";
  }
}

void require_coefficient_region(SeriesFamily family, Complex s) {
  const double sigma = s.real();
  bool ok = false;
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: ok = sigma > 0.0 && sigma < 1.0; break;
    case SeriesFamily::lerch_in_lambda: ok = sigma > 0.0; break;
    default: ok = sigma < 1.0; break;
  }
  if (!ok) {
    throw DomainError(std::string(family_tag(family)) + ": " + format_s(s) + " outside the strip " +
                      coefficient_strip(family));
  }
}

void require_parseval_region(SeriesFamily family, Complex s) {
  const double sigma = s.real();
  bool ok = false;
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: ok = sigma > 0.0 && sigma < 1.0; break;
    case SeriesFamily::lerch_in_lambda: ok = sigma > 0.5; break;
    default: ok = sigma < 0.5; break;
  }
  if (!ok) {
    throw DomainError(std::string(family_tag(family)) + " Parseval: " + format_s(s) + " outside the strip " +
                      parseval_strip(family));
  }
}

Complex coeff_zeta1(Complex s, int n, const EvalParams&) {
  require_coefficient_region(SeriesFamily::zeta1_in_alpha, s);
  if (n == 0) return 1.0 / (s - 1.0);
  const Complex z(0.0, kTwoPi * n);
  return ensure_finite(pow_principal(z, s - 1.0) * upper_incomplete_gamma(1.0 - s, z), "coeff_zeta1");
}

LeibnizRoutes coeff_hurwitz_deriv_routes(Complex s, int r, int n) {
  if (r < 0) throw DomainError("coeff_hurwitz_deriv: r must be >= 0");
  if (n == 0) throw DomainError("coeff_hurwitz_deriv_routes: n must be nonzero");
  require_gamma_finite(1.0 - s, "coeff_hurwitz_deriv");

  const Complex base(0.0, kTwoPi * n);
  const Complex log_base = principal_log(base);
  const std::vector<Complex> poly = leibniz_polynomial(s, r);
  Complex acc{};
  Complex log_pow = 1.0;
  for (int l = 0; l <= r; ++l) {
    acc += poly[l] * log_pow;
    log_pow *= log_base;
  }
  const Complex leibniz = two_pi_i_n_pow(s, n) * acc;

  // Gamma(1 - (s + e)) is the reflection of the Gamma jet at 1 - s.
  const auto order = static_cast<std::size_t>(r);
  SJet f = reflect(gamma_jet(1.0 - s, order));
  f *= pow_principal(base, SJet::variable(s, order) - 1.0);
  const Complex via_jet = f[order] * factorial(r);
  return {leibniz, via_jet};
}

Complex coeff_hurwitz_deriv(Complex s, int r, int n, const EvalParams&) {
  require_coefficient_region(SeriesFamily::hurwitz_deriv_in_alpha, s);
  if (r < 0) throw DomainError("coeff_hurwitz_deriv: r must be >= 0");
  if (n == 0) return {};
  if (s.imag() == 0.0 && n < 0) return std::conj(coeff_hurwitz_deriv(s, r, -n));
  const LeibnizRoutes routes = coeff_hurwitz_deriv_routes(s, r, n);
  const double scale = std::max(std::abs(routes.leibniz), std::abs(routes.jet));
  if (std::abs(routes.leibniz - routes.jet) > kRouteTolerance * scale) {
    throw NumericError("coeff_hurwitz_deriv: Leibniz and jet routes disagree");
  }
  return ensure_finite(routes.leibniz, "coeff_hurwitz_deriv");
}

Complex finite_fourier_rational(Complex s, int a, int q, const EvalParams& params) {
  if (q < 1 || a < 1 || a > q) throw DomainError("finite_fourier_rational: requires 1 <= a <= q");
  if (std::abs(s - 1.0) < kPoleExclusion) throw DomainError("finite_fourier_rational: pole at s = 1");
  require_gamma_finite(1.0 - s, "finite_fourier_rational");

  if (s == Complex{}) {
    // zeta(1-s, x) = 1/(-s) - psi(x) + O(s) and sum_j sin(2 pi j a/q) = 0.
    double cos_sum = 0.0;
    Complex psi_sum{};
    for (int j = 1; j <= q; ++j) {
      const double theta = kTwoPi * j * a / q;
      cos_sum += std::cos(theta);
      psi_sum += std::sin(theta) * polygamma(0, static_cast<double>(j) / q);
    }
    return 2.0 / (kTwoPi * q) * (-0.5 * kPi * cos_sum - psi_sum);
  }

  Complex sum{};
  for (int j = 1; j <= q; ++j) {
    const Complex phase = kPi * s / 2.0 + kTwoPi * j * a / q;
    sum += std::sin(phase) * hurwitz_zeta(1.0 - s, static_cast<double>(j) / q, params);
  }
  const Complex prefactor = 2.0 * std::exp((s - 1.0) * std::log(kTwoPi * q)) * gamma_function(1.0 - s);
  return ensure_finite(prefactor * sum, "finite_fourier_rational");
}

KummerPair kummer_coeff(int n) {
  if (n < 1) throw DomainError("kummer_coeff: n must be >= 1");
  return {0.5 / n, (std::log(kTwoPi * n) + kEulerGamma) / (kPi * n)};
}

double kummer_parseval(const EvalParams& params) {
  // sum n^-2 (c + log n)^2 = c^2 zeta(2) - 2c zeta'(2) + zeta''(2), c = log 2 pi + gamma
  const SJet z = riemann_zeta_jet(2.0, 2, params);
  const double z0 = z[0].real();
  const double z1 = z[1].real();
  const double z2 = 2.0 * z[2].real();
  const double c = std::log(kTwoPi) + kEulerGamma;
  return 0.5 * (0.25 * z0 + (c * c * z0 - 2.0 * c * z1 + z2) / (kPi * kPi));
}

Complex coeff_lerch_lambda(double alpha, Complex s, int n) {
  if (!(alpha > 0.0)) throw DomainError("coeff_lerch_lambda: alpha must be > 0");
  require_coefficient_region(SeriesFamily::lerch_in_lambda, s);
  if (n < 0) return {};
  return std::exp(-s * std::log(n + alpha));
}

Complex coeff_lerch_alpha(double lambda, Complex s, int n, const EvalParams&) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("coeff_lerch_alpha: lambda must lie in (0, 1)");
  require_coefficient_region(SeriesFamily::lerch_in_alpha, s);
  require_gamma_finite(1.0 - s, "coeff_lerch_alpha");
  const Complex base(0.0, -kTwoPi * (n + lambda));
  return ensure_finite(gamma_function(1.0 - s) * pow_principal(base, s - 1.0), "coeff_lerch_alpha");
}

Complex family_coefficient(SeriesFamily family, const FamilyPoint& point, int n, const EvalParams& params) {
  switch (family) {
    case SeriesFamily::zeta1_in_alpha: return coeff_zeta1(point.s, n, params);
    case SeriesFamily::hurwitz_in_alpha: return coeff_hurwitz_deriv(point.s, 0, n, params);
    case SeriesFamily::hurwitz_deriv_in_alpha: return coeff_hurwitz_deriv(point.s, point.r, n, params);
    case SeriesFamily::lerch_in_lambda: return coeff_lerch_lambda(point.alpha, point.s, n);
    case SeriesFamily::lerch_in_alpha: return coeff_lerch_alpha(point.lambda, point.s, n, params);
  }
  throw DomainError("family_coefficient: unknown family");
}

ParsevalValue parseval_rhs_detail(SeriesFamily family, const FamilyPoint& point, const EvalParams& params) {
  params.validate();
  require_parseval_region(family, point.s);
  const Complex s = point.s;
  const double sigma = s.real();
  const double t = s.imag();
  const double p = 2.0 - 2.0 * sigma;

  switch (family) {
    case SeriesFamily::zeta1_in_alpha: return zeta1_parseval(s, params);
    case SeriesFamily::hurwitz_in_alpha: {
      require_gamma_finite(1.0 - s, "parseval_rhs");
      const double value = std::pow(2.0, 2.0 * sigma - 1.0) * std::pow(kPi, 2.0 * sigma - 2.0) *
                           std::cosh(kPi * t) * std::norm(gamma_function(1.0 - s)) *
                           real_part(hurwitz_zeta(p, 1.0, params), "parseval_rhs");
      return {value, 0.0, 0};
    }
    case SeriesFamily::hurwitz_deriv_in_alpha: {
      if (point.r < 0) throw DomainError("parseval_rhs: r must be >= 0");
      require_gamma_finite(1.0 - s, "parseval_rhs");
      return {hurwitz_deriv_parseval(s, point.r, params), 0.0, 0};
    }
    case SeriesFamily::lerch_in_lambda: {
      if (!(point.alpha > 0.0)) throw DomainError("parseval_rhs: alpha must be > 0");
      return {real_part(hurwitz_zeta(2.0 * sigma, point.alpha, params), "parseval_rhs"), 0.0, 0};
    }
    case SeriesFamily::lerch_in_alpha: {
      if (!(point.lambda > 0.0 && point.lambda < 1.0)) throw DomainError("parseval_rhs: lambda must lie in (0, 1)");
      require_gamma_finite(1.0 - s, "parseval_rhs");
      const double zl = real_part(hurwitz_zeta(p, point.lambda, params), "parseval_rhs");
      const double zr = real_part(hurwitz_zeta(p, 1.0 - point.lambda, params), "parseval_rhs");
      const double value = std::pow(kTwoPi, 2.0 * sigma - 2.0) * std::norm(gamma_function(1.0 - s)) *
                           (std::exp(kPi * t) * zl + std::exp(-kPi * t) * zr);
      return {value, 0.0, 0};
    }
  }
  throw DomainError("parseval_rhs: unknown family");
}

double parseval_rhs(SeriesFamily family, const FamilyPoint& point, const EvalParams& params) {
  return parseval_rhs_detail(family, point, params).value;
}

double parseval_partial(SeriesFamily family, const FamilyPoint& point, int N, const EvalParams& params) {
  if (N < 0) throw DomainError("parseval_partial: N must be >= 0");
  const int first = family == SeriesFamily::lerch_in_lambda ? 0 : -N;
  double sum = 0.0;
  for (int n = first; n <= N; ++n) sum += std::norm(family_coefficient(family, point, n, params));
  return sum;
}

MikolasValue mikolas_product_detail(Complex s1, Complex s2, const EvalParams& params) {
  if (!((s1 + s2).real() < 1.0)) throw DomainError("mikolas_product: requires Re(s1 + s2) < 1");
  require_gamma_finite(1.0 - s1, "mikolas_product");
  require_gamma_finite(1.0 - s2, "mikolas_product");

  const Complex pairing = 2.0 * std::cos(kPi * (s1 - s2) / 2.0) * std::exp((s1 + s2 - 2.0) * std::log(kTwoPi)) *
                          gamma_function(1.0 - s1) * gamma_function(1.0 - s2) *
                          hurwitz_zeta(2.0 - s1 - s2, 1.0, params);

  std::optional<Complex> beta;
  try {
    const Complex v = beta_fn(1.0 - s1, 1.0 - s2) * hurwitz_zeta(1.0 - s1 - s2, 1.0, params);
    if (is_finite(v)) beta = v;
  } catch (const NumericError&) {
    beta.reset();
  }
  return {ensure_finite(pairing, "mikolas_product"), beta};
}

Complex mikolas_product(Complex s1, Complex s2, const EvalParams& params) {
  return mikolas_product_detail(s1, s2, params).pairing;
}

}  // namespace hzeta
