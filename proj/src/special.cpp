// SPDX-License-Identifier: Apache-2.0

#include "hzeta/special.hpp"

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

namespace hzeta {

namespace {

using boost::multiprecision::cpp_rational;

std::array<double, kMaxBernoulli + 1> build_bernoulli_table() {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m exactly.
  std::vector<cpp_rational> b(kMaxBernoulli + 1);
  b[0] = 1;
  for (int m = 1; m <= kMaxBernoulli; ++m) {
    cpp_rational acc = 0;
    cpp_rational binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += binom * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
  }
  std::array<double, kMaxBernoulli + 1> out{};
  for (int k = 0; k <= kMaxBernoulli; ++k) out[k] = b[k].convert_to<double>();
  return out;
}

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  static const auto table = build_bernoulli_table();
  return table;
}

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(kTwoPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double bernoulli_number(int k) {
  if (k < 0 || k > kMaxBernoulli) {
    throw DomainError("bernoulli_number: index " + std::to_string(k) + " outside [0, " +
                      std::to_string(kMaxBernoulli) + "]");
  }
  if (k % 2 == 1 && k > 1) throw DomainError("bernoulli_number: odd index > 1 requested");
  return bernoulli_table()[k];
}

bool near_nonpositive_integer(Complex z, double tol) {
  if (z.real() > tol) return false;
  const double nearest = std::round(z.real());
  return std::abs(z - Complex(nearest, 0.0)) <= tol;
}

Complex principal_log(Complex z) {
  if (z == Complex{}) throw DomainError("principal_log: zero argument");
  if (z.imag() == 0.0 && z.real() < 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

Complex gamma_function(Complex z) {
  if (near_nonpositive_integer(z, 0.0)) throw DomainError("gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

Complex polygamma(int m, Complex z) {
  if (m < 0) throw DomainError("polygamma: order must be >= 0");
  if (near_nonpositive_integer(z, 0.0)) throw DomainError("polygamma: pole at nonpositive integer");

  // Upward recurrence psi^(m)(z) = psi^(m)(z+1) - (-1)^m m! z^(-m-1).
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double m_fact = factorial(m);
  Complex shift_sum{};
  while (z.real() < 1.0 || std::abs(z) < 20.0) {
    shift_sum += std::pow(z, -(m + 1));
    z += 1.0;
  }
  const Complex recurrence = -sign_m * m_fact * shift_sum;

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex result;
  if (m == 0) {
    Complex series{};
    Complex zpow = inv2;  // z^(-2k)
    for (int k = 1; 2 * k <= kMaxBernoulli; ++k) {
      const Complex term = bernoulli_number(2 * k) / (2.0 * k) * zpow;
      series += term;
      if (std::abs(term) < 1e-18 * std::abs(series)) break;
      zpow *= inv2;
    }
    result = std::log(z) - 0.5 * inv - series;
  } else {
    const Complex zm = std::pow(inv, m);
    Complex sum = factorial(m - 1) * zm + 0.5 * m_fact * zm * inv;
    // B_2k (2k+m-1)! / (2k)! z^(-2k-m)
    Complex zpow = zm * inv2;
    for (int k = 1; 2 * k <= kMaxBernoulli; ++k) {
      double ratio = 1.0;  // (2k+m-1)! / (2k)!
      for (int i = 2 * k + 1; i <= 2 * k + m - 1; ++i) ratio *= i;
      const Complex term = bernoulli_number(2 * k) * ratio * zpow;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      zpow *= inv2;
    }
    result = ((m + 1) % 2 == 0 ? 1.0 : -1.0) * sum;
  }
  return ensure_finite(result + recurrence, "polygamma");
}

SJet gamma_jet(Complex z, std::size_t order) {
  const Complex g = gamma_function(z);
  if (order == 0) return SJet::constant(g, 0);
  // log Gamma(z + e) - log Gamma(z) = sum_{k>=1} psi^(k-1)(z) e^k / k!
  SJet shifted_log(order);
  for (std::size_t k = 1; k <= order; ++k) {
    shifted_log[k] = polygamma(static_cast<int>(k) - 1, z) / factorial(static_cast<int>(k));
  }
  SJet out = exp(shifted_log);
  out *= g;
  return out;
}

SJet pow_principal(Complex base, const SJet& exponent) {
  if (base == Complex{}) throw DomainError("pow_principal: zero base");
  return exp(exponent * principal_log(base));
}

Complex pow_principal(Complex base, Complex exponent) {
  if (base == Complex{}) throw DomainError("pow_principal: zero base");
  return std::exp(exponent * principal_log(base));
}

Complex beta_fn(Complex a, Complex b) {
  if (near_nonpositive_integer(a) || near_nonpositive_integer(b)) {
    throw DomainError("beta_fn: argument at a pole of gamma");
  }
  if (near_nonpositive_integer(a + b)) throw DomainError("beta_fn: a + b at a pole of gamma");
  return ensure_finite(gamma_function(a) * gamma_function(b) / gamma_function(a + b), "beta_fn");
}

}  // namespace hzeta
