// SPDX-License-Identifier: Apache-2.0
//
// Upper incomplete gamma function for complex order and argument.

#include <algorithm>
#include <cmath>
#include <limits>

#include "hzeta/special.hpp"

namespace hzeta {

namespace {

constexpr double kRelStop = 1e-15;
constexpr int kMaxIterations = 5000;

// Legendre continued fraction, modified Lentz iteration.
//   Gamma(a,z) = e^-z z^a / (z+1-a - 1(1-a)/(z+3-a - 2(2-a)/(z+5-a - ...)))
Complex continued_fraction(Complex a, Complex z) {
  constexpr double tiny = 1e-300;
  Complex b = z + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kRelStop) {
      return std::exp(-z + a * principal_log(z)) * h;
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
}

// lower gamma(a,z) = z^a e^-z sum_k z^k / (a (a+1) ... (a+k))
Complex lower_series(Complex a, Complex z) {
  Complex term = 1.0 / a;
  Complex sum = term;
  for (int k = 1; k <= kMaxIterations; ++k) {
    term *= z / (a + static_cast<double>(k));
    sum += term;
    if (std::abs(term) < kRelStop * 1e-2 * std::abs(sum)) {
      return std::exp(-z + a * principal_log(z)) * sum;
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: power series did not converge");
}

// Same function via z^a sum_k (-z)^k / (k! (a+k)); the terms do not alternate
// when Re z < 0, where the form above cancels badly.
Complex lower_series_kummer(Complex a, Complex z) {
  Complex power = 1.0;
  Complex sum = 1.0 / a;
  for (int k = 1; k <= kMaxIterations; ++k) {
    power *= -z / static_cast<double>(k);
    const Complex term = power / (a + static_cast<double>(k));
    sum += term;
    if (std::abs(term) < kRelStop * 1e-2 * std::abs(sum) && static_cast<double>(k) > std::abs(z)) {
      return std::exp(a * principal_log(z)) * sum;
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: power series did not converge");
}

// Gamma(0, z) = E1(z) = -gamma_E - Log z - sum_k (-z)^k / (k k!)
Complex exponential_integral_series(Complex z) {
  Complex term = 1.0;
  Complex sum{};
  for (int k = 1; k <= kMaxIterations; ++k) {
    term *= -z / static_cast<double>(k);
    const Complex contrib = term / static_cast<double>(k);
    sum += contrib;
    if (std::abs(contrib) < kRelStop * 1e-2 * std::max(1.0, std::abs(sum))) {
      return -kEulerGamma - principal_log(z) - sum;
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: exponential integral series did not converge");
}

// The continued fraction stalls close to the cut on the negative axis.
bool use_continued_fraction(Complex a, Complex z) {
  return std::abs(z) >= std::max(8.0, std::abs(a) + 2.0) && std::abs(std::arg(z)) <= 0.75 * kPi;
}

// Gamma(b, z) from Gamma(b+1, z): Gamma(b+1,z) = b Gamma(b,z) + z^b e^-z.
Complex step_down(Complex upper, Complex b, Complex z) {
  return (upper - std::exp(-z + b * principal_log(z))) / b;
}

}  // namespace

Complex upper_incomplete_gamma(Complex a, Complex z) {
  if (z == Complex{}) {
    if (a.real() > 0.0) return gamma_function(a);
    throw DomainError("upper_incomplete_gamma: z = 0 requires Re a > 0");
  }

  if (near_nonpositive_integer(a, 0.0)) {
    const int m = static_cast<int>(-std::round(a.real()));
    Complex value = use_continued_fraction(Complex{}, z) ? continued_fraction(Complex{}, z)
                                                         : exponential_integral_series(z);
    for (int b = -1; b >= -m; --b) value = step_down(value, static_cast<double>(b), z);
    return ensure_finite(value, "upper_incomplete_gamma");
  }

  if (use_continued_fraction(a, z)) return ensure_finite(continued_fraction(a, z), "upper_incomplete_gamma");

  if (a.real() > 0.0) {
    const Complex lower = z.real() < 0.0 ? lower_series_kummer(a, z) : lower_series(a, z);
    return ensure_finite(gamma_function(a) - lower, "upper_incomplete_gamma");
  }

  // Re a <= 0, not an integer: lift to Re > 0 and recur downward.
  const int lift = static_cast<int>(std::ceil(-a.real())) + 1;
  Complex value = upper_incomplete_gamma(a + static_cast<double>(lift), z);
  for (int j = lift - 1; j >= 0; --j) value = step_down(value, a + static_cast<double>(j), z);
  return ensure_finite(value, "upper_incomplete_gamma");
}

}  // namespace hzeta
