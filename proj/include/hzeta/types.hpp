// SPDX-License-Identifier: Apache-2.0
//
// Shared scalar types, evaluation parameters and error classes.

#ifndef HZETA_TYPES_HPP
#define HZETA_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hzeta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr Complex kI{0.0, 1.0};

/// Knobs shared by every numeric operation. Each operation documents which
/// fields it reads; unused fields are ignored.
struct EvalParams {
  int truncation_n = 10;     // minimum head length / coefficient count
  int em_order = 12;         // Bernoulli correction terms
  int quad_level = 12;       // tanh-sinh level cap
  double tolerance = 1e-12;  // target relative error

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pole hits, parameters outside a validity region, malformed requests.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An iterative scheme ran out of budget.
class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Converts a non-finite result into a NumericError naming the operation.
inline Complex ensure_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw NumericError(std::string(what) + ": non-finite result");
  return z;
}

inline void EvalParams::validate() const {
  if (truncation_n < 1) throw DomainError("EvalParams: truncation_n must be >= 1");
  if (em_order < 1) throw DomainError("EvalParams: em_order must be >= 1");
  if (quad_level < 1) throw DomainError("EvalParams: quad_level must be >= 1");
  if (!(tolerance > 0.0)) throw DomainError("EvalParams: tolerance must be > 0");
}

}  // namespace hzeta

#endif  // HZETA_TYPES_HPP
