// SPDX-License-Identifier: Apache-2.0
//
// Truncated Taylor expansions ("jets") in the complex variable s.
//
// A jet of order r holds coefficients c[0..r] with c[k] = f^(k)(s0) / k!.
// Arithmetic on jets propagates all derivatives up to order r, which is how
// the library obtains s-derivatives of zeta and gamma expressions.

#ifndef HZETA_JET_HPP
#define HZETA_JET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hzeta/types.hpp"

namespace hzeta {

class SJet {
 public:
  /// Zero jet of the given order.
  explicit SJet(std::size_t order = 0) : c_(order + 1, Complex{}) {}

  /// Takes ownership of a coefficient vector; must be non-empty.
  explicit SJet(std::vector<Complex> coeffs);

  static SJet constant(Complex value, std::size_t order);
  /// The identity function s -> s expanded at `point`: [point, 1, 0, ...].
  static SJet variable(Complex point, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  Complex value() const { return c_[0]; }
  Complex operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }
  std::span<const Complex> coeffs() const { return c_; }

  /// k-th derivative, i.e. k! * c[k].
  Complex derivative(std::size_t k) const;

  SJet& operator+=(const SJet& other);
  SJet& operator-=(const SJet& other);
  SJet& operator*=(const SJet& other);
  SJet& operator/=(const SJet& other);
  SJet& operator+=(Complex a) {
    c_[0] += a;
    return *this;
  }
  SJet& operator-=(Complex a) {
    c_[0] -= a;
    return *this;
  }
  SJet& operator*=(Complex a) {
    for (auto& x : c_) x *= a;
    return *this;
  }

  SJet operator-() const;

 private:
  void require_same_order(const SJet& other, const char* op) const;
  std::vector<Complex> c_;
};

inline SJet operator+(SJet a, const SJet& b) { return a += b; }
inline SJet operator-(SJet a, const SJet& b) { return a -= b; }
inline SJet operator*(SJet a, const SJet& b) { return a *= b; }
inline SJet operator/(SJet a, const SJet& b) { return a /= b; }
inline SJet operator+(SJet a, Complex b) { return a += b; }
inline SJet operator-(SJet a, Complex b) { return a -= b; }
inline SJet operator*(SJet a, Complex b) { return a *= b; }
inline SJet operator*(Complex b, SJet a) { return a *= b; }

SJet exp(const SJet& a);
/// Principal-branch logarithm; throws DomainError for a zero value coefficient.
SJet log(const SJet& a);
/// a^p = exp(p Log a), principal branch.
SJet pow(const SJet& a, Complex p);
SJet reciprocal(const SJet& a);

/// Given the jet of f at -s0, returns the jet of g(s) = f(-s) at s0.
SJet reflect(const SJet& a);

enum class JetOp { add, mul, div, exp, log, pow_scalar };

/// Single entry point over the primitive operations. Binary kinds need `b`;
/// pow_scalar raises `a` to `exponent`.
SJet jet_arith(JetOp kind, const SJet& a, const SJet* b = nullptr, Complex exponent = {});

}  // namespace hzeta

#endif  // HZETA_JET_HPP
