// SPDX-License-Identifier: Apache-2.0

#include "hzeta/jet.hpp"

#include <string>
#include <utility>

namespace hzeta {

SJet::SJet(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("SJet: coefficient vector must be non-empty");
}

SJet SJet::constant(Complex value, std::size_t order) {
  SJet j(order);
  j.c_[0] = value;
  return j;
}

SJet SJet::variable(Complex point, std::size_t order) {
  SJet j(order);
  j.c_[0] = point;
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Complex SJet::derivative(std::size_t k) const {
  double factorial = 1.0;
  for (std::size_t i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
  return c_[k] * factorial;
}

void SJet::require_same_order(const SJet& other, const char* op) const {
  if (other.order() != order()) {
    throw DomainError(std::string("SJet ") + op + ": order mismatch");
  }
}

SJet& SJet::operator+=(const SJet& other) {
  require_same_order(other, "+");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

SJet& SJet::operator-=(const SJet& other) {
  require_same_order(other, "-");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

SJet& SJet::operator*=(const SJet& other) {
  require_same_order(other, "*");
  if (c_.size() == 1) {
    c_[0] *= other.c_[0];
    return *this;
  }
  std::vector<Complex> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Complex acc{};
    for (std::size_t j = 0; j <= k; ++j) acc += c_[j] * other.c_[k - j];
    out[k] = acc;
  }
  c_ = std::move(out);
  return *this;
}

SJet& SJet::operator/=(const SJet& other) {
  require_same_order(other, "/");
  const Complex b0 = other.c_[0];
  if (b0 == Complex{}) throw DomainError("SJet /: divisor has zero value coefficient");
  // q = a / b  <=>  q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Complex acc = c_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= other.c_[j] * c_[k - j];
    c_[k] = acc / b0;
  }
  return *this;
}

SJet SJet::operator-() const {
  SJet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

SJet exp(const SJet& a) {
  const std::size_t n = a.order();
  SJet r(n);
  r[0] = std::exp(a[0]);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * r[k - j];
    r[k] = acc / static_cast<double>(k);
  }
  return r;
}

namespace {

// std::log returns arg = -pi for a negative real with a -0.0 imaginary part;
// the library convention is arg in (-pi, pi].
Complex principal_log(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) z = Complex(z.real(), 0.0);
  return std::log(z);
}

}  // namespace

SJet log(const SJet& a) {
  const Complex a0 = a[0];
  if (a0 == Complex{}) throw DomainError("SJet log: zero value coefficient");
  const std::size_t n = a.order();
  SJet r(n);
  r[0] = principal_log(a0);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 1; j < k; ++j) acc += static_cast<double>(j) * r[j] * a[k - j];
    r[k] = (a[k] - acc / static_cast<double>(k)) / a0;
  }
  return r;
}

SJet pow(const SJet& a, Complex p) { return exp(log(a) * p); }

SJet reciprocal(const SJet& a) { return SJet::constant(1.0, a.order()) / a; }

SJet reflect(const SJet& a) {
  SJet r = a;
  for (std::size_t k = 1; k <= r.order(); k += 2) r[k] = -r[k];
  return r;
}

SJet jet_arith(JetOp kind, const SJet& a, const SJet* b, Complex exponent) {
  auto need_b = [&]() -> const SJet& {
    if (b == nullptr) throw DomainError("jet_arith: binary operation needs a second operand");
    return *b;
  };
  switch (kind) {
    case JetOp::add:
      return a + need_b();
    case JetOp::mul:
      return a * need_b();
    case JetOp::div:
      return a / need_b();
    case JetOp::exp:
      return exp(a);
    case JetOp::log:
      return log(a);
    case JetOp::pow_scalar:
      return pow(a, exponent);
  }
  throw DomainError("jet_arith: unknown operation");
}

}  // namespace hzeta
