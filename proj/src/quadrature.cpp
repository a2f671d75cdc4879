// SPDX-License-Identifier: Apache-2.0

#include "hzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hzeta {

namespace {

// Nodes beyond t = 6.1 lie closer than ~1e-304 to an endpoint.
constexpr double kTMax = 6.1;
constexpr int kMaxLevel = 14;
constexpr int kMinLevel = 3;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// One symmetric node pair: the points at distance d from each end of the
// unit interval share weight w (already including dx/dt, not the step h).
struct Node {
  double d;
  double w;
};

using Level = std::vector<Node>;

Node make_node(double t) {
  const double u = 0.5 * kPi * std::sinh(t);
  const double e = std::exp(-2.0 * u);
  const double d = e / (1.0 + e);
  return {d, kPi * std::cosh(t) * d * (1.0 - d)};
}

std::vector<Level> build_levels() {
  std::vector<Level> levels(kMaxLevel + 1);
  for (int j = 1; j <= kTMax; ++j) levels[0].push_back(make_node(j));
  for (int k = 1; k <= kMaxLevel; ++k) {
    const double h = std::ldexp(1.0, -k);
    for (long j = 1;; j += 2) {
      const double t = j * h;
      if (t > kTMax) break;
      levels[k].push_back(make_node(t));
    }
  }
  return levels;
}

const std::vector<Level>& levels() {
  static const std::vector<Level> table = build_levels();
  return table;
}

void check_hint(const SingularityHint& hint) {
  if (hint.kind != SingularityKind::none && !(hint.exponent > -1.0)) {
    throw DomainError("integrate: algebraic endpoint exponent must be > -1");
  }
}

// tanh-sinh on [a, b] within [0, 1]. `right` replaces f near b when b == 1.
QuadratureResult tanh_sinh(const std::function<Complex(double)>& f,
                           const std::function<Complex(double)>& right, double a, double b,
                           const EvalParams& params) {
  const double len = b - a;
  const int cap = std::min(params.quad_level, kMaxLevel);
  const bool use_right = right && b == 1.0;
  long evaluations = 0;
  double abs_sum = 0.0;

  auto at_left = [&](double d) -> Complex {
    const double x = a + len * d;
    if (x <= 0.0 || x >= 1.0) return {};
    ++evaluations;
    return f(x);
  };
  auto at_right = [&](double d) -> Complex {
    if (use_right) {
      ++evaluations;
      return right(len * d);
    }
    const double x = b - len * d;
    if (x <= 0.0 || x >= 1.0) return {};
    ++evaluations;
    return f(x);
  };
  auto add_level = [&](const Level& nodes, Complex& sum) {
    for (const Node& node : nodes) {
      const Complex v = node.w * (at_left(node.d) + at_right(node.d));
      if (!is_finite(v)) throw NumericError("integrate: integrand returned a non-finite value");
      sum += v;
      abs_sum += std::abs(v);
    }
  };

  const auto& table = levels();
  Complex sum = (kPi / 4.0) * at_left(0.5);
  abs_sum = std::abs(sum);
  add_level(table[0], sum);
  Complex previous = len * sum;
  for (int k = 1; k <= cap; ++k) {
    add_level(table[k], sum);
    const double h = std::ldexp(1.0, -k);
    const Complex current = len * h * sum;
    const double diff = std::abs(current - previous);
    if (k >= std::min(kMinLevel, cap) && diff <= params.tolerance * std::max(1.0, std::abs(current))) {
      const double floor = 10.0 * kEps * len * h * abs_sum;
      return {current, std::max(diff, floor), evaluations};
    }
    previous = current;
  }
  throw ConvergenceError("integrate: no convergence by level " + std::to_string(cap));
}

Complex wynn_epsilon(const std::vector<Complex>& partial) {
  std::vector<Complex> prev(partial.size() + 1, Complex{});
  std::vector<Complex> cur = partial;
  Complex best = partial.back();
  for (int col = 1; cur.size() > 1; ++col) {
    std::vector<Complex> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Complex diff = cur[i + 1] - cur[i];
      if (diff == Complex{}) return col % 2 == 1 ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0) best = cur.back();
  }
  return best;
}

}  // namespace

QuadratureResult integrate_01(const Integrand& f, const EvalParams& params) {
  params.validate();
  check_hint(f.hint);
  if (!f.f) throw DomainError("integrate_01: empty integrand");
  const QuadratureResult r = tanh_sinh(f.f, f.f_right, 0.0, 1.0, params);
  ensure_finite(r.value, "integrate_01");
  return r;
}

QuadratureResult fourier_coeff_numeric_result(const Integrand& f, int n, const EvalParams& params) {
  params.validate();
  check_hint(f.hint);
  if (!f.f) throw DomainError("fourier_coeff_numeric: empty integrand");
  const double w = -kTwoPi * n;
  auto g = [&](double x) { return f.f(x) * std::polar(1.0, w * x); };
  std::function<Complex(double)> g_right;
  // e^{-2 pi i n (1 - y)} = e^{2 pi i n y}
  if (f.f_right) g_right = [&](double y) { return f.f_right(y) * std::polar(1.0, -w * y); };

  const int panels = std::abs(n) > 8 ? std::abs(n) : 1;
  QuadratureResult total{};
  for (int p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / panels;
    const double b = p + 1 == panels ? 1.0 : static_cast<double>(p + 1) / panels;
    const QuadratureResult r = tanh_sinh(g, g_right, a, b, params);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
  }
  ensure_finite(total.value, "fourier_coeff_numeric");
  return total;
}

Complex fourier_coeff_numeric(const Integrand& f, int n, const EvalParams& params) {
  return fourier_coeff_numeric_result(f, n, params).value;
}

double parseval_lhs_numeric(const Integrand& f, const EvalParams& params) {
  if (!f.f) throw DomainError("parseval_lhs_numeric: empty integrand");
  Integrand sq;
  sq.f = [&](double x) { return Complex(std::norm(f.f(x)), 0.0); };
  if (f.f_right) sq.f_right = [&](double y) { return Complex(std::norm(f.f_right(y)), 0.0); };
  if (f.hint.kind != SingularityKind::none) sq.hint = {f.hint.kind, 2.0 * f.hint.exponent};
  const QuadratureResult r = integrate_01(sq, params);
  if (r.value.real() < -r.error_estimate) throw NumericError("parseval_lhs_numeric: negative integral");
  return std::max(0.0, r.value.real());
}

Complex oscillatory_tail(Complex s, double omega, double lower, const EvalParams& params) {
  params.validate();
  if (!(lower > 0.0) || !std::isfinite(lower)) throw DomainError("oscillatory_tail: lower must be > 0");
  if (!std::isfinite(omega)) throw DomainError("oscillatory_tail: omega must be finite");

  if (omega == 0.0) {
    if (!(s.real() > 1.0)) throw DomainError("oscillatory_tail: omega = 0 requires Re s > 1");
    // u = lower / x: lower^(1-s) int_0^1 x^(s-2) dx
    auto g = [s](double x) { return std::exp((s - 2.0) * std::log(x)); };
    const QuadratureResult r = tanh_sinh(g, {}, 0.0, 1.0, params);
    return ensure_finite(std::exp((1.0 - s) * std::log(lower)) * r.value, "oscillatory_tail");
  }
  if (!(s.real() > 0.0)) throw DomainError("oscillatory_tail: requires Re s > 0");

  // Half-period panels [lower + kP, lower + (k+1)P]; consecutive panel
  // integrals alternate in sign and shrink like u^-sigma.
  const double period = kPi / std::abs(omega);
  EvalParams panel_params = params;
  panel_params.tolerance = std::max(0.1 * params.tolerance, 1e-15);
  auto panel = [&](int k) {
    const double a = lower + k * period;
    auto g = [&](double x) {
      const double u = a + period * x;
      return std::polar(1.0, omega * u) * std::exp(-s * std::log(u));
    };
    return period * tanh_sinh(g, {}, 0.0, 1.0, panel_params).value;
  };

  constexpr int kWindow = 24;
  constexpr int kMaxPanels = 600;
  std::vector<Complex> partial;
  Complex running{};
  Complex last_estimate{};
  int agree = 0;
  for (int k = 0; k < kMaxPanels; ++k) {
    running += panel(k);
    partial.push_back(running);
    if (partial.size() < 8) continue;
    const std::size_t first = partial.size() > kWindow ? partial.size() - kWindow : 0;
    const Complex estimate =
        wynn_epsilon(std::vector<Complex>(partial.begin() + static_cast<long>(first), partial.end()));
    if (std::abs(estimate - last_estimate) <= params.tolerance * std::abs(estimate)) {
      if (++agree >= 3) return ensure_finite(estimate, "oscillatory_tail");
    } else {
      agree = 0;
    }
    last_estimate = estimate;
  }
  throw ConvergenceError("oscillatory_tail: extrapolation did not settle");
}

}  // namespace hzeta
