#include <doctest.h>

#include <cmath>
#include <vector>

#include "hzeta/quadrature.hpp"
#include "hzeta/special.hpp"
#include "test_util.hpp"

using namespace hzeta;
using hzeta::test::rel_diff;

namespace {

Integrand make(std::function<Complex(double)> f) {
  Integrand g;
  g.f = std::move(f);
  return g;
}

// int_lower^inf e^{i w u} u^-s du = (-i w)^(s-1) Gamma(1-s, -i w lower)
Complex tail_closed_form(Complex s, double omega, double lower) {
  const Complex miw(0.0, -omega);
  return pow_principal(miw, s - 1.0) * upper_incomplete_gamma(1.0 - s, miw * lower);
}

struct ClosedForm {
  Integrand f;
  Complex value;
};

std::vector<ClosedForm> closed_form_integrands() {
  std::vector<ClosedForm> out;
  for (double p : {-0.9, -0.75, -0.5, -0.2, 0.0, 0.5, 1.0, 2.5, 7.0, 12.0}) {
    out.push_back({make([p](double x) { return Complex(std::pow(x, p)); }), 1.0 / (p + 1.0)});
  }
  for (double p : {-0.9, -0.5, 0.0, 1.0, 3.0}) {
    // int x^p log x = -1/(p+1)^2
    out.push_back({make([p](double x) { return Complex(std::pow(x, p) * std::log(x)); }), -1.0 / ((p + 1.0) * (p + 1.0))});
  }
  for (double c : {-20.0, -3.0, -0.5, 0.7, 4.0}) {
    out.push_back({make([c](double x) { return Complex(std::exp(c * x)); }), std::expm1(c) / c});
  }
  for (double k : {1.0, 3.0, 10.0, 25.0, 40.0}) {
    out.push_back({make([k](double x) { return std::polar(1.0, k * x); }), Complex(std::sin(k), 1.0 - std::cos(k)) / k});
  }
  for (double p : {-0.5, 0.3, 2.0}) {
    for (double q : {-0.7, -0.3, 0.0, 1.5}) {
      // The right endpoint is resolved through f_right, as for any integrand
      // singular at 1.
      Integrand f = make([p, q](double x) { return Complex(std::pow(x, p) * std::pow(1.0 - x, q)); });
      f.f_right = [p, q](double y) { return Complex(std::pow(1.0 - y, p) * std::pow(y, q)); };
      out.push_back({f, std::beta(p + 1.0, q + 1.0)});
    }
  }
  for (double c : {0.1, 0.5, 1.0, 5.0}) {
    // int dx / (c^2 + x^2) = atan(1/c)/c
    out.push_back({make([c](double x) { return Complex(1.0 / (c * c + x * x)); }), std::atan(1.0 / c) / c});
  }
  for (double c : {0.5, 2.0, 8.0}) {
    out.push_back({make([c](double x) { return Complex(std::sqrt(x) * std::exp(-c * x)); }),
                   (std::sqrt(kPi) / 2.0 * std::erf(std::sqrt(c)) - std::sqrt(c) * std::exp(-c)) / std::pow(c, 1.5)});
  }
  for (double c : {0.5, 3.0, 20.0}) {
    // int log(1 + c x) = ((1+c) log(1+c) - c)/c
    out.push_back({make([c](double x) { return Complex(std::log1p(c * x)); }), ((1.0 + c) * std::log1p(c) - c) / c});
  }
  for (double k : {2.0, 6.0, 11.0}) {
    // int x^-1/2 cos(k x) via the complex tail of a Fresnel-type integral: use the series
    double sum = 0.0;
    double term = 1.0;
    for (int m = 0; m < 80; ++m) {
      sum += term / (2.0 * m + 0.5);
      term *= -k * k / ((2.0 * m + 1.0) * (2.0 * m + 2.0));
    }
    out.push_back({make([k](double x) { return Complex(std::cos(k * x) / std::sqrt(x)); }), sum});
  }
  return out;
}

}  // namespace

TEST_CASE("integrate_01 values") {
  CHECK(rel_diff(integrate_01(make([](double) { return Complex(1.0); })).value, 1.0) < 1e-15);
  CHECK(rel_diff(integrate_01(make([](double x) { return Complex(1.0 / std::sqrt(x)); })).value, 2.0) < 1e-12);
  CHECK(rel_diff(integrate_01(make([](double x) { return Complex((0.5 - x) * (0.5 - x)); })).value, 1.0 / 12.0) < 1e-14);
  const QuadratureResult r = integrate_01(make([](double x) { return Complex(std::exp(x)); }));
  CHECK(r.evaluations > 0);
  CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("errors") {
  Integrand bad = make([](double x) { return Complex(1.0 / x); });
  bad.hint = {SingularityKind::left_algebraic, -1.0};
  CHECK_THROWS_AS(integrate_01(bad), DomainError);
  CHECK_THROWS_AS(integrate_01(Integrand{}), DomainError);
  EvalParams coarse;
  coarse.quad_level = 3;
  CHECK_THROWS_AS(integrate_01(make([](double x) { return std::polar(1.0, 400.0 * x * x); }), coarse), ConvergenceError);
  CHECK_THROWS_AS(integrate_01(make([](double) { return Complex(NAN); })), NumericError);
  CHECK_THROWS_AS(oscillatory_tail(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(oscillatory_tail(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(oscillatory_tail(2.0, 1.0, 0.0), DomainError);
}

TEST_CASE("fourier_coeff_numeric values") {
  CHECK(std::abs(fourier_coeff_numeric(make([](double) { return Complex(1.0); }), 3)) < 1e-15);
  CHECK(rel_diff(fourier_coeff_numeric(make([](double x) { return std::polar(1.0, kTwoPi * x); }), 1), 1.0) < 1e-14);
  const Complex c = fourier_coeff_numeric(make([](double x) { return Complex(0.5 - x); }), 1);
  CHECK(rel_diff(c, Complex(0.0, -1.0 / kTwoPi)) < 1e-13);
  // Panel path: (1/2 - x) has coefficient 1/(2 pi i n) for every n != 0.
  for (int n : {-40, 9, 17, 100}) {
    const Complex cn = fourier_coeff_numeric(make([](double x) { return Complex(0.5 - x); }), n);
    CHECK(rel_diff(cn, Complex(0.0, -1.0 / (kTwoPi * n))) < 1e-12);
  }
  // Singular and oscillating: int x^-1/2 e^{-2 pi i n x} vs the incomplete gamma form.
  for (int n : {1, 5, 12}) {
    const Complex closed = std::sqrt(kPi) * pow_principal(Complex(0.0, kTwoPi * n), -0.5) -
                           pow_principal(Complex(0.0, kTwoPi * n), -0.5) * upper_incomplete_gamma(0.5, Complex(0.0, kTwoPi * n));
    Integrand f = make([](double x) { return Complex(1.0 / std::sqrt(x)); });
    f.hint = {SingularityKind::left_algebraic, -0.5};
    CHECK(rel_diff(fourier_coeff_numeric(f, n), closed) < 1e-11);
  }
}

TEST_CASE("parseval_lhs_numeric values") {
  CHECK(rel_diff(parseval_lhs_numeric(make([](double x) { return std::polar(1.0, kTwoPi * x); })), 1.0) < 1e-14);
  CHECK(rel_diff(parseval_lhs_numeric(make([](double x) { return Complex(0.5 - x); })), 1.0 / 12.0) < 1e-14);
}

TEST_CASE("oscillatory_tail values") {
  CHECK(rel_diff(oscillatory_tail(2.0, kTwoPi, 1.0), tail_closed_form(2.0, kTwoPi, 1.0)) < 1e-10);
  CHECK(rel_diff(oscillatory_tail(3.0, kTwoPi, 1.0), tail_closed_form(3.0, kTwoPi, 1.0)) < 1e-10);
  CHECK(rel_diff(oscillatory_tail(2.0, 0.0, 1.0), 1.0) < 1e-12);
  CHECK(rel_diff(oscillatory_tail(3.5, 0.0, 2.0), std::pow(2.0, -2.5) / 2.5) < 1e-12);
}

TEST_CASE("property: oscillatory_tail matches the incomplete gamma form") {
  for (double sigma : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 5; ++n) {
      for (double t : {0.0, 1.5}) {
        const Complex s(sigma, t);
        const double omega = -kTwoPi * n;
        CAPTURE(s);
        CAPTURE(n);
        CHECK(rel_diff(oscillatory_tail(s, omega, 1.0), tail_closed_form(s, omega, 1.0)) < 1e-8);
        CHECK(rel_diff(oscillatory_tail(s, -omega, 2.5), tail_closed_form(s, -omega, 2.5)) < 1e-8);
      }
    }
  }
}

TEST_CASE("property: linearity within the error estimates") {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Complex> p(6);
    std::vector<Complex> q(6);
    for (auto& c : p) c = test::uniform_complex(-2.0, 2.0, -2.0, 2.0);
    for (auto& c : q) c = test::uniform_complex(-2.0, 2.0, -2.0, 2.0);
    const Complex a = test::uniform_complex(-3.0, 3.0, -3.0, 3.0);
    const Complex b = test::uniform_complex(-3.0, 3.0, -3.0, 3.0);
    auto poly = [](const std::vector<Complex>& c, double x) {
      Complex v{};
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
      return v;
    };
    const QuadratureResult rf = integrate_01(make([&](double x) { return poly(p, x); }));
    const QuadratureResult rg = integrate_01(make([&](double x) { return poly(q, x); }));
    const QuadratureResult rh = integrate_01(make([&](double x) { return a * poly(p, x) + b * poly(q, x); }));
    const double budget = 2.0 * (rh.error_estimate + std::abs(a) * rf.error_estimate + std::abs(b) * rg.error_estimate);
    CHECK(std::abs(rh.value - (a * rf.value + b * rg.value)) <= budget);
  }
}

TEST_CASE("property: Parseval on trigonometric polynomials") {
  for (int trial = 0; trial < 30; ++trial) {
    const int width = test::uniform_int(1, 12);
    std::vector<Complex> c(2 * width + 1);
    double norm = 0.0;
    for (auto& x : c) {
      x = test::uniform_complex(-1.0, 1.0, -1.0, 1.0);
      norm += std::norm(x);
    }
    Integrand f = make([&c, width](double x) {
      Complex v{};
      for (int n = -width; n <= width; ++n) v += c[n + width] * std::polar(1.0, kTwoPi * n * x);
      return v;
    });
    CHECK(std::abs(parseval_lhs_numeric(f) - norm) < 1e-12 * std::max(1.0, norm));
    // Coefficient extraction recovers the inputs.
    const int n = test::uniform_int(-width, width);
    CHECK(std::abs(fourier_coeff_numeric(f, n) - c[n + width]) < 1e-12);
  }
}

TEST_CASE("property: error estimates are honest") {
  const std::vector<ClosedForm> cases = closed_form_integrands();
  REQUIRE(cases.size() >= 50);
  int honest = 0;
  int total = 0;
  for (const ClosedForm& c : cases) {
    if (total == 50) break;
    ++total;
    const QuadratureResult r = integrate_01(c.f);
    const double err = std::abs(r.value - c.value);
    if (err <= 10.0 * r.error_estimate) {
      ++honest;
    } else {
      MESSAGE("estimate " << r.error_estimate << " below true error " << err << " for case " << total);
    }
  }
  CHECK(total == 50);
  CHECK(honest >= 48);
}
