#include <doctest.h>

#include <cmath>

#include "hzeta/quadrature.hpp"
#include "hzeta/special.hpp"
#include "test_util.hpp"

using namespace hzeta;
using hzeta::test::rel_diff;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
  // B_60 = -1215233140483755572040304994079820246041491/56786730
  CHECK(bernoulli_number(60) == doctest::Approx(-2.1399949257225333665810744765191097e34).epsilon(1e-14));
  CHECK_THROWS_AS(bernoulli_number(3), DomainError);
  CHECK_THROWS_AS(bernoulli_number(62), DomainError);
  CHECK_THROWS_AS(bernoulli_number(-2), DomainError);
}

TEST_CASE("recurrence sum_j C(m+1, j) B_j = 0 holds in doubles") {
  for (int m = 2; m <= 30; m += 2) {
    double acc = 0.0;
    double scale = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
      if (j == 1 || j % 2 == 0) {
        acc += binom * bernoulli_number(j);
        scale += std::abs(binom * bernoulli_number(j));
      }
      binom = binom * (m + 1 - j) / (j + 1);
    }
    CHECK(std::abs(acc) < 1e-14 * scale);
  }
}

TEST_CASE("gamma values") {
  CHECK(rel_diff(gamma_function(1.0), 1.0) < 1e-15);
  CHECK(rel_diff(gamma_function(0.5), std::sqrt(kPi)) < 1e-15);
  CHECK(rel_diff(gamma_function(5.0), 24.0) < 1e-14);
  CHECK(rel_diff(gamma_function(-0.5), -2.0 * std::sqrt(kPi)) < 1e-14);
  // |Gamma(i)|^2 = pi / sinh(pi)
  CHECK(rel_diff(std::norm(gamma_function(Complex(0.0, 1.0))), kPi / std::sinh(kPi)) < 1e-14);
  CHECK_THROWS_AS(gamma_function(0.0), DomainError);
  CHECK_THROWS_AS(gamma_function(-3.0), DomainError);
  // Finite next to a pole: Gamma(x) ~ 1/x.
  CHECK(rel_diff(gamma_function(1e-20), 1e20) < 1e-14);
}

TEST_CASE("property: reflection and recurrence of gamma") {
  for (int trial = 0; trial < 200; ++trial) {
    const Complex z = test::uniform_complex(-4.0, 4.0, -3.0, 3.0);
    if (near_nonpositive_integer(z, 1e-3) || near_nonpositive_integer(1.0 - z, 1e-3)) continue;
    CHECK(rel_diff(gamma_function(z) * gamma_function(1.0 - z), kPi / std::sin(kPi * z)) < 1e-12);
    CHECK(rel_diff(gamma_function(z + 1.0), z * gamma_function(z)) < 1e-12);
  }
}

TEST_CASE("polygamma values") {
  CHECK(rel_diff(polygamma(0, 1.0), -kEulerGamma) < 1e-15);
  CHECK(rel_diff(polygamma(0, 2.0), 1.0 - kEulerGamma) < 4e-15);
  CHECK(rel_diff(polygamma(1, 1.0), kPi * kPi / 6.0) < 1e-15);
  CHECK(rel_diff(polygamma(2, 1.0), -2.0 * 1.2020569031595942854) < 1e-14);
  // psi(1/2) = -gamma - 2 log 2
  CHECK(rel_diff(polygamma(0, 0.5), -kEulerGamma - 2.0 * std::log(2.0)) < 1e-15);
  CHECK_THROWS_AS(polygamma(0, -2.0), DomainError);
  CHECK_THROWS_AS(polygamma(-1, 1.0), DomainError);
}

TEST_CASE("property: polygamma recurrence psi^(m)(z+1) = psi^(m)(z) + (-1)^m m! z^-(m+1)") {
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = test::uniform_complex(-3.0, 5.0, -4.0, 4.0);
    if (near_nonpositive_integer(z, 1e-2)) continue;
    const int m = test::uniform_int(0, 4);
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    const Complex rhs = polygamma(m, z) + (m % 2 == 0 ? 1.0 : -1.0) * fact * std::pow(z, -(m + 1));
    CHECK(rel_diff(polygamma(m, z + 1.0), rhs) < 1e-11);
  }
}

TEST_CASE("gamma_jet") {
  const SJet g1 = gamma_jet(1.0, 1);
  CHECK(rel_diff(g1[0], 1.0) < 1e-15);
  CHECK(rel_diff(g1[1], -kEulerGamma) < 1e-15);
  CHECK(rel_diff(gamma_jet(0.5, 0)[0], std::sqrt(kPi)) < 1e-15);
  // Gamma''(1) = gamma^2 + pi^2/6
  CHECK(rel_diff(gamma_jet(1.0, 2).derivative(2), kEulerGamma * kEulerGamma + kPi * kPi / 6.0) < 1e-14);
  CHECK_THROWS_AS(gamma_jet(-1.0, 2), DomainError);
}

TEST_CASE("property: gamma_jet matches Richardson-extrapolated differences") {
  const double h = 1e-3;
  auto d1 = [](Complex z, double step) {
    return (gamma_function(z + step) - gamma_function(z - step)) / (2.0 * step);
  };
  auto d2 = [](Complex z, double step) {
    return (gamma_function(z + step) - 2.0 * gamma_function(z) + gamma_function(z - step)) / (step * step);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = test::uniform_complex(0.3, 4.0, -2.0, 2.0);
    const SJet g = gamma_jet(z, 2);
    CHECK(rel_diff(g.derivative(1), (4.0 * d1(z, h / 2) - d1(z, h)) / 3.0) < 1e-6);
    CHECK(rel_diff(g.derivative(2), (4.0 * d2(z, h / 2) - d2(z, h)) / 3.0) < 1e-5);
  }
}

TEST_CASE("property: gamma_jet recurrence Gamma(z+1+e) = (z+e) Gamma(z+e)") {
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = test::uniform_complex(0.2, 3.0, -2.0, 2.0);
    const SJet lhs = gamma_jet(z + 1.0, 4);
    const SJet rhs = SJet::variable(z, 4) * gamma_jet(z, 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(rel_diff(lhs[k], rhs[k]) < 1e-12);
  }
}

TEST_CASE("principal branch") {
  CHECK(principal_log(Complex(-1.0, -0.0)).imag() == doctest::Approx(kPi));
  CHECK(principal_log(Complex(-1.0, 0.0)).imag() == doctest::Approx(kPi));
  CHECK_THROWS_AS(principal_log(0.0), DomainError);
  // (2 pi i)^-1 and (-2 pi i)^-1
  CHECK(std::abs(pow_principal(Complex(0.0, kTwoPi), -1.0) - Complex(0.0, -1.0 / kTwoPi)) < 1e-17);
  CHECK(std::abs(pow_principal(Complex(0.0, -kTwoPi), -1.0) - Complex(0.0, 1.0 / kTwoPi)) < 1e-17);
  const SJet e = pow_principal(std::exp(1.0), SJet(std::vector<Complex>{1.0, 1.0}));
  CHECK(rel_diff(e[0], std::exp(1.0)) < 1e-15);
  CHECK(rel_diff(e[1], std::exp(1.0)) < 1e-15);
  CHECK_THROWS_AS(pow_principal(0.0, 1.0), DomainError);
}

TEST_CASE("property: pow_principal adds exponents on a fixed branch") {
  for (int trial = 0; trial < 200; ++trial) {
    const Complex base = test::uniform_complex(-3.0, 3.0, -3.0, 3.0);
    const Complex s1 = test::uniform_complex(-2.0, 2.0, -2.0, 2.0);
    const Complex s2 = test::uniform_complex(-2.0, 2.0, -2.0, 2.0);
    CHECK(rel_diff(pow_principal(base, s1) * pow_principal(base, s2), pow_principal(base, s1 + s2)) < 1e-13);
  }
}

TEST_CASE("beta function") {
  CHECK(rel_diff(beta_fn(1.0, 1.0), 1.0) < 1e-15);
  CHECK(rel_diff(beta_fn(0.5, 0.5), kPi) < 1e-15);
  // Oracle: int_0^1 t (1-t)^2 dt
  Integrand f;
  f.f = [](double t) { return Complex(t * (1.0 - t) * (1.0 - t)); };
  CHECK(rel_diff(beta_fn(2.0, 3.0), integrate_01(f).value) < 1e-14);
  CHECK(rel_diff(beta_fn(2.0, 3.0), 1.0 / 12.0) < 1e-14);
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta_fn(0.5, -0.5), DomainError);
}
