#include <doctest.h>

#include <cmath>
#include <vector>

#include "hzeta/fourier.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special.hpp"
#include "hzeta/zeta.hpp"
#include "test_util.hpp"

using namespace hzeta;
using hzeta::test::rel_diff;

namespace {

EvalParams oracle() {
  EvalParams p;
  p.tolerance = 1e-10;
  return p;
}

// The function each family expands, built from the zeta engine alone. For
// LERCH_IN_ALPHA the factor e^(2 pi i lambda x) turns the expansion into an
// ordinary Fourier series whose coefficient -n is c_n.
Integrand expanded_function(SeriesFamily family, const FamilyPoint& pt) {
  Integrand f;
  const Complex s = pt.s;
  switch (family) {
    case SeriesFamily::zeta1_in_alpha:
      f.f = [s](double x) { return hurwitz_zeta(s, x + 1.0); };
      break;
    case SeriesFamily::hurwitz_in_alpha:
      f.f = [s](double x) { return hurwitz_zeta(s, x); };
      if (s.real() > 0.0) f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    case SeriesFamily::hurwitz_deriv_in_alpha: {
      const int r = pt.r;
      f.f = [s, r](double x) { return hurwitz_zeta_jet({s, x, 0, r}).derivative(r); };
      if (s.real() > 0.0) f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    }
    case SeriesFamily::lerch_in_lambda: {
      const double a = pt.alpha;
      f.f = [s, a](double x) { return lerch_phi_phase(x, a, s); };
      f.f_right = [s, a](double y) { return lerch_phi_phase(-y, a, s); };
      break;
    }
    case SeriesFamily::lerch_in_alpha: {
      const double l = pt.lambda;
      f.f = [s, l](double x) { return std::polar(1.0, kTwoPi * l * x) * lerch_phi({l, x, s}); };
      if (s.real() > 0.0) f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    }
  }
  return f;
}

Complex numeric_coefficient(SeriesFamily family, const FamilyPoint& pt, int n) {
  const int index = family == SeriesFamily::lerch_in_alpha ? -n : n;
  return fourier_coeff_numeric(expanded_function(family, pt), index, oracle());
}

double log_gamma_normalized(double x) { return std::lgamma(x) - 0.5 * std::log(kTwoPi); }

}  // namespace

TEST_CASE("family tags and strips") {
  CHECK(std::string(family_tag(SeriesFamily::lerch_in_alpha)) == "LERCH_IN_ALPHA");
  CHECK(parse_family("hurwitz_deriv") == SeriesFamily::hurwitz_deriv_in_alpha);
  CHECK(parse_family("ZETA1_IN_ALPHA") == SeriesFamily::zeta1_in_alpha);
  CHECK(parse_family("lerch_lambda") == SeriesFamily::lerch_in_lambda);
  CHECK_FALSE(parse_family("bogus").has_value());
  CHECK_THROWS_AS(require_coefficient_region(SeriesFamily::zeta1_in_alpha, 1.2), DomainError);
  CHECK_THROWS_AS(require_coefficient_region(SeriesFamily::zeta1_in_alpha, -0.1), DomainError);
  CHECK_THROWS_AS(require_coefficient_region(SeriesFamily::hurwitz_in_alpha, 1.0), DomainError);
  CHECK_THROWS_AS(require_coefficient_region(SeriesFamily::lerch_in_lambda, 0.0), DomainError);
  CHECK_THROWS_AS(require_parseval_region(SeriesFamily::hurwitz_in_alpha, 0.5), DomainError);
  CHECK_THROWS_AS(require_parseval_region(SeriesFamily::lerch_in_lambda, 0.5), DomainError);
  CHECK_NOTHROW(require_parseval_region(SeriesFamily::lerch_in_alpha, Complex(0.4, 3.0)));
  try {
    require_coefficient_region(SeriesFamily::zeta1_in_alpha, 1.5);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find(coefficient_strip(SeriesFamily::zeta1_in_alpha)) != std::string::npos);
  }
}

TEST_CASE("coeff_zeta1") {
  CHECK(rel_diff(coeff_zeta1(0.5, 0), -2.0) < 1e-15);
  CHECK(rel_diff(coeff_zeta1(0.5, 1), oscillatory_tail(0.5, -kTwoPi, 1.0, oracle())) < 1e-9);
  const Complex s(0.25, 0.5);
  CHECK(rel_diff(coeff_zeta1(std::conj(s), -3), std::conj(coeff_zeta1(s, 3))) < 1e-14);
  CHECK_THROWS_AS(coeff_zeta1(1.0, 2), DomainError);
}

TEST_CASE("coeff_hurwitz_deriv") {
  CHECK(std::abs(coeff_hurwitz_deriv(0.0, 0, 1) - Complex(0.0, -1.0 / kTwoPi)) < 1e-16);
  CHECK(std::abs(coeff_hurwitz_deriv(0.0, 0, -1) - Complex(0.0, 1.0 / kTwoPi)) < 1e-16);
  const Complex expected = Complex(0.0, -1.0 / kTwoPi) * Complex(std::log(kTwoPi) + kEulerGamma, kPi / 2.0);
  CHECK(rel_diff(coeff_hurwitz_deriv(0.0, 1, 1), expected) < 1e-14);
  // Quadrature of log(Gamma(x)/sqrt(2 pi)) against e^(-2 pi i x).
  Integrand f;
  f.f = [](double x) { return Complex(log_gamma_normalized(x)); };
  CHECK(rel_diff(coeff_hurwitz_deriv(0.0, 1, 1), fourier_coeff_numeric(f, 1, oracle())) < 1e-9);
  CHECK(coeff_hurwitz_deriv(Complex(0.3, 1.0), 2, 0) == Complex{});
  CHECK_THROWS_AS(coeff_hurwitz_deriv(1.5, 0, 1), DomainError);
}

TEST_CASE("finite_fourier_rational") {
  CHECK(rel_diff(finite_fourier_rational(-1.0, 1, 2), 1.0 / 24.0) < 1e-13);
  CHECK(rel_diff(finite_fourier_rational(-0.5, 1, 3), hurwitz_zeta(-0.5, 1.0 / 3.0)) < 1e-9);
  CHECK(std::abs(finite_fourier_rational(0.0, 1, 2)) < 1e-15);
  CHECK_THROWS_AS(finite_fourier_rational(0.5, 0, 3), DomainError);
  CHECK_THROWS_AS(finite_fourier_rational(0.5, 4, 3), DomainError);
}

TEST_CASE("property: rational points match the Hurwitz evaluator") {
  for (int trial = 0; trial < 60; ++trial) {
    const int q = test::uniform_int(1, 9);
    const int a = test::uniform_int(1, q);
    const Complex s = test::uniform_complex(-2.0, 0.9, -5.0, 5.0);
    CAPTURE(a);
    CAPTURE(q);
    CAPTURE(s);
    CHECK(rel_diff(finite_fourier_rational(s, a, q), hurwitz_zeta(s, static_cast<double>(a) / q)) < 1e-10);
  }
}

TEST_CASE("kummer_coeff") {
  const KummerPair k1 = kummer_coeff(1);
  CHECK(k1.cos_coeff == 0.5);
  // 0.76874789...; the quoted seven-digit value 0.7687480 is within one unit
  // of its last place. The quadrature comparison below is the real check.
  CHECK(std::abs(k1.sin_coeff - 0.7687480) < 1.5e-7);
  CHECK(std::abs(k1.sin_coeff - 0.76874789242686583) < 1e-15);
  CHECK(kummer_coeff(2).cos_coeff == 0.25);
  CHECK(rel_diff(kummer_coeff(2).sin_coeff, (std::log(4.0 * kPi) + kEulerGamma) / (2.0 * kPi)) < 1e-15);
  CHECK_THROWS_AS(kummer_coeff(0), DomainError);
}

TEST_CASE("kummer_coeff against quadrature and the r = 1 coefficients") {
  for (int n = 1; n <= 6; ++n) {
    Integrand fc;
    fc.f = [n](double x) { return Complex(2.0 * log_gamma_normalized(x) * std::cos(kTwoPi * n * x)); };
    Integrand fs;
    fs.f = [n](double x) { return Complex(2.0 * log_gamma_normalized(x) * std::sin(kTwoPi * n * x)); };
    const KummerPair k = kummer_coeff(n);
    CAPTURE(n);
    CHECK(std::abs(k.cos_coeff - integrate_01(fc, oracle()).value.real()) < 1e-10);
    CHECK(std::abs(k.sin_coeff - integrate_01(fs, oracle()).value.real()) < 1e-10);
    // b_n = c_n + c_-n, s_n = i (c_n - c_-n)
    const Complex cp = coeff_hurwitz_deriv(0.0, 1, n);
    const Complex cm = coeff_hurwitz_deriv(0.0, 1, -n);
    CHECK(std::abs(k.cos_coeff - (cp + cm).real()) < 1e-14);
    CHECK(std::abs(k.sin_coeff - (Complex(0.0, 1.0) * (cp - cm)).real()) < 1e-14);
  }
}

TEST_CASE("coeff_lerch_lambda and coeff_lerch_alpha") {
  CHECK(rel_diff(coeff_lerch_lambda(0.5, 2.0, 2), 0.16) < 1e-15);
  CHECK(coeff_lerch_lambda(1.0, 1.0, 0) == Complex(1.0));
  CHECK(coeff_lerch_lambda(0.3, 0.5, -4) == Complex{});
  CHECK(rel_diff(coeff_lerch_alpha(0.5, 0.0, 0), Complex(0.0, 1.0 / kPi)) < 1e-15);
  // phi(1/2, x, 0) = 1/2, so c_-1 = (1/2) int e^(-i pi x) dx = -i/pi.
  CHECK(rel_diff(coeff_lerch_alpha(0.5, 0.0, -1), Complex(0.0, -1.0 / kPi)) < 1e-15);
  const FamilyPoint pt{-0.5, 0, 1.0, 0.25};
  CHECK(rel_diff(coeff_lerch_alpha(0.25, -0.5, 2), numeric_coefficient(SeriesFamily::lerch_in_alpha, pt, 2)) < 1e-7);
  CHECK(rel_diff(coeff_lerch_alpha(0.25, -0.5, -3), numeric_coefficient(SeriesFamily::lerch_in_alpha, pt, -3)) < 1e-7);
  CHECK_THROWS_AS(coeff_lerch_alpha(0.0, 0.5, 1), DomainError);
  CHECK_THROWS_AS(coeff_lerch_alpha(0.5, 1.0, 1), DomainError);
}

TEST_CASE("parseval_rhs values") {
  CHECK(rel_diff(parseval_rhs(SeriesFamily::hurwitz_in_alpha, {0.0}), 1.0 / 12.0) < 1e-14);
  CHECK(rel_diff(parseval_rhs(SeriesFamily::lerch_in_lambda, {1.0, 0, 1.0}), kPi * kPi / 6.0) < 1e-14);
  const double kummer = kummer_parseval();
  CHECK(rel_diff(parseval_rhs(SeriesFamily::hurwitz_deriv_in_alpha, {0.0, 1}), kummer) < 1e-13);
  Integrand f;
  f.f = [](double x) { return Complex(log_gamma_normalized(x)); };
  CHECK(rel_diff(kummer, parseval_lhs_numeric(f, oracle())) < 1e-9);
  CHECK_THROWS_AS(parseval_rhs(SeriesFamily::hurwitz_in_alpha, {0.6}), DomainError);
}

TEST_CASE("parseval_rhs against quadrature") {
  struct Case {
    SeriesFamily family;
    FamilyPoint pt;
  };
  const Case cases[] = {
      {SeriesFamily::zeta1_in_alpha, {{0.3, 0.0}}},
      {SeriesFamily::zeta1_in_alpha, {{0.7, -2.0}}},
      {SeriesFamily::hurwitz_in_alpha, {{0.2, 1.0}}},
      {SeriesFamily::hurwitz_in_alpha, {{-0.6, -0.4}}},
      {SeriesFamily::hurwitz_deriv_in_alpha, {{0.1, 0.5}, 2}},
      {SeriesFamily::hurwitz_deriv_in_alpha, {{-0.3, 0.0}, 3}},
      {SeriesFamily::lerch_in_lambda, {{0.8, 0.5}, 0, 0.7}},
      {SeriesFamily::lerch_in_lambda, {{2.0, 0.0}, 0, 1.3}},
      {SeriesFamily::lerch_in_alpha, {{0.2, 0.3}, 0, 1.0, 0.3}},
      {SeriesFamily::lerch_in_alpha, {{-0.5, 0.0}, 0, 1.0, 0.75}},
  };
  for (const Case& c : cases) {
    Integrand f = expanded_function(c.family, c.pt);
    if (f.hint.kind == SingularityKind::left_algebraic) f.hint.exponent *= 2.0;
    CAPTURE(family_tag(c.family));
    CAPTURE(c.pt.s);
    CHECK(rel_diff(parseval_rhs(c.family, c.pt), parseval_lhs_numeric(f, oracle())) < 1e-7);
  }
}

TEST_CASE("mikolas_product") {
  const MikolasValue zero = mikolas_product_detail(0.0, 0.0);
  CHECK(rel_diff(zero.pairing, 1.0 / 12.0) < 1e-14);
  CHECK_FALSE(zero.beta.has_value());
  Integrand f;
  f.f = [](double x) { return hurwitz_zeta(-0.3, x) * hurwitz_zeta(-0.4, x); };
  CHECK(rel_diff(mikolas_product(-0.3, -0.4), integrate_01(f, oracle()).value) < 1e-8);
  CHECK(mikolas_product_detail(-0.3, -0.4).beta.has_value());
  for (Complex s : {Complex(0.2, 1.0), Complex(-0.5, -2.0), Complex(0.45, 0.0)}) {
    const Complex m = mikolas_product(s, std::conj(s));
    CHECK(rel_diff(m, parseval_rhs(SeriesFamily::hurwitz_in_alpha, {s})) < 1e-13);
    CHECK(std::abs(m.imag()) < 1e-14 * std::abs(m));
  }
  CHECK_THROWS_AS(mikolas_product(0.6, 0.5), DomainError);
}

TEST_CASE("property: reality of HURWITZ coefficients for real s") {
  for (int trial = 0; trial < 50; ++trial) {
    const double s = test::uniform(-3.0, 0.95);
    const int n = test::uniform_int(1, 40);
    const Complex c = family_coefficient(SeriesFamily::hurwitz_in_alpha, {s}, n);
    CHECK(family_coefficient(SeriesFamily::hurwitz_in_alpha, {s}, -n) == std::conj(c));
  }
}

TEST_CASE("property: Leibniz and jet routes agree") {
  for (int trial = 0; trial < 200; ++trial) {
    const Complex s = test::uniform_complex(-3.0, 0.95, -6.0, 6.0);
    const int r = test::uniform_int(0, 5);
    int n = test::uniform_int(-30, 30);
    if (n == 0) n = 1;
    const LeibnizRoutes routes = coeff_hurwitz_deriv_routes(s, r, n);
    CAPTURE(s);
    CAPTURE(r);
    CAPTURE(n);
    CHECK(rel_diff(routes.leibniz, routes.jet) < 1e-12);
  }
}

TEST_CASE("property: Bessel sums are nondecreasing and bounded") {
  struct Case {
    SeriesFamily family;
    FamilyPoint pt;
  };
  const Case cases[] = {
      {SeriesFamily::zeta1_in_alpha, {{0.4, 1.0}}},
      {SeriesFamily::hurwitz_in_alpha, {{0.1, -1.0}}},
      {SeriesFamily::hurwitz_deriv_in_alpha, {{0.0, 0.0}, 1}},
      {SeriesFamily::lerch_in_lambda, {{1.2, 0.0}, 0, 0.5}},
      {SeriesFamily::lerch_in_alpha, {{0.0, 0.5}, 0, 1.0, 0.4}},
  };
  for (const Case& c : cases) {
    Integrand f = expanded_function(c.family, c.pt);
    if (f.hint.kind == SingularityKind::left_algebraic) f.hint.exponent *= 2.0;
    const double lhs = parseval_lhs_numeric(f, oracle());
    double previous = 0.0;
    for (int N = 0; N <= 40; ++N) {
      const double partial = parseval_partial(c.family, c.pt, N);
      CHECK(partial >= previous);
      CHECK(partial <= lhs + 1e-9);
      previous = partial;
    }
    CAPTURE(family_tag(c.family));
    // The full sum closes the gap.
    CHECK(rel_diff(parseval_rhs(c.family, c.pt), lhs) < 1e-7);
  }
}

TEST_CASE("property: mean values") {
  for (Complex s : {Complex(-0.5), Complex(0.0), Complex(0.5, 1.0), Complex(0.8, -0.5)}) {
    for (int r = 0; r <= 2; ++r) {
      Integrand f = expanded_function(SeriesFamily::hurwitz_deriv_in_alpha, {s, r});
      CAPTURE(s);
      CAPTURE(r);
      CHECK(std::abs(integrate_01(f, oracle()).value) < 1e-9);
    }
  }
  for (Complex s : {Complex(0.3), Complex(0.6, 2.0)}) {
    Integrand f = expanded_function(SeriesFamily::zeta1_in_alpha, {s});
    CHECK(std::abs(integrate_01(f, oracle()).value - 1.0 / (s - 1.0)) < 1e-9);
  }
}

TEST_CASE("property: closed-form coefficients match quadrature on 3x3 grids") {
  std::vector<std::pair<SeriesFamily, FamilyPoint>> grid;
  for (double sigma : {0.2, 0.5, 0.8}) {
    for (double t : {-1.0, 0.0, 2.0}) grid.push_back({SeriesFamily::zeta1_in_alpha, {{sigma, t}}});
  }
  for (double sigma : {-0.5, 0.3, 0.7}) {
    for (double t : {-2.0, 0.0, 1.0}) grid.push_back({SeriesFamily::hurwitz_in_alpha, {{sigma, t}}});
  }
  for (Complex s : {Complex(-0.3), Complex(0.2, 1.0), Complex(0.6, -0.5)}) {
    for (int r : {1, 2, 3}) grid.push_back({SeriesFamily::hurwitz_deriv_in_alpha, {s, r}});
  }
  for (Complex s : {Complex(0.6), Complex(1.5, 1.0), Complex(3.0, -2.0)}) {
    for (double a : {0.3, 1.0, 1.7}) grid.push_back({SeriesFamily::lerch_in_lambda, {s, 0, a}});
  }
  for (Complex s : {Complex(-0.5), Complex(0.3, 0.5), Complex(0.7)}) {
    for (double l : {0.25, 0.5, 0.8}) grid.push_back({SeriesFamily::lerch_in_alpha, {s, 0, 1.0, l}});
  }
  for (const auto& [family, pt] : grid) {
    for (int n = -8; n <= 8; ++n) {
      if (family == SeriesFamily::zeta1_in_alpha || n != 0 || family == SeriesFamily::lerch_in_lambda ||
          family == SeriesFamily::lerch_in_alpha) {
        CAPTURE(family_tag(family));
        CAPTURE(pt.s);
        CAPTURE(n);
        CHECK(std::abs(family_coefficient(family, pt, n) - numeric_coefficient(family, pt, n)) < 1e-7);
      }
    }
  }
}
