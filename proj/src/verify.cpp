// SPDX-License-Identifier: Apache-2.0

#include "hzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <thread>

#include "hzeta/special.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

constexpr double kOracleTolerance = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TagInfo {
  CheckTag tag;
  const char* name;
  bool indexed;  // rows per coefficient index rather than one per point
};

constexpr std::array<TagInfo, 16> kTagInfo = {{
    {CheckTag::P1_COEFF, "P1_COEFF", true},
    {CheckTag::P1_PARSEVAL, "P1_PARSEVAL", false},
    {CheckTag::P2_COEFF, "P2_COEFF", true},
    {CheckTag::P2_PARSEVAL, "P2_PARSEVAL", false},
    {CheckTag::COR1_RATIONAL, "COR1_RATIONAL", false},
    {CheckTag::COR2_MIKOLAS, "COR2_MIKOLAS", false},
    {CheckTag::P3_COEFF, "P3_COEFF", true},
    {CheckTag::KUMMER_SERIES, "KUMMER_SERIES", true},
    {CheckTag::KUMMER_PARSEVAL, "KUMMER_PARSEVAL", false},
    {CheckTag::P4_COEFF, "P4_COEFF", true},
    {CheckTag::P4_PARSEVAL, "P4_PARSEVAL", false},
    {CheckTag::P5_COEFF, "P5_COEFF", true},
    {CheckTag::P5_PARSEVAL, "P5_PARSEVAL", false},
    {CheckTag::P6_COEFF, "P6_COEFF", true},
    {CheckTag::P6_PARSEVAL, "P6_PARSEVAL", false},
    {CheckTag::TAYLOR_VS_EM, "TAYLOR_VS_EM", false},
}};

const TagInfo& info(CheckTag tag) {
  for (const TagInfo& t : kTagInfo) {
    if (t.tag == tag) return t;
  }
  throw DomainError("unknown check tag");
}

FamilyPoint family_point(const GridPoint& g) { return {g.s, g.r, g.alpha, g.lambda}; }

bool is_positive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() >= 1.0 && z.real() == std::round(z.real());
}

double log_gamma_normalized(double x) { return std::log(std::tgamma(x)) - 0.5 * std::log(kTwoPi); }

Integrand kummer_integrand() {
  Integrand f;
  f.f = [](double x) { return Complex(log_gamma_normalized(x), 0.0); };
  return f;
}

void require(bool ok, CheckTag tag, const std::string& what) {
  if (!ok) throw DomainError(std::string(check_tag_name(tag)) + ": " + what);
}

void validate_point(CheckTag tag, const GridPoint& g) {
  switch (tag) {
    case CheckTag::P1_COEFF:
    case CheckTag::P1_PARSEVAL:
      require_coefficient_region(SeriesFamily::zeta1_in_alpha, g.s);
      break;
    case CheckTag::P2_COEFF:
      require_coefficient_region(SeriesFamily::hurwitz_in_alpha, g.s);
      break;
    case CheckTag::P2_PARSEVAL:
      require_parseval_region(SeriesFamily::hurwitz_in_alpha, g.s);
      break;
    case CheckTag::COR1_RATIONAL:
      require(g.q >= 1 && g.a >= 1 && g.a <= g.q, tag, "requires 1 <= a <= q");
      require(!is_positive_integer(g.s), tag, "s must not be a positive integer");
      break;
    case CheckTag::COR2_MIKOLAS:
      require((g.s + g.s2).real() < 1.0, tag, "requires Re(s1 + s2) < 1");
      require(!is_positive_integer(g.s) && !is_positive_integer(g.s2), tag, "s1, s2 must not be positive integers");
      break;
    case CheckTag::P3_COEFF:
      require(g.r == 1, tag, "r must be 1");
      require_coefficient_region(SeriesFamily::hurwitz_deriv_in_alpha, g.s);
      break;
    case CheckTag::KUMMER_SERIES:
    case CheckTag::KUMMER_PARSEVAL:
      break;
    case CheckTag::P4_COEFF:
      require(g.r >= 0, tag, "r must be >= 0");
      require_coefficient_region(SeriesFamily::hurwitz_deriv_in_alpha, g.s);
      break;
    case CheckTag::P4_PARSEVAL:
      require(g.r >= 0, tag, "r must be >= 0");
      require_parseval_region(SeriesFamily::hurwitz_deriv_in_alpha, g.s);
      break;
    case CheckTag::P5_COEFF:
      require(g.alpha > 0.0, tag, "alpha must be > 0");
      require_coefficient_region(SeriesFamily::lerch_in_lambda, g.s);
      break;
    case CheckTag::P5_PARSEVAL:
      require(g.alpha > 0.0, tag, "alpha must be > 0");
      require_parseval_region(SeriesFamily::lerch_in_lambda, g.s);
      break;
    case CheckTag::P6_COEFF:
      require(g.lambda > 0.0 && g.lambda < 1.0, tag, "lambda must lie in (0, 1)");
      require_coefficient_region(SeriesFamily::lerch_in_alpha, g.s);
      break;
    case CheckTag::P6_PARSEVAL:
      require(g.lambda > 0.0 && g.lambda < 1.0, tag, "lambda must lie in (0, 1)");
      require_parseval_region(SeriesFamily::lerch_in_alpha, g.s);
      break;
    case CheckTag::TAYLOR_VS_EM:
      require(g.k >= 1 && std::abs(g.alpha) < g.k, tag, "requires k >= 1 and |alpha| < k");
      require(g.r >= 0, tag, "r must be >= 0");
      require(!(g.s.imag() == 0.0 && g.s.real() <= 1.0 && g.s.real() == std::round(g.s.real())), tag,
              "s + n must avoid 1 for all n >= 0");
      break;
  }
}

struct Sides {
  Complex closed;
  Complex oracle;
};

Sides evaluate(CheckTag tag, const GridPoint& g, int n, const EvalParams& params) {
  const EvalParams op = oracle_params(params);
  const FamilyPoint fp = family_point(g);
  switch (tag) {
    case CheckTag::P1_COEFF: {
      const Complex closed = coeff_zeta1(g.s, n, params);
      if (n == 0) return {closed, integrate_01(family_integrand(SeriesFamily::zeta1_in_alpha, fp, params), op).value};
      return {closed, oscillatory_tail(g.s, -kTwoPi * n, 1.0, op)};
    }
    case CheckTag::P1_PARSEVAL:
      return {parseval_rhs(SeriesFamily::zeta1_in_alpha, fp, params),
              parseval_lhs_numeric(family_integrand(SeriesFamily::zeta1_in_alpha, fp, params), op)};
    case CheckTag::P2_COEFF:
      return {coeff_hurwitz_deriv(g.s, 0, n, params),
              family_coefficient_oracle(SeriesFamily::hurwitz_in_alpha, fp, n, params)};
    case CheckTag::P2_PARSEVAL:
      return {parseval_rhs(SeriesFamily::hurwitz_in_alpha, fp, params),
              parseval_lhs_numeric(family_integrand(SeriesFamily::hurwitz_in_alpha, fp, params), op)};
    case CheckTag::COR1_RATIONAL:
      return {finite_fourier_rational(g.s, g.a, g.q, params),
              hurwitz_zeta(g.s, static_cast<double>(g.a) / g.q, params)};
    case CheckTag::COR2_MIKOLAS: {
      Integrand f;
      f.f = [&](double x) { return hurwitz_zeta(g.s, x, params) * hurwitz_zeta(g.s2, x, params); };
      return {mikolas_product(g.s, g.s2, params), integrate_01(f, op).value};
    }
    case CheckTag::P3_COEFF:
    case CheckTag::P4_COEFF:
      return {coeff_hurwitz_deriv(g.s, g.r, n, params),
              family_coefficient_oracle(SeriesFamily::hurwitz_deriv_in_alpha, fp, n, params)};
    case CheckTag::KUMMER_SERIES: {
      const KummerPair k = kummer_coeff(n);
      const Complex c = fourier_coeff_numeric(kummer_integrand(), n, op);
      return {Complex(k.cos_coeff, k.sin_coeff), Complex(2.0 * c.real(), -2.0 * c.imag())};
    }
    case CheckTag::KUMMER_PARSEVAL:
      return {kummer_parseval(params), parseval_lhs_numeric(kummer_integrand(), op)};
    case CheckTag::P4_PARSEVAL:
      return {parseval_rhs(SeriesFamily::hurwitz_deriv_in_alpha, fp, params),
              parseval_lhs_numeric(family_integrand(SeriesFamily::hurwitz_deriv_in_alpha, fp, params), op)};
    case CheckTag::P5_COEFF:
      return {coeff_lerch_lambda(g.alpha, g.s, n),
              family_coefficient_oracle(SeriesFamily::lerch_in_lambda, fp, n, params)};
    case CheckTag::P5_PARSEVAL:
      return {parseval_rhs(SeriesFamily::lerch_in_lambda, fp, params),
              parseval_lhs_numeric(family_integrand(SeriesFamily::lerch_in_lambda, fp, params), op)};
    case CheckTag::P6_COEFF:
      return {coeff_lerch_alpha(g.lambda, g.s, n, params),
              family_coefficient_oracle(SeriesFamily::lerch_in_alpha, fp, n, params)};
    case CheckTag::P6_PARSEVAL:
      return {parseval_rhs(SeriesFamily::lerch_in_alpha, fp, params),
              parseval_lhs_numeric(family_integrand(SeriesFamily::lerch_in_alpha, fp, params), op)};
    case CheckTag::TAYLOR_VS_EM:
      return {taylor_alpha_eval(g.s, g.alpha, g.k, g.r, params),
              hurwitz_shifted(g.s, g.alpha, g.k, g.r, params).derivative(static_cast<std::size_t>(g.r))};
  }
  throw DomainError("evaluate: unknown tag");
}

CheckRow run_row(const CheckSpec& spec, const GridPoint& g, int n, const EvalParams& params) {
  CheckRow row;
  row.point = g;
  row.index = n;
  try {
    const Sides sides = evaluate(spec.tag, g, n, params);
    row.closed_form = sides.closed;
    row.oracle = sides.oracle;
    row.abs_err = std::abs(sides.closed - sides.oracle);
    const double scale = std::abs(sides.oracle);
    row.rel_err = scale > 0.0 ? row.abs_err / scale : (row.abs_err == 0.0 ? 0.0 : kNaN);
    row.ok = error_measure(row) <= spec.tolerance;
  } catch (const NumericError& e) {
    row.closed_form = row.oracle = Complex(kNaN, kNaN);
    row.abs_err = row.rel_err = kNaN;
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

GridPoint at(Complex s) {
  GridPoint g;
  g.s = s;
  return g;
}

GridPoint with_r(Complex s, int r) {
  GridPoint g = at(s);
  g.r = r;
  return g;
}

GridPoint with_alpha(Complex s, double alpha) {
  GridPoint g = at(s);
  g.alpha = alpha;
  return g;
}

GridPoint with_lambda(Complex s, double lambda) {
  GridPoint g = at(s);
  g.lambda = lambda;
  return g;
}

GridPoint rational(Complex s, int a, int q) {
  GridPoint g = at(s);
  g.a = a;
  g.q = q;
  g.alpha = static_cast<double>(a) / q;
  return g;
}

GridPoint pair(Complex s1, Complex s2) {
  GridPoint g = at(s1);
  g.s2 = s2;
  return g;
}

GridPoint taylor(Complex s, double alpha, int k, int r) {
  GridPoint g = with_alpha(s, alpha);
  g.k = k;
  g.r = r;
  return g;
}

}  // namespace

const char* check_tag_name(CheckTag tag) { return info(tag).name; }

std::optional<CheckTag> parse_check_tag(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
  for (const TagInfo& t : kTagInfo) {
    if (key == t.name) return t.tag;
  }
  return std::nullopt;
}

void CheckSpec::validate() const {
  if (grid.empty()) throw DomainError(std::string(check_tag_name(tag)) + ": empty grid");
  if (!(tolerance > 0.0)) throw DomainError(std::string(check_tag_name(tag)) + ": tolerance must be > 0");
  if (info(tag).indexed) {
    require(n_min <= n_max, tag, "empty index window");
    if (tag == CheckTag::KUMMER_SERIES) require(n_min >= 1, tag, "index window must start at n >= 1");
  }
  for (const GridPoint& g : grid) validate_point(tag, g);
}

double error_measure(const CheckRow& row) {
  if (!row.error.empty()) return std::numeric_limits<double>::infinity();
  return std::abs(row.oracle) > 1.0 ? row.rel_err : row.abs_err;
}

EvalParams oracle_params(const EvalParams& params) {
  EvalParams op = params;
  op.tolerance = std::max(params.tolerance, kOracleTolerance);
  return op;
}

VerificationReport run_check(const CheckSpec& spec, const EvalParams& params, int threads) {
  params.validate();
  spec.validate();

  struct Task {
    const GridPoint* point;
    int n;
  };
  std::vector<Task> tasks;
  for (const GridPoint& g : spec.grid) {
    if (info(spec.tag).indexed) {
      for (int n = spec.n_min; n <= spec.n_max; ++n) tasks.push_back({&g, n});
    } else {
      tasks.push_back({&g, 0});
    }
  }

  VerificationReport report;
  report.spec = spec;
  report.rows.resize(tasks.size());
  const int workers = std::clamp(threads, 1, static_cast<int>(tasks.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) report.rows[i] = run_row(spec, *tasks[i].point, tasks[i].n, params);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          report.rows[i] = run_row(spec, *tasks[i].point, tasks[i].n, params);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  report.passed = true;
  for (const CheckRow& row : report.rows) {
    report.passed = report.passed && row.ok;
    if (row.error.empty()) {
      report.worst_abs = std::max(report.worst_abs, row.abs_err);
      if (!std::isnan(row.rel_err)) report.worst_rel = std::max(report.worst_rel, row.rel_err);
    } else {
      report.worst_abs = report.worst_rel = std::numeric_limits<double>::infinity();
    }
  }
  return report;
}

std::vector<CheckSpec> default_suite() {
  const Complex i = kI;
  std::vector<CheckSpec> suite;
  suite.push_back({CheckTag::P1_COEFF, {at(0.5), at(0.25 + 1.0 * i), at(0.75 - 0.5 * i)}, -5, 5, 1e-8});
  suite.push_back({CheckTag::P1_PARSEVAL, {at(0.4), at(0.25 + 0.5 * i), at(0.6)}, 0, 0, 1e-5});
  suite.push_back({CheckTag::P2_COEFF, {at(0.0), at(-0.5), at(0.3 + 2.0 * i)}, -8, 8, 1e-7});
  suite.push_back({CheckTag::P2_PARSEVAL, {at(0.0), at(-0.75 + 0.5 * i), at(0.25)}, 0, 0, 1e-6});
  suite.push_back({CheckTag::COR1_RATIONAL,
                   {rational(-1.0, 1, 2), rational(-1.0, 1, 3), rational(-1.0, 2, 5), rational(-0.5 + 2.0 * i, 1, 2),
                    rational(-0.5 + 2.0 * i, 1, 3), rational(-0.5 + 2.0 * i, 2, 5), rational(0.0, 1, 2),
                    rational(0.0, 1, 3), rational(0.0, 2, 5)},
                   0, 0, 1e-9});
  suite.push_back({CheckTag::COR2_MIKOLAS,
                   {pair(0.0, 0.0), pair(-0.3, -0.4), pair(-0.5 + i, -0.5 - i), pair(0.2, -0.5)},
                   0, 0, 1e-7});
  suite.push_back({CheckTag::P3_COEFF, {with_r(0.0, 1), with_r(-0.5, 1), with_r(0.2 + i, 1)}, -5, 5, 1e-6});
  suite.push_back({CheckTag::KUMMER_SERIES, {at(0.0)}, 1, 8, 1e-7});
  suite.push_back({CheckTag::KUMMER_PARSEVAL, {at(0.0)}, 0, 0, 1e-7});
  suite.push_back({CheckTag::P4_COEFF,
                   {with_r(0.0, 2), with_r(-0.5, 2), with_r(0.3 + 0.5 * i, 2), with_r(-0.25, 3)},
                   -5, 5, 1e-6});
  suite.push_back({CheckTag::P4_PARSEVAL,
                   {with_r(-0.25, 1), with_r(0.0, 2), with_r(-0.5 + 0.5 * i, 1), with_r(0.2, 1)},
                   0, 0, 1e-5});
  suite.push_back({CheckTag::P5_COEFF,
                   {with_alpha(1.0, 0.5), with_alpha(1.0, 1.0), with_alpha(2.0, 0.5), with_alpha(2.0, 1.0),
                    with_alpha(0.5 + i, 0.3)},
                   -4, 5, 1e-6});
  suite.push_back({CheckTag::P5_PARSEVAL,
                   {with_alpha(1.0, 1.0), with_alpha(0.75, 0.5), with_alpha(1.0 + 0.5 * i, 0.3)},
                   0, 0, 1e-6});
  suite.push_back({CheckTag::P6_COEFF,
                   {with_lambda(0.0, 0.25), with_lambda(-0.5, 0.25), with_lambda(0.0, 0.5), with_lambda(-0.5, 0.5),
                    with_lambda(0.3 + 0.5 * i, 0.7)},
                   -4, 4, 1e-6});
  suite.push_back({CheckTag::P6_PARSEVAL,
                   {with_lambda(-0.25, 0.25), with_lambda(-0.25, 0.5), with_lambda(-0.25 + 0.7 * i, 0.3)},
                   0, 0, 1e-5});
  suite.push_back({CheckTag::TAYLOR_VS_EM,
                   {taylor(0.5, 0.6, 1, 0), taylor(-0.5 + i, -0.4, 2, 1), taylor(2.5, 0.3, 3, 2),
                    taylor(0.0 + 3.0 * i, 0.55, 1, 2), taylor(-1.5, -0.6, 3, 0)},
                   0, 0, 1e-9});
  return suite;
}

const std::vector<LedgerEntry>& formula_ledger() {
  static const std::vector<LedgerEntry> ledger = {
      {"zeta(s, a/q) as a finite sum", "sin(pi r/2 + 2 pi r a/q)", "sin(pi s/2 + 2 pi r a/q)",
       "only the s-dependent phase reproduces zeta(s, a/q)"},
      {"Kummer series, sine coefficient", "(log 2 pi n + gamma)/pi", "(log 2 pi n + gamma)/(pi n)",
       "quadrature of log(Gamma(x)/sqrt(2 pi)) against sin 2 pi n x"},
      {"Kummer Parseval", "sum n^-2 (((log 2 pi n + gamma)/pi)^2 + 1/4)",
       "1/2 sum n^-2 (((log 2 pi n + gamma)/pi)^2 + 1/4)", "real trigonometric Parseval carries 1/2"},
      {"int_0^1 zeta(s1,x) zeta(s2,x) dx", "B(1-s1, 1-s2) zeta(1-s1-s2)",
       "2 cos(pi(s1-s2)/2) (2 pi)^(s1+s2-2) Gamma(1-s1) Gamma(1-s2) zeta(2-s1-s2)",
       "stated form diverges at s1 = s2 = 0 where the integral is 1/12"},
      {"int_0^1 |zeta(s,x)|^2 dx", "2^(2 sigma-1) pi^(2 sigma-2) cosh(pi) |Gamma(1-s)|^2 zeta(2-2 sigma)",
       "2^(2 sigma-1) pi^(2 sigma-2) cosh(pi t) |Gamma(1-s)|^2 zeta(2-2 sigma)", "s = sigma + i t"},
      {"int_0^1 |zeta^(r)(s,x)|^2 dx", "sum with prefactors +-i e^(+-pi s/2)",
       "sum_n (2 pi n)^(2 sigma-2) [e^(-pi t) |P(log 2 pi n + i pi/2)|^2 + e^(pi t) |P(log 2 pi n - i pi/2)|^2]",
       "P(z) = sum_l (-1)^(r-l) C(r,l) Gamma^(r-l)(1-s) z^l; summed with zeta^(m)(2-2 sigma)"},
      {"int_0^1 phi(lambda,x,s) e^(2 pi i (n+lambda) x) dx", "i (2 pi)^(s-1) Gamma(1-s) (n+lambda)^(s-1)",
       "Gamma(1-s) (-2 pi i (n+lambda))^(s-1)", "forms agree only at s = 0; principal branch on both sides"},
      {"int_0^1 |phi(lambda,x,s)|^2 dx", "(2 pi)^(2 sigma-2) |Gamma(1-s)|^2 sum_n |n+lambda|^(2 sigma-2)",
       "(2 pi)^(2 sigma-2) |Gamma(1-s)|^2 (e^(pi t) zeta(2-2 sigma, lambda) + e^(-pi t) zeta(2-2 sigma, 1-lambda))",
       "coincide for real s"},
  };
  return ledger;
}

Integrand family_integrand(SeriesFamily family, const FamilyPoint& point, const EvalParams& params) {
  const Complex s = point.s;
  Integrand f;
  switch (family) {
    case SeriesFamily::zeta1_in_alpha:
      f.f = [s, params](double x) { return hurwitz_zeta(s, x + 1.0, params); };
      break;
    case SeriesFamily::hurwitz_in_alpha:
      f.f = [s, params](double x) { return hurwitz_zeta(s, x, params); };
      f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    case SeriesFamily::hurwitz_deriv_in_alpha: {
      const int r = point.r;
      f.f = [s, r, params](double x) {
        return hurwitz_zeta_jet({s, x, 0, r}, params).derivative(static_cast<std::size_t>(r));
      };
      f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    }
    case SeriesFamily::lerch_in_lambda: {
      const double alpha = point.alpha;
      f.f = [s, alpha, params](double x) { return lerch_phi_phase(x, alpha, s, params); };
      f.f_right = [s, alpha, params](double y) { return lerch_phi_phase(-y, alpha, s, params); };
      break;
    }
    case SeriesFamily::lerch_in_alpha: {
      const double lambda = point.lambda;
      f.f = [s, lambda, params](double x) { return lerch_phi({lambda, x, s}, params); };
      f.hint = {SingularityKind::left_algebraic, -s.real()};
      break;
    }
  }
  return f;
}

Complex family_coefficient_oracle(SeriesFamily family, const FamilyPoint& point, int n, const EvalParams& params) {
  const EvalParams op = oracle_params(params);
  Integrand f = family_integrand(family, point, params);
  if (family != SeriesFamily::lerch_in_alpha) return fourier_coeff_numeric(f, n, op);
  // e^(2 pi i (n + lambda) x) = e^(2 pi i lambda x) e^(-2 pi i (-n) x)
  const double w = kTwoPi * point.lambda;
  Integrand g;
  g.f = [inner = f.f, w](double x) { return inner(x) * std::polar(1.0, w * x); };
  g.hint = f.hint;
  return fourier_coeff_numeric(g, -n, op);
}

}  // namespace hzeta
