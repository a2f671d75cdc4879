// SPDX-License-Identifier: Apache-2.0

#include "hzeta/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hzeta/fourier.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/report_io.hpp"
#include "hzeta/verify.hpp"
#include "hzeta/zeta.hpp"

namespace hzeta {

namespace {

using nlohmann::json;

constexpr const char* kStripHelp =
    "Validity strips (s = sigma + i t):\n"
    "  eval           any s != 1 (Hurwitz); lerch: 0 < lambda <= 1, alpha > 0\n"
    "  zeta1          0 < sigma < 1 (coefficients and Parseval)\n"
    "  hurwitz        sigma < 1 (coefficients), sigma < 1/2 (Parseval)\n"
    "  hurwitz_deriv  sigma < 1 (coefficients), sigma < 1/2 (Parseval), r >= 0\n"
    "  lerch_lambda   sigma > 0 (coefficients), sigma > 1/2 (Parseval), alpha > 0\n"
    "  lerch_alpha    sigma < 1 (coefficients), sigma < 1/2 (Parseval), 0 < lambda < 1\n"
    "  rational       1 <= a <= q, s not a positive integer\n"
    "  kummer         n >= 1\n"
    "  mikolas        Re(s1 + s2) < 1, s1, s2 not positive integers\n";

struct ComplexFlags {
  std::optional<double> shorthand;
  std::optional<double> re;
  double im = 0.0;

  std::optional<Complex> value(const char* name) const {
    if (shorthand && re) throw CLI::ValidationError(std::string("--") + name + " and --" + name + "-re are exclusive");
    const std::optional<double> real = shorthand ? shorthand : re;
    if (!real) return std::nullopt;
    return Complex(*real, im);
  }

  Complex required(const char* name) const {
    const auto v = value(name);
    if (!v) throw CLI::RequiredError(std::string("--") + name + " (or --" + name + "-re)");
    return *v;
  }
};

struct Options {
  std::string format = "plain";
  int precision = 12;
  std::optional<std::string> out;
  int threads = 1;
  std::optional<int> N;
  std::optional<double> tol;
  std::optional<int> em_order;
  std::optional<int> quad_level;

  ComplexFlags s;
  ComplexFlags s2;
  double alpha = 1.0;
  std::optional<double> lambda;
  int r = 0;
  int k = 0;
  int n = 1;
  int a = 1;
  int q = 1;
  std::string family;
  std::string side = "both";
  std::string suite = "default";
  std::vector<std::string> only;
  int n_min = -8;
  int n_max = 8;
  double alpha_from = 0.1;
  double alpha_to = 0.9;
  int steps = 9;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  sub->add_option("--precision", o.precision, "Digits in numeric output, 4..17 (default 12)")
      ->check(CLI::Range(kMinDigits, kMaxDigits));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  sub->add_option("--threads", o.threads, "Worker threads for row evaluation (>= 1)")->check(CLI::PositiveNumber);
  sub->add_option("--N", o.N, "Minimum head length / truncation N (>= 1)")->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.tol, "Target relative tolerance (> 0)")->check(CLI::PositiveNumber);
  sub->add_option("--em-order", o.em_order, "Euler-Maclaurin correction terms (>= 1)")->check(CLI::PositiveNumber);
  sub->add_option("--quad-level", o.quad_level, "Quadrature level cap (>= 1)")->check(CLI::PositiveNumber);
  sub->footer(kStripHelp);
}

void add_s(CLI::App* sub, ComplexFlags& f, const std::string& name, const std::string& strip) {
  sub->add_option("--" + name, f.shorthand, "Real " + name + " (shorthand for --" + name + "-re); " + strip);
  sub->add_option("--" + name + "-re", f.re, "Re " + name + "; " + strip);
  sub->add_option("--" + name + "-im", f.im, "Im " + name + " (default 0)");
}

CliConfig make_config(const Options& o) {
  CliConfig c;
  c.format = o.format == "json" ? OutputFormat::json : o.format == "csv" ? OutputFormat::csv : OutputFormat::plain;
  c.precision_digits = o.precision;
  if (o.N) c.params.truncation_n = *o.N;
  if (o.tol) c.params.tolerance = *o.tol;
  if (o.em_order) c.params.em_order = *o.em_order;
  if (o.quad_level) c.params.quad_level = *o.quad_level;
  c.output_path = o.out;
  c.threads = o.threads;
  c.validate();
  c.params.validate();
  return c;
}

json complex_json(Complex z, int digits) {
  return json::array({round_significant(z.real(), digits), round_significant(z.imag(), digits)});
}

std::string csv_complex(Complex z, int digits) {
  return format_number(round_significant(z.real(), digits), digits) + "," +
         format_number(round_significant(z.imag(), digits), digits);
}

// One complex result in the configured format.
void emit_value(std::ostream& os, const CliConfig& c, const std::string& label, Complex z) {
  switch (c.format) {
    case OutputFormat::plain: os << format_complex_plain(z, c.precision_digits) << '\n'; break;
    case OutputFormat::csv: os << "quantity,re,im\n" << label << ',' << csv_complex(z, c.precision_digits) << '\n'; break;
    case OutputFormat::json:
      os << json{{"quantity", label}, {"value", complex_json(z, c.precision_digits)}}.dump(2) << '\n';
      break;
  }
}

SeriesFamily require_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
  return *f;
}

FamilyPoint point_from(const Options& o, Complex s) {
  FamilyPoint p;
  p.s = s;
  p.r = o.r;
  p.alpha = o.alpha;
  p.lambda = o.lambda.value_or(0.5);
  return p;
}

int run_eval(const Options& o, const CliConfig& c, std::ostream& os) {
  const Complex s = o.s.required("s");
  Complex value;
  std::string label;
  if (o.lambda && *o.lambda != 1.0) {
    if (o.r != 0 || o.k != 0) throw DomainError("eval: --r and --k apply to the Hurwitz function only");
    value = lerch_phi({*o.lambda, o.alpha, s}, c.params);
    label = "lerch_phi";
  } else {
    if (o.r < 0) throw DomainError("eval: r must be >= 0");
    if (o.k < 0) throw DomainError("eval: k must be >= 0");
    value = hurwitz_shifted(s, o.alpha, o.k, o.r, c.params).derivative(static_cast<std::size_t>(o.r));
    label = "hurwitz_zeta";
  }
  emit_value(os, c, label, value);
  return kExitOk;
}

int run_coeff(const Options& o, const CliConfig& c, std::ostream& os) {
  const std::string fam = o.family.empty() ? "hurwitz" : o.family;
  if (fam == "kummer") {
    const KummerPair k = kummer_coeff(o.n);
    const int d = c.precision_digits;
    switch (c.format) {
      case OutputFormat::plain: os << format_fixed(k.cos_coeff, d) << ' ' << format_fixed(k.sin_coeff, d) << '\n'; break;
      case OutputFormat::csv:
        os << "n,cos,sin\n" << o.n << ',' << format_number(round_significant(k.cos_coeff, d), d) << ','
           << format_number(round_significant(k.sin_coeff, d), d) << '\n';
        break;
      case OutputFormat::json:
        os << json{{"n", o.n}, {"cos", round_significant(k.cos_coeff, d)}, {"sin", round_significant(k.sin_coeff, d)}}
                  .dump(2)
           << '\n';
        break;
    }
    return kExitOk;
  }
  const Complex s = o.s.required("s");
  if (fam == "rational") {
    emit_value(os, c, "finite_fourier_rational", finite_fourier_rational(s, o.a, o.q, c.params));
    return kExitOk;
  }
  const SeriesFamily family = require_family(fam);
  emit_value(os, c, family_tag(family), family_coefficient(family, point_from(o, s), o.n, c.params));
  return kExitOk;
}

int run_parseval(const Options& o, const CliConfig& c, std::ostream& os) {
  const SeriesFamily family = require_family(o.family.empty() ? "hurwitz" : o.family);
  const FamilyPoint p = point_from(o, o.s.required("s"));
  require_parseval_region(family, p.s);
  std::optional<double> rhs;
  std::optional<double> lhs;
  if (o.side != "lhs") rhs = parseval_rhs(family, p, c.params);
  if (o.side != "rhs") lhs = parseval_lhs_numeric(family_integrand(family, p, c.params), oracle_params(c.params));

  const int d = c.precision_digits;
  std::optional<double> rel;
  if (rhs && lhs) rel = std::abs(*rhs - *lhs) / std::max(std::abs(*lhs), 1e-300);
  switch (c.format) {
    case OutputFormat::plain:
      if (rhs) os << "rhs " << format_fixed(*rhs, d) << '\n';
      if (lhs) os << "lhs " << format_fixed(*lhs, d) << '\n';
      if (rel) os << "rel_diff " << format_number(round_significant(*rel, 4), 4) << '\n';
      break;
    case OutputFormat::csv:
      os << "family,rhs,lhs,rel_diff\n" << family_tag(family) << ','
         << (rhs ? format_number(round_significant(*rhs, d), d) : "") << ','
         << (lhs ? format_number(round_significant(*lhs, d), d) : "") << ','
         << (rel ? format_number(round_significant(*rel, d), d) : "") << '\n';
      break;
    case OutputFormat::json: {
      json j{{"family", family_tag(family)}};
      j["rhs"] = rhs ? json(round_significant(*rhs, d)) : json(nullptr);
      j["lhs"] = lhs ? json(round_significant(*lhs, d)) : json(nullptr);
      j["rel_diff"] = rel ? json(round_significant(*rel, d)) : json(nullptr);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_mikolas(const Options& o, const CliConfig& c, std::ostream& os) {
  const Complex s1 = o.s.required("s");
  const Complex s2 = o.s2.required("s2");
  const MikolasValue v = mikolas_product_detail(s1, s2, c.params);
  const int d = c.precision_digits;
  switch (c.format) {
    case OutputFormat::plain:
      os << format_complex_plain(v.pairing, d) << '\n';
      os << "beta_form " << (v.beta ? format_complex_plain(*v.beta, d) : std::string("undefined")) << '\n';
      break;
    case OutputFormat::csv:
      os << "quantity,re,im\npairing," << csv_complex(v.pairing, d) << '\n';
      os << "beta_form," << (v.beta ? csv_complex(*v.beta, d) : std::string(",")) << '\n';
      break;
    case OutputFormat::json: {
      json j{{"pairing", complex_json(v.pairing, d)}};
      j["beta_form"] = v.beta ? complex_json(*v.beta, d) : json(nullptr);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_verify(const Options& o, const CliConfig& c, std::ostream& os) {
  if (o.suite != "default") throw CLI::ValidationError("--suite", "only 'default' is defined");
  std::vector<CheckSpec> specs = default_suite();
  if (!o.only.empty()) {
    std::vector<CheckSpec> chosen;
    for (const std::string& name : o.only) {
      const auto tag = parse_check_tag(name);
      if (!tag) throw CLI::ValidationError("--only", "unknown check '" + name + "'");
      for (const CheckSpec& spec : specs) {
        if (spec.tag == *tag) chosen.push_back(spec);
      }
    }
    specs = std::move(chosen);
  }

  std::vector<VerificationReport> reports;
  bool passed = true;
  for (const CheckSpec& spec : specs) {
    reports.push_back(run_check(spec, c.params, c.threads));
    passed = passed && reports.back().passed;
  }

  const int d = c.precision_digits;
  switch (c.format) {
    case OutputFormat::plain:
      for (const VerificationReport& r : reports) {
        os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(16) << check_tag_name(r.spec.tag)
           << " rows=" << r.rows.size() << " worst_abs=" << format_number(round_significant(r.worst_abs, 4), 4)
           << " worst_rel=" << format_number(round_significant(r.worst_rel, 4), 4)
           << " tol=" << format_number(r.spec.tolerance, 4) << '\n';
        for (const CheckRow& row : r.rows) {
          if (!row.error.empty()) os << "  row n=" << row.index << ": " << row.error << '\n';
        }
      }
      os << (passed ? "all checks passed" : "some checks failed") << '\n';
      break;
    case OutputFormat::csv: write_csv(os, reports, d); break;
    case OutputFormat::json: os << suite_to_json(reports, d).dump(2) << '\n'; break;
  }
  return passed ? kExitOk : kExitFailure;
}

int run_table(const Options& o, const CliConfig& c, std::ostream& os) {
  const int d = c.precision_digits;
  const Complex s = o.s.required("s");
  if (!o.family.empty()) {
    // Coefficient sweep: closed form against the quadrature oracle.
    const SeriesFamily family = require_family(o.family);
    const FamilyPoint p = point_from(o, s);
    require_coefficient_region(family, s);
    if (o.n_min > o.n_max) throw DomainError("table: --n-min must not exceed --n-max");
    json rows = json::array();
    if (c.format == OutputFormat::csv) os << "n,re_closed,im_closed,re_oracle,im_oracle,abs_err\n";
    for (int n = o.n_min; n <= o.n_max; ++n) {
      const Complex closed = family_coefficient(family, p, n, c.params);
      const Complex oracle = family_coefficient_oracle(family, p, n, c.params);
      const double err = std::abs(closed - oracle);
      switch (c.format) {
        case OutputFormat::plain:
          os << std::setw(4) << n << "  " << format_complex_plain(closed, d) << "  |  "
             << format_complex_plain(oracle, d) << "  err " << format_number(round_significant(err, 4), 4) << '\n';
          break;
        case OutputFormat::csv:
          os << n << ',' << csv_complex(closed, d) << ',' << csv_complex(oracle, d) << ','
             << format_number(round_significant(err, d), d) << '\n';
          break;
        case OutputFormat::json:
          rows.push_back({{"n", n},
                          {"closed_form", complex_json(closed, d)},
                          {"oracle", complex_json(oracle, d)},
                          {"abs_err", round_significant(err, d)}});
          break;
      }
    }
    if (c.format == OutputFormat::json) os << json{{"family", family_tag(family)}, {"rows", rows}}.dump(2) << '\n';
    return kExitOk;
  }

  // Value sweep over alpha.
  if (o.steps < 1) throw DomainError("table: --steps must be >= 1");
  json rows = json::array();
  if (c.format == OutputFormat::csv) os << "alpha,re,im\n";
  for (int i = 0; i < o.steps; ++i) {
    const double alpha = o.steps == 1 ? o.alpha_from : o.alpha_from + (o.alpha_to - o.alpha_from) * i / (o.steps - 1);
    const Complex v = (o.lambda && *o.lambda != 1.0)
                          ? lerch_phi({*o.lambda, alpha, s}, c.params)
                          : hurwitz_shifted(s, alpha, o.k, o.r, c.params).derivative(static_cast<std::size_t>(o.r));
    switch (c.format) {
      case OutputFormat::plain: os << format_fixed(alpha, 6) << "  " << format_complex_plain(v, d) << '\n'; break;
      case OutputFormat::csv: os << format_number(alpha, d) << ',' << csv_complex(v, d) << '\n'; break;
      case OutputFormat::json: rows.push_back({{"alpha", alpha}, {"value", complex_json(v, d)}}); break;
    }
  }
  if (c.format == OutputFormat::json) os << json{{"rows", rows}}.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

void CliConfig::validate() const {
  if (precision_digits < kMinDigits || precision_digits > kMaxDigits) {
    throw DomainError("precision_digits must lie in [4, 17]");
  }
  if (threads < 1) throw DomainError("threads must be >= 1");
}

std::string format_fixed(double x, int digits) {
  char buf[512];
  if (std::isfinite(x) && std::abs(x) >= 1e15) {
    std::snprintf(buf, sizeof buf, "%.*e", digits, x);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  }
  std::string text = buf;
  if (text[0] == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  return text;
}

std::string format_complex_plain(Complex z, int digits) {
  std::string text = format_fixed(z.real(), digits);
  const std::string im = format_fixed(std::abs(z.imag()), digits);
  if (im.find_first_not_of("0.") != std::string::npos) {
    text += (z.imag() < 0.0 ? " -" : " +") + im + "i";
  }
  return text;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hurwitz and Lerch zeta functions, their Fourier coefficients on [0, 1], and identity checks"};
  app.require_subcommand(1);
  app.footer(kStripHelp);

  CLI::App* eval = app.add_subcommand("eval", "zeta^(r)_k(s, alpha), or phi(lambda, alpha, s) when --lambda is given");
  add_s(eval, o.s, "s", "any s != 1");
  eval->add_option("--alpha", o.alpha, "alpha > 0 (default 1; alpha + k > 0 with --k)");
  eval->add_option("--lambda", o.lambda, "Lerch parameter, 0 < lambda <= 1 (1 = Hurwitz)");
  eval->add_option("--r", o.r, "s-derivative order r >= 0 (Hurwitz only)");
  eval->add_option("--k", o.k, "shift k >= 0: sum over n >= k (Hurwitz only)");
  add_common(eval, o);

  CLI::App* coeff = app.add_subcommand("coeff", "Closed-form Fourier coefficient");
  coeff->add_option("--family", o.family, "zeta1 | hurwitz | hurwitz_deriv | lerch_lambda | lerch_alpha | rational | kummer");
  add_s(coeff, o.s, "s", "family strip: see below");
  coeff->add_option("--n", o.n, "coefficient index (kummer: n >= 1)");
  coeff->add_option("--r", o.r, "derivative order r >= 0 (hurwitz_deriv)");
  coeff->add_option("--alpha", o.alpha, "alpha > 0 (lerch_lambda)");
  coeff->add_option("--lambda", o.lambda, "0 < lambda < 1 (lerch_alpha)");
  coeff->add_option("--a", o.a, "numerator, 1 <= a <= q (rational)");
  coeff->add_option("--q", o.q, "denominator q >= 1 (rational)");
  add_common(coeff, o);

  CLI::App* parseval = app.add_subcommand("parseval", "Parseval identity: closed form (rhs) and quadrature (lhs)");
  parseval->add_option("--family", o.family, "zeta1 | hurwitz | hurwitz_deriv | lerch_lambda | lerch_alpha");
  add_s(parseval, o.s, "s", "Parseval strip: see below");
  parseval->add_option("--side", o.side, "lhs | rhs | both")->check(CLI::IsMember({"lhs", "rhs", "both"}));
  parseval->add_option("--r", o.r, "derivative order r >= 0 (hurwitz_deriv)");
  parseval->add_option("--alpha", o.alpha, "alpha > 0 (lerch_lambda)");
  parseval->add_option("--lambda", o.lambda, "0 < lambda < 1 (lerch_alpha)");
  add_common(parseval, o);

  CLI::App* mikolas = app.add_subcommand("mikolas", "int_0^1 zeta(s1, x) zeta(s2, x) dx in closed form");
  add_s(mikolas, o.s, "s", "s1; Re(s1 + s2) < 1");
  add_s(mikolas, o.s2, "s2", "Re(s1 + s2) < 1");
  add_common(mikolas, o);

  CLI::App* verify = app.add_subcommand("verify", "Run identity checks against the quadrature oracle");
  verify->add_option("--suite", o.suite, "suite name (default)");
  verify->add_option("--only", o.only, "restrict to these check tags (repeatable), e.g. P2_COEFF");
  add_common(verify, o);

  CLI::App* table = app.add_subcommand(
      "table", "Coefficient sweep over n (with --family) or value sweep over alpha (without)");
  table->add_option("--family", o.family, "zeta1 | hurwitz | hurwitz_deriv | lerch_lambda | lerch_alpha");
  add_s(table, o.s, "s", "family strip, or any s != 1 for value sweeps");
  table->add_option("--n-min", o.n_min, "first index (default -8)");
  table->add_option("--n-max", o.n_max, "last index (default 8)");
  table->add_option("--r", o.r, "derivative order r >= 0");
  table->add_option("--k", o.k, "shift k >= 0 (value sweep)");
  table->add_option("--alpha", o.alpha, "alpha > 0 (lerch_lambda)");
  table->add_option("--lambda", o.lambda, "0 < lambda <= 1");
  table->add_option("--alpha-from", o.alpha_from, "first alpha > 0 of the value sweep (default 0.1)");
  table->add_option("--alpha-to", o.alpha_to, "last alpha of the value sweep (default 0.9)");
  table->add_option("--steps", o.steps, "number of sweep points >= 1 (default 9)");
  add_common(table, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const CliConfig config = make_config(o);
    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& os = config.output_path ? static_cast<std::ostream&>(buffer) : out;
    int code = kExitOk;
    if (eval->parsed()) code = run_eval(o, config, os);
    else if (coeff->parsed()) code = run_coeff(o, config, os);
    else if (parseval->parsed()) code = run_parseval(o, config, os);
    else if (mikolas->parsed()) code = run_mikolas(o, config, os);
    else if (verify->parsed()) code = run_verify(o, config, os);
    else if (table->parsed()) code = run_table(o, config, os);
    if (config.output_path) {
      file.open(*config.output_path);
      if (!file) {
        err << "error: cannot open " << *config.output_path << " for writing\n";
        return kExitFailure;
      }
      file << buffer.str();
    }
    return code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hzeta
