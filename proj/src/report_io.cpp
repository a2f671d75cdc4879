// SPDX-License-Identifier: Apache-2.0

#include "hzeta/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>

namespace hzeta {

namespace {

using nlohmann::json;

void check_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits) throw DomainError("precision must lie in [4, 17]");
}

// Non-finite values have no JSON number form; they travel as null.
json number(double x, int digits) {
  if (!std::isfinite(x)) return nullptr;
  return round_significant(x, digits);
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json complex_json(Complex z, int digits) { return json::array({number(z.real(), digits), number(z.imag(), digits)}); }

Complex read_complex(const json& j) { return {read_number(j.at(0)), read_number(j.at(1))}; }

Complex round_complex(Complex z, int digits) {
  return {round_significant(z.real(), digits), round_significant(z.imag(), digits)};
}

json point_json(const GridPoint& g, int digits) {
  return {{"s", complex_json(g.s, digits)},
          {"s2", complex_json(g.s2, digits)},
          {"r", g.r},
          {"alpha", number(g.alpha, digits)},
          {"lambda", number(g.lambda, digits)},
          {"a", g.a},
          {"q", g.q},
          {"k", g.k}};
}

GridPoint read_point(const json& j) {
  GridPoint g;
  g.s = read_complex(j.at("s"));
  g.s2 = read_complex(j.at("s2"));
  g.r = j.at("r").get<int>();
  g.alpha = read_number(j.at("alpha"));
  g.lambda = read_number(j.at("lambda"));
  g.a = j.at("a").get<int>();
  g.q = j.at("q").get<int>();
  g.k = j.at("k").get<int>();
  return g;
}

GridPoint round_point(GridPoint g, int digits) {
  g.s = round_complex(g.s, digits);
  g.s2 = round_complex(g.s2, digits);
  g.alpha = round_significant(g.alpha, digits);
  g.lambda = round_significant(g.lambda, digits);
  return g;
}

}  // namespace

double round_significant(double x, int digits) {
  check_digits(digits);
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
  check_digits(digits);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

VerificationReport round_report(const VerificationReport& report, int digits) {
  VerificationReport out = report;
  for (GridPoint& g : out.spec.grid) g = round_point(g, digits);
  out.spec.tolerance = round_significant(out.spec.tolerance, digits);
  for (CheckRow& row : out.rows) {
    row.point = round_point(row.point, digits);
    row.closed_form = round_complex(row.closed_form, digits);
    row.oracle = round_complex(row.oracle, digits);
    row.abs_err = round_significant(row.abs_err, digits);
    row.rel_err = round_significant(row.rel_err, digits);
  }
  out.worst_abs = round_significant(out.worst_abs, digits);
  out.worst_rel = round_significant(out.worst_rel, digits);
  return out;
}

json report_to_json(const VerificationReport& report, int digits) {
  check_digits(digits);
  json grid = json::array();
  for (const GridPoint& g : report.spec.grid) grid.push_back(point_json(g, digits));
  json rows = json::array();
  for (const CheckRow& row : report.rows) {
    rows.push_back({{"point", point_json(row.point, digits)},
                    {"n", row.index},
                    {"closed_form", complex_json(row.closed_form, digits)},
                    {"oracle", complex_json(row.oracle, digits)},
                    {"abs_err", number(row.abs_err, digits)},
                    {"rel_err", number(row.rel_err, digits)},
                    {"ok", row.ok},
                    {"error", row.error}});
  }
  return {{"tag", check_tag_name(report.spec.tag)},
          {"tolerance", number(report.spec.tolerance, digits)},
          {"n_range", json::array({report.spec.n_min, report.spec.n_max})},
          {"grid", grid},
          {"rows", rows},
          {"worst_abs", number(report.worst_abs, digits)},
          {"worst_rel", number(report.worst_rel, digits)},
          {"passed", report.passed}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  const auto tag = parse_check_tag(j.at("tag").get<std::string>());
  if (!tag) throw DomainError("report_from_json: unknown tag");
  report.spec.tag = *tag;
  report.spec.tolerance = read_number(j.at("tolerance"));
  report.spec.n_min = j.at("n_range").at(0).get<int>();
  report.spec.n_max = j.at("n_range").at(1).get<int>();
  for (const json& g : j.at("grid")) report.spec.grid.push_back(read_point(g));
  for (const json& r : j.at("rows")) {
    CheckRow row;
    row.point = read_point(r.at("point"));
    row.index = r.at("n").get<int>();
    row.closed_form = read_complex(r.at("closed_form"));
    row.oracle = read_complex(r.at("oracle"));
    row.abs_err = read_number(r.at("abs_err"));
    row.rel_err = read_number(r.at("rel_err"));
    row.ok = r.at("ok").get<bool>();
    row.error = r.at("error").get<std::string>();
    report.rows.push_back(std::move(row));
  }
  // Infinite worst errors (failed rows) are emitted as null.
  const double inf = std::numeric_limits<double>::infinity();
  report.worst_abs = j.at("worst_abs").is_null() ? inf : j.at("worst_abs").get<double>();
  report.worst_rel = j.at("worst_rel").is_null() ? inf : j.at("worst_rel").get<double>();
  report.passed = j.at("passed").get<bool>();
  return report;
}

json suite_to_json(const std::vector<VerificationReport>& reports, int digits) {
  json ledger = json::array();
  for (const LedgerEntry& e : formula_ledger()) {
    ledger.push_back(
        {{"identity", e.identity}, {"stated", e.stated}, {"implemented", e.implemented}, {"note", e.note}});
  }
  json list = json::array();
  bool passed = true;
  for (const VerificationReport& r : reports) {
    list.push_back(report_to_json(r, digits));
    passed = passed && r.passed;
  }
  return {{"formula_ledger", ledger}, {"passed", passed}, {"reports", list}};
}

std::vector<VerificationReport> suite_from_json(const json& j) {
  std::vector<VerificationReport> out;
  for (const json& r : j.at("reports")) out.push_back(report_from_json(r));
  return out;
}

void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports, int digits) {
  check_digits(digits);
  out << "tag,sigma,t,alpha,lambda,r,n,re_closed,im_closed,re_oracle,im_oracle,abs_err,rel_err\n";
  auto num = [digits](double x) { return format_number(round_significant(x, digits), digits); };
  for (const VerificationReport& rep : reports) {
    for (const CheckRow& row : rep.rows) {
      const GridPoint& g = row.point;
      out << check_tag_name(rep.spec.tag) << ',' << num(g.s.real()) << ',' << num(g.s.imag()) << ','
          << num(g.alpha) << ',' << num(g.lambda) << ',' << g.r << ',' << row.index << ','
          << num(row.closed_form.real()) << ',' << num(row.closed_form.imag()) << ','
          << num(row.oracle.real()) << ',' << num(row.oracle.imag()) << ',' << num(row.abs_err) << ','
          << num(row.rel_err) << '\n';
    }
  }
}

}  // namespace hzeta
