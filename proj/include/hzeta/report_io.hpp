// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV serialization of verification reports. Numbers are rounded
// to a fixed count of significant digits before emission, so parsing the
// JSON back yields exactly round_report(report, digits).

#ifndef HZETA_REPORT_IO_HPP
#define HZETA_REPORT_IO_HPP

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "hzeta/verify.hpp"

namespace hzeta {

inline constexpr int kMinDigits = 4;
inline constexpr int kMaxDigits = 17;

/// x rounded to `digits` significant decimal digits (non-finite x unchanged).
double round_significant(double x, int digits);

/// Copy of the report with every real field rounded as the JSON emitter does.
VerificationReport round_report(const VerificationReport& report, int digits);

nlohmann::json report_to_json(const VerificationReport& report, int digits);
VerificationReport report_from_json(const nlohmann::json& j);

/// {"formula_ledger": [...], "passed": bool, "reports": [...]}
nlohmann::json suite_to_json(const std::vector<VerificationReport>& reports, int digits);
std::vector<VerificationReport> suite_from_json(const nlohmann::json& j);

/// Header plus one line per row:
/// tag,sigma,t,alpha,lambda,r,n,re_closed,im_closed,re_oracle,im_oracle,abs_err,rel_err
void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports, int digits);

/// Shortest text for a rounded double ("%.{digits}g").
std::string format_number(double x, int digits);

}  // namespace hzeta

#endif  // HZETA_REPORT_IO_HPP
