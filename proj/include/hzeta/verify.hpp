// SPDX-License-Identifier: Apache-2.0
//
// Verification runner: each check pits a closed form from fourier.hpp (or a
// series evaluator from zeta.hpp) against an independent oracle, row by row
// over a parameter grid.

#ifndef HZETA_VERIFY_HPP
#define HZETA_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hzeta/fourier.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/types.hpp"

namespace hzeta {

enum class CheckTag {
  P1_COEFF,
  P1_PARSEVAL,
  P2_COEFF,
  P2_PARSEVAL,
  COR1_RATIONAL,
  COR2_MIKOLAS,
  P3_COEFF,
  KUMMER_SERIES,
  KUMMER_PARSEVAL,
  P4_COEFF,
  P4_PARSEVAL,
  P5_COEFF,
  P5_PARSEVAL,
  P6_COEFF,
  P6_PARSEVAL,
  TAYLOR_VS_EM,
};

inline constexpr std::array<CheckTag, 16> kAllCheckTags = {
    CheckTag::P1_COEFF,      CheckTag::P1_PARSEVAL,     CheckTag::P2_COEFF,      CheckTag::P2_PARSEVAL,
    CheckTag::COR1_RATIONAL, CheckTag::COR2_MIKOLAS,    CheckTag::P3_COEFF,      CheckTag::KUMMER_SERIES,
    CheckTag::KUMMER_PARSEVAL, CheckTag::P4_COEFF,      CheckTag::P4_PARSEVAL,   CheckTag::P5_COEFF,
    CheckTag::P5_PARSEVAL,   CheckTag::P6_COEFF,        CheckTag::P6_PARSEVAL,   CheckTag::TAYLOR_VS_EM,
};

const char* check_tag_name(CheckTag tag);
std::optional<CheckTag> parse_check_tag(std::string_view name);

/// One parameter point. Which fields matter depends on the tag:
///   s            every tag except the Kummer checks
///   s2           COR2_MIKOLAS
///   r            P3/P4 (derivative order), TAYLOR_VS_EM
///   alpha        P5 (shift), TAYLOR_VS_EM (expansion point), COR1 (a/q, informational)
///   lambda       P6
///   a, q         COR1_RATIONAL
///   k            TAYLOR_VS_EM
struct GridPoint {
  Complex s;
  Complex s2;
  int r = 0;
  double alpha = 1.0;
  double lambda = 0.5;
  int a = 1;
  int q = 1;
  int k = 1;

  bool operator==(const GridPoint&) const = default;
};

struct CheckSpec {
  CheckTag tag = CheckTag::P2_COEFF;
  std::vector<GridPoint> grid;
  int n_min = 0;  // coefficient index window; ignored by scalar checks
  int n_max = 0;
  double tolerance = 1e-7;

  /// Throws DomainError when a grid point leaves the tag's validity region
  /// or the index window is malformed.
  void validate() const;
};

struct CheckRow {
  GridPoint point;
  int index = 0;
  Complex closed_form;
  Complex oracle;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool ok = false;
  std::string error;  // nonempty when either side failed to evaluate

  bool operator==(const CheckRow&) const = default;
};

struct VerificationReport {
  CheckSpec spec;
  std::vector<CheckRow> rows;
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  bool passed = false;
};

/// Error measure compared with the tolerance: relative when |oracle| > 1,
/// absolute otherwise.
double error_measure(const CheckRow& row);

/// Rows in grid-major, index-minor order. Rows are independent and run on
/// up to `threads` threads; the result does not depend on the thread count.
VerificationReport run_check(const CheckSpec& spec, const EvalParams& params = {}, int threads = 1);

/// One spec per tag, in kAllCheckTags order.
std::vector<CheckSpec> default_suite();

struct LedgerEntry {
  std::string identity;
  std::string stated;
  std::string implemented;
  std::string note;
};

/// Identities whose commonly stated form differs from what is implemented.
const std::vector<LedgerEntry>& formula_ledger();

/// f on (0, 1) for a family: zeta(s, x+1), zeta(s, x), zeta^(r)(s, x),
/// phi(x, alpha, s) or phi(lambda, x, s).
Integrand family_integrand(SeriesFamily family, const FamilyPoint& point, const EvalParams& params = {});

/// Quadrature value of the family's n-th coefficient.
Complex family_coefficient_oracle(SeriesFamily family, const FamilyPoint& point, int n,
                                  const EvalParams& params = {});

/// Quadrature settings used on the oracle side of every check.
EvalParams oracle_params(const EvalParams& params);

}  // namespace hzeta

#endif  // HZETA_VERIFY_HPP
