// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. `dispatch` takes the arguments after the program
// name and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success (and all checks passed), 1 failed check or numeric
// failure, 2 usage error or parameter outside its validity strip.

#ifndef HZETA_CLI_HPP
#define HZETA_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hzeta/types.hpp"

namespace hzeta {

enum class OutputFormat { plain, csv, json };

struct CliConfig {
  OutputFormat format = OutputFormat::plain;
  int precision_digits = 12;
  EvalParams params;
  std::optional<std::string> output_path;
  int threads = 1;

  /// Throws DomainError when precision_digits is outside [4, 17].
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point text with `digits` decimals ("-0.000" normalized to "0.000").
std::string format_fixed(double x, int digits);

/// "re" or "re +imi" / "re -imi"; the imaginary part is dropped when it
/// rounds to zero at `digits` decimals.
std::string format_complex_plain(Complex z, int digits);

}  // namespace hzeta

#endif  // HZETA_CLI_HPP
