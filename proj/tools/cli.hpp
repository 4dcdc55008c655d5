#ifndef TURAN_TOOLS_CLI_HPP
#define TURAN_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan::cli {

enum class Command { Families, Check, Scan, Ratios, Lambda, Density };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Check;
  /// Path to a family spec, or the spec itself as inline JSON.
  std::string family;
  std::size_t N = 100;
  /// Scan horizon; defaults to N.
  std::optional<std::size_t> n_max;
  std::size_t grid_points = 2001;
  /// Empty writes to the output stream passed to run().
  std::string output;
  Format format = Format::Json;
  ArithmeticMode mode = ArithmeticMode::Auto;
  FloatPrecision precision = FloatPrecision::Double;
  std::optional<double> scan_tolerance;
  std::optional<double> margin;
  std::size_t digit_cap = kDefaultDigitCap;
  bool raw = false;
  std::size_t density_points = 199;
  bool reproducible = false;
};

/// Rejects N < 1, grid_points < 3 and CSV for commands without a CSV form.
/// Returns an error message or nullopt.
std::optional<std::string> validate(const RunConfig& config);

/// Parses argv. On --help or a usage error returns nullopt and sets `exit_code`
/// (0 for help, 2 for errors) after printing to `out`/`err`.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                            int& exit_code);

/// Executes one command. Exit codes: 0 all verdicts Satisfied / nonnegative,
/// 1 some Violated / negative / inconclusive, 2 usage or data error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace turan::cli

#endif  // TURAN_TOOLS_CLI_HPP
