#pragma once

#include <optional>
#include <string>
#include <vector>

namespace divdiff::cli {

enum class OutputFormat { json, csv };

/// Everything a single invocation needs; textual fields are parsed by run().
struct RunConfig {
  std::string command;
  std::optional<std::string> func;
  std::optional<int> n;
  std::optional<long> N;
  std::optional<long> N_max;
  std::optional<int> j;
  std::optional<std::string> x;
  std::optional<std::string> h;
  std::optional<std::string> knots;
  std::optional<std::string> values;
  OutputFormat format = OutputFormat::json;
  bool extend_zero = false;
  bool decimals = false;
  bool basis = false;
  std::optional<int> max_N_override;
};

struct RunOutcome {
  int exit_code = 0;
  std::string data;         ///< serialized report; empty unless a report was produced
  std::string diagnostic;   ///< human-readable message for stderr
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

inline constexpr int kDefaultNullspaceCap = 12;
inline constexpr int kDefaultMinLipschitzCap = 8;

/// Dispatches to one library operation and renders its report.
RunOutcome run(const RunConfig& config);

extern const char* const kVersion;

}  // namespace divdiff::cli
