#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "harness/config.hpp"

namespace shallowpack::harness {

struct RunResult {
  std::string name;
  /// Rendered CSV or JSON.
  std::string text;
  std::optional<std::filesystem::path> output;
  /// False when a check performed inside the run failed.
  bool verified = true;
  std::string failure;
};

/// Validates and executes one experiment. Invalid parameters surface as
/// ConfigError or std::invalid_argument; anything else is a runtime failure.
RunResult run_experiment(const ExperimentConfig& exp);

/// Writes the text to the output path (creating parent directories), or to
/// `fallback` when the experiment has no output key.
void write_result(const RunResult& result, std::ostream& fallback);

struct ExponentFit {
  double slope = 0.0;
  double slope_se = 0.0;
  std::size_t points = 0;
};

/// log-log OLS slope of column `y_col` against `x_col` over the first CSV
/// block (rows up to the first line with a different field count). Throws
/// std::invalid_argument for a missing column, fewer than 3 rows or
/// non-positive values.
ExponentFit fit_exponents(std::istream& csv, std::string_view x_col,
                          std::string_view y_col = "packing_size");

}  // namespace shallowpack::harness
