#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "shallowpack/set_system.hpp"

namespace shallowpack {

/// Two-colouring χ : [n] -> {-1, +1}.
class Coloring {
 public:
  Coloring() = default;
  /// Throws std::invalid_argument when a sign is not ±1.
  explicit Coloring(std::vector<int> signs);
  /// All +1.
  static Coloring uniform(std::size_t n);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  Coloring negated() const;

 private:
  std::vector<int> signs_;
};

struct ColoringEval {
  /// χ(S) per set, in canonical order.
  std::vector<long long> values;
  /// max |χ(S)|; 0 for an empty system.
  long long disc = 0;
};

/// Throws std::invalid_argument on a width mismatch.
ColoringEval eval_coloring(const SetSystem& sys, const Coloring& chi);

/// Independent fair signs, deterministic given seed.
Coloring random_coloring(std::size_t n, std::uint64_t seed);

/// Predicted size-sensitive discrepancy of a set of size s among halfspaces
/// over n points in R^d (constant 1, log base 2). Throws std::invalid_argument
/// for d < 3 or s > n.
double bound_disc_halfspaces(std::size_t s, std::size_t n, std::size_t d);

struct DiscrepancyRow {
  std::size_t set_index = 0;
  std::size_t set_size = 0;
  long long chi = 0;
  /// bound_disc_halfspaces(set_size, n, d) when d >= 3 was supplied.
  std::optional<double> predicted;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;
  long long disc = 0;
};

/// Per-set evaluation of chi, paired with the halfspace predictor for
/// dimension d when given.
DiscrepancyReport discrepancy_report(const SetSystem& sys, const Coloring& chi,
                                     std::optional<std::size_t> d);

}  // namespace shallowpack
