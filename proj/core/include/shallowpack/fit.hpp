#pragma once

#include <cstddef>
#include <span>

namespace shallowpack {

/// Ordinary least-squares line y = intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Standard error of the slope; 0 for exactly two points.
  double slope_se = 0.0;
  std::size_t points = 0;
};

/// Requires equal lengths and at least two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// fit_line on (log2 x, log2 y). Requires every value positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace shallowpack
