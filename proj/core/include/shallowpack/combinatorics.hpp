#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "shallowpack/set_system.hpp"

namespace shallowpack {

/// Clarkson-Shor exponents (d, d1) together with the VC-dimension d0 used by
/// the sample-size formulas.
struct CsParams {
  double d = 1.0;
  double d1 = 1.0;
  std::size_t d0 = 1;

  /// Throws std::invalid_argument unless 1 <= d1 <= d and d0 >= 1.
  void validate() const;

  /// Halfspaces in R^dim: (dim, floor(dim/2), dim + 1). Requires dim >= 2.
  static CsParams halfspaces(std::size_t dim);
  /// Balls in R^dim, via the lifting to halfspaces in R^(dim+1).
  static CsParams balls(std::size_t dim);
  /// Slabs in R^dim: (dim + 1, dim, 2 dim + 2).
  static CsParams slabs(std::size_t dim);
};

/// Enumerative routines refuse to look at more index subsets than this.
inline constexpr std::uint64_t kSubsetBudget = std::uint64_t{1} << 22;
/// ... and only handle ground sets up to this size.
inline constexpr std::size_t kMaxExactGround = 24;

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// π(m): the largest number of distinct restrictions onto any m indices.
/// Throws BudgetExceeded when n > kMaxExactGround or C(n, m) > kSubsetBudget.
std::size_t shatter_function_exact(const SetSystem& sys, std::size_t m);

/// Size of the largest shattered index set (0 for a single vector).
/// Throws BudgetExceeded under the same limits as shatter_function_exact.
std::size_t vc_dimension_exact(const SetSystem& sys);

/// Sampled (m, k) profile: for each pair, the maximum over trials of the
/// number of distinct restrictions onto a random m-subset with length <= k.
struct ShatterProfile {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;
  std::size_t trials = 0;

  std::size_t at(std::size_t m, std::size_t k) const { return entries.at({m, k}); }
};

/// Deterministic given seed. Each trial draws one m-subset per sample size and
/// scores it for every length cap. Throws std::invalid_argument for trials == 0
/// or a sample size above n.
ShatterProfile cs_profile(const SetSystem& sys, std::span<const std::size_t> sample_sizes,
                          std::span<const std::size_t> length_caps, std::size_t trials,
                          std::uint64_t seed);

/// |E| / |V| for the graph joining vectors at distance exactly 1.
boost::rational<std::int64_t> unit_distance_density(const SetSystem& sys);

}  // namespace shallowpack
