#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace shallowpack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/// Exact binomial coefficient; 0 when k > n.
BigInt big_binomial(std::size_t n, std::size_t k);

/// P[X = s] for X the number of marked items in a uniform `sample_size`-subset
/// of n items of which v_len are marked. Out-of-support s gives 0. Throws
/// std::invalid_argument when sample_size or v_len exceeds n.
Rational hypergeom_pmf(std::size_t n, std::size_t sample_size, std::size_t v_len, std::size_t s);

/// P[X >= s_min].
Rational hypergeom_upper_tail(std::size_t n, std::size_t sample_size, std::size_t v_len,
                              std::size_t s_min);

/// Smallest integer s with s >= t * k * sample_size / n.
std::size_t decay_threshold(double t, std::size_t n, std::size_t k, std::size_t sample_size);

/// 2^(-t k sample_size / n).
double decay_bound(double t, std::size_t n, std::size_t k, std::size_t sample_size);

/// Exact tails are computed when C(n, sample_size) stays below this.
inline constexpr double kExactTailLimit = 1e30;

struct TailRow {
  double t = 0.0;
  /// Integer threshold on the projected length.
  std::size_t threshold = 0;
  double empirical = 0.0;
  std::optional<Rational> exact;
  double bound = 0.0;

  /// Binomial standard deviation of the empirical frequency around the
  /// exact tail; requires `exact`.
  double sigma(std::size_t trials) const;
};

struct TailReport {
  std::size_t n = 0;
  std::size_t k = 0;
  /// m_j - 1.
  std::size_t sample_size = 0;
  std::size_t trials = 0;
  std::vector<TailRow> rows;
};

/// Projected length of a length-k vector onto uniform (m_j - 1)-subsets.
/// Requires every t >= 2e, k(m_j - 1) > 0, k <= n and m_j - 1 <= n.
TailReport decay_tail_experiment(std::size_t n, std::size_t k, std::size_t m_j,
                                 std::span<const double> t_grid, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace shallowpack
