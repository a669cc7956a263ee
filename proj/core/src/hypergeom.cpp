#include "shallowpack/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shallowpack/parallel.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/sampling.hpp"

namespace shallowpack {

BigInt big_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational hypergeom_pmf(std::size_t n, std::size_t sample_size, std::size_t v_len, std::size_t s) {
  if (sample_size > n || v_len > n) {
    throw std::invalid_argument("hypergeom_pmf: sample size and v_len must not exceed n");
  }
  if (s > v_len || s > sample_size || sample_size - s > n - v_len) return Rational(0);
  return Rational(big_binomial(v_len, s) * big_binomial(n - v_len, sample_size - s),
                  big_binomial(n, sample_size));
}

Rational hypergeom_upper_tail(std::size_t n, std::size_t sample_size, std::size_t v_len,
                              std::size_t s_min) {
  Rational total(0);
  for (std::size_t s = s_min; s <= std::min(v_len, sample_size); ++s) {
    total += hypergeom_pmf(n, sample_size, v_len, s);
  }
  return total;
}

std::size_t decay_threshold(double t, std::size_t n, std::size_t k, std::size_t sample_size) {
  const double x = t * static_cast<double>(k * sample_size) / static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(x - 1e-12));
}

double decay_bound(double t, std::size_t n, std::size_t k, std::size_t sample_size) {
  return std::exp2(-t * static_cast<double>(k * sample_size) / static_cast<double>(n));
}

double TailRow::sigma(std::size_t trials) const {
  if (!exact) throw std::logic_error("TailRow::sigma: no exact tail");
  const double p = boost::rational_cast<double>(*exact);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

TailReport decay_tail_experiment(std::size_t n, std::size_t k, std::size_t m_j,
                                 std::span<const double> t_grid, std::size_t trials,
                                 std::uint64_t seed) {
  if (m_j == 0 || k == 0 || n == 0) {
    throw std::invalid_argument("decay_tail_experiment: requires k (m_j - 1) / n > 0");
  }
  const std::size_t sample_size = m_j - 1;
  if (sample_size == 0) throw std::invalid_argument("decay_tail_experiment: requires m_j >= 2");
  if (k > n || sample_size > n) throw std::invalid_argument("decay_tail_experiment: k and m_j - 1 must not exceed n");
  if (trials == 0) throw std::invalid_argument("decay_tail_experiment: trials must be positive");
  for (double t : t_grid) {
    if (!(t >= 2.0 * std::numbers::e)) throw std::invalid_argument("decay_tail_experiment: every t must be >= 2e");
  }

  // The marked coordinates are [0, k).
  std::vector<std::size_t> hits(trials);
  parallel_for(trials, [&](std::size_t i) {
    const auto sample = draw_sample(n, sample_size, derive_seed(seed, "decay_tail", i));
    const auto idx = sample.indices();
    hits[i] = static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), k) - idx.begin());
  });

  const bool exact = big_binomial(n, sample_size).convert_to<double>() < kExactTailLimit;
  TailReport report{n, k, sample_size, trials, {}};
  for (double t : t_grid) {
    TailRow row;
    row.t = t;
    row.threshold = decay_threshold(t, n, k, sample_size);
    const auto over = std::count_if(hits.begin(), hits.end(), [&](std::size_t h) { return h >= row.threshold; });
    row.empirical = static_cast<double>(over) / static_cast<double>(trials);
    if (exact) row.exact = hypergeom_upper_tail(n, sample_size, k, row.threshold);
    row.bound = decay_bound(t, n, k, sample_size);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace shallowpack
