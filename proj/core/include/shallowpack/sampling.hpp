#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "shallowpack/set_system.hpp"

namespace shallowpack {

/// Parameters of the ε-net / relative-approximation sample-size formulas.
/// All logarithms in this module are base 2.
struct SampleParams {
  double epsilon = 0.5;
  double eta = 0.25;
  /// Target failure probability q.
  double failure = 0.25;
  /// Absolute constant multiplying every sample-size formula.
  double c = 4.0;

  /// Throws std::invalid_argument unless ε, η, q ∈ (0,1) and c > 0.
  void validate() const;
};

/// ⌈(2d0 + 2)(n + 1) / (δ + 2d0 + 2)⌉. Requires n >= max(d0, δ); the result
/// is at most n whenever δ >= 3.
std::size_t haussler_sample_size(std::size_t d0, std::size_t n, std::size_t delta);

/// j-fold iterated base-2 logarithm.
double iterated_log2(double x, std::size_t j);

/// ⌈m · log^(j)(n/δ)⌉. Throws std::invalid_argument when j == 0 or the
/// iterated logarithm drops below 1.
std::size_t iterated_sample_size(std::size_t m, std::size_t n, std::size_t delta, std::size_t j);

/// Uniform `size`-subset of [0, n) via a seeded partial Fisher-Yates shuffle.
IndexSample draw_sample(std::size_t n, std::size_t size, std::uint64_t seed);

/// ⌈c (d log(1/ε) + log(1/q)) / ε⌉, uncapped.
std::size_t epsilon_net_size(const SampleParams& params, double dimension);
/// ⌈c (d log(1/ε) + log(1/q)) / (ε η²)⌉, uncapped.
std::size_t relative_approximation_size(const SampleParams& params, double dimension);

/// Random sample of epsilon_net_size indices; the full index set when that
/// exceeds n. `dimension` defaults to vc_dimension_exact(sys). Success is not
/// guaranteed; check with verify_epsilon_net.
IndexSample epsilon_net(const SetSystem& sys, const SampleParams& params,
                        std::optional<double> dimension, std::uint64_t seed);

/// Every vector of length >= εn has at least one index in the sample.
bool verify_epsilon_net(const SetSystem& sys, const IndexSample& sample, double epsilon);

IndexSample relative_approximation(const SetSystem& sys, const SampleParams& params,
                                   std::optional<double> dimension, std::uint64_t seed);

/// Checks |‖v|_I‖/|I| - ‖v‖/n| <= η‖v‖/n for dense vectors (‖v‖/n >= ε) and
/// <= ηε otherwise. Comparisons allow 1e-12 slack.
bool verify_relative_approximation(const SetSystem& sys, const IndexSample& sample,
                                   double epsilon, double eta);

/// {u XOR v : u != v in sys}.
SetSystem symmetric_difference_system(const SetSystem& sys);

/// Outcome of one draw of the first-iteration sample I1.
struct CompactProjection {
  IndexSample sample;
  /// (i) distinct vectors stay distinct on I1.
  bool injective = false;
  std::size_t max_projected_length = 0;
  /// (3/2) k |I1| / n.
  double length_threshold = 0.0;
  /// (ii) max_projected_length <= length_threshold.
  bool short_projection = false;

  bool both() const { return injective && short_projection; }
};

/// ⌈c d (n/δ) log(n/δ)⌉, at least 1.
std::size_t compact_projection_size(std::size_t n, std::size_t delta, double dimension, double c);

/// Draws I1 and evaluates both properties. Requires sys strictly δ-separated,
/// every length <= k and 2k >= δ (std::invalid_argument otherwise). When the
/// formula size reaches n the full index set is used.
CompactProjection compact_projection(const SetSystem& sys, std::size_t delta, std::size_t k,
                                     double dimension, double c, std::uint64_t seed);

/// Limits for conditional_variance_sum.
inline constexpr std::size_t kMaxVarianceGround = 12;
inline constexpr std::size_t kMaxVarianceVectors = 4096;

/// Σ_i Var(V_i | all other coordinates) under the uniform distribution on
/// sys. Throws BudgetExceeded beyond kMaxVarianceGround / kMaxVarianceVectors.
double conditional_variance_sum(const SetSystem& sys);

/// Repeated draws of a randomized sample, scored by a verifier.
struct SuccessRate {
  std::size_t trials = 0;
  std::size_t successes = 0;
  /// Size suggested by the formula, before capping at n.
  std::size_t formula_size = 0;
  /// Size actually drawn.
  std::size_t sample_size = 0;

  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
};

/// epsilon_net + verify_epsilon_net over `trials` derived seeds.
SuccessRate epsilon_net_success(const SetSystem& sys, const SampleParams& params,
                                std::optional<double> dimension, std::size_t trials,
                                std::uint64_t seed);

/// relative_approximation + verify_relative_approximation over `trials` seeds.
SuccessRate relative_approximation_success(const SetSystem& sys, const SampleParams& params,
                                           std::optional<double> dimension, std::size_t trials,
                                           std::uint64_t seed);

/// compact_projection, counting draws where both properties hold.
SuccessRate compact_projection_success(const SetSystem& sys, std::size_t delta, std::size_t k,
                                       double dimension, double c, std::size_t trials,
                                       std::uint64_t seed);

struct ProjectionCheck {
  /// |V|.
  double lhs = 0.0;
  /// (d0 + 1) times the Monte Carlo mean of |V|_I|.
  double rhs = 0.0;
  double mean = 0.0;
  /// Standard error of the mean.
  double se = 0.0;
  std::size_t trials = 0;
  /// |I| = m - 1.
  std::size_t sample_size = 0;

  /// lhs <= (d0 + 1)(mean + sigmas * se).
  bool holds(std::size_t d0, double sigmas = 3.0) const;
};

/// Monte Carlo check of |V| <= (d0 + 1) E[|V|_I|] with |I| = m - 1 and m from
/// haussler_sample_size. Requires sys strictly δ-separated and
/// δ <= n / 2^(d0+1).
ProjectionCheck projection_expectation_check(const SetSystem& sys, std::size_t delta,
                                             std::size_t d0, std::size_t trials,
                                             std::uint64_t seed);

}  // namespace shallowpack
