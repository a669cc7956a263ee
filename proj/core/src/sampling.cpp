#include "shallowpack/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "shallowpack/combinatorics.hpp"
#include "shallowpack/errors.hpp"
#include "shallowpack/parallel.hpp"
#include "shallowpack/rng.hpp"

namespace shallowpack {
namespace {

constexpr double kSlack = 1e-12;

bool open_unit(double x) { return x > 0.0 && x < 1.0; }

std::size_t ceil_size(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("sample size is not finite");
  return static_cast<std::size_t>(std::ceil(x - kSlack));
}

double resolve_dimension(const SetSystem& sys, std::optional<double> dimension) {
  if (dimension) {
    if (*dimension <= 0.0) throw std::invalid_argument("dimension must be positive");
    return *dimension;
  }
  return std::max<double>(1.0, static_cast<double>(vc_dimension_exact(sys)));
}

IndexSample capped_sample(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (size >= n) return IndexSample::full(n);
  return draw_sample(n, size, seed);
}

}  // namespace

void SampleParams::validate() const {
  if (!open_unit(epsilon)) throw std::invalid_argument("epsilon must lie in (0,1)");
  if (!open_unit(eta)) throw std::invalid_argument("eta must lie in (0,1)");
  if (!open_unit(failure)) throw std::invalid_argument("failure probability must lie in (0,1)");
  if (!(c > 0.0)) throw std::invalid_argument("constant c must be positive");
}

std::size_t haussler_sample_size(std::size_t d0, std::size_t n, std::size_t delta) {
  if (n < std::max(d0, delta)) {
    throw std::invalid_argument("haussler_sample_size: requires n >= max(d0, delta)");
  }
  const std::uint64_t num = (2 * d0 + 2) * (n + 1);
  const std::uint64_t den = delta + 2 * d0 + 2;
  return static_cast<std::size_t>((num + den - 1) / den);
}

double iterated_log2(double x, std::size_t j) {
  for (std::size_t i = 0; i < j; ++i) {
    if (!(x > 0.0)) throw std::invalid_argument("iterated_log2: argument must stay positive");
    x = std::log2(x);
  }
  return x;
}

std::size_t iterated_sample_size(std::size_t m, std::size_t n, std::size_t delta, std::size_t j) {
  if (j == 0) throw std::invalid_argument("iterated_sample_size: j must be >= 1");
  if (delta == 0) throw std::invalid_argument("iterated_sample_size: delta must be positive");
  double level = static_cast<double>(n) / static_cast<double>(delta);
  for (std::size_t i = 0; i < j; ++i) {
    if (level < 1.0) throw std::invalid_argument("iterated_sample_size: iterated log below 1");
    level = std::log2(level);
  }
  if (level < 1.0 - kSlack) {
    throw std::invalid_argument("iterated_sample_size: iterated log below 1");
  }
  return ceil_size(static_cast<double>(m) * level);
}

IndexSample draw_sample(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (size > n) throw std::invalid_argument("draw_sample: size exceeds n");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return IndexSample(n, std::move(pool));
}

std::size_t epsilon_net_size(const SampleParams& params, double dimension) {
  params.validate();
  const double body = dimension * std::log2(1.0 / params.epsilon) + std::log2(1.0 / params.failure);
  return ceil_size(params.c * body / params.epsilon);
}

std::size_t relative_approximation_size(const SampleParams& params, double dimension) {
  params.validate();
  const double body = dimension * std::log2(1.0 / params.epsilon) + std::log2(1.0 / params.failure);
  return ceil_size(params.c * body / (params.epsilon * params.eta * params.eta));
}

IndexSample epsilon_net(const SetSystem& sys, const SampleParams& params,
                        std::optional<double> dimension, std::uint64_t seed) {
  const double d = resolve_dimension(sys, dimension);
  return capped_sample(sys.ground_size(), epsilon_net_size(params, d), seed);
}

bool verify_epsilon_net(const SetSystem& sys, const IndexSample& sample, double epsilon) {
  if (sample.ground_size() != sys.ground_size()) {
    throw std::invalid_argument("verify_epsilon_net: width mismatch");
  }
  const double threshold = epsilon * static_cast<double>(sys.ground_size());
  const auto mask = sample.mask();
  for (const auto& v : sys) {
    if (static_cast<double>(v.length()) >= threshold - kSlack && v.count_within(mask) == 0) {
      return false;
    }
  }
  return true;
}

IndexSample relative_approximation(const SetSystem& sys, const SampleParams& params,
                                   std::optional<double> dimension, std::uint64_t seed) {
  const double d = resolve_dimension(sys, dimension);
  return capped_sample(sys.ground_size(), relative_approximation_size(params, d), seed);
}

bool verify_relative_approximation(const SetSystem& sys, const IndexSample& sample,
                                   double epsilon, double eta) {
  if (sample.ground_size() != sys.ground_size()) {
    throw std::invalid_argument("verify_relative_approximation: width mismatch");
  }
  if (sample.empty()) return sys.empty();
  const double n = static_cast<double>(sys.ground_size());
  const double m = static_cast<double>(sample.size());
  const auto mask = sample.mask();
  for (const auto& v : sys) {
    const double density = static_cast<double>(v.length()) / n;
    const double sampled = static_cast<double>(v.count_within(mask)) / m;
    const double allowed = density >= epsilon ? eta * density : eta * epsilon;
    if (std::abs(sampled - density) > allowed + kSlack) return false;
  }
  return true;
}

SetSystem symmetric_difference_system(const SetSystem& sys) {
  std::vector<IncidenceVector> diffs;
  diffs.reserve(sys.size() * (sys.size() - (sys.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) diffs.push_back(sys[i] ^ sys[j]);
  }
  return SetSystem(sys.ground_size(), std::move(diffs));
}

std::size_t compact_projection_size(std::size_t n, std::size_t delta, double dimension, double c) {
  if (delta == 0) throw std::invalid_argument("compact_projection_size: delta must be positive");
  const double ratio = static_cast<double>(n) / static_cast<double>(delta);
  const double raw = c * dimension * ratio * std::log2(std::max(ratio, 1.0));
  return std::max<std::size_t>(1, ceil_size(raw));
}

CompactProjection compact_projection(const SetSystem& sys, std::size_t delta, std::size_t k,
                                     double dimension, double c, std::uint64_t seed) {
  if (2 * k < delta) throw std::invalid_argument("compact_projection: requires k >= delta/2");
  if (sys.max_length() > k) throw std::invalid_argument("compact_projection: system is not k-shallow");
  if (!is_separated(sys, delta, Separation::Strict)) {
    throw std::invalid_argument("compact_projection: system is not delta-separated");
  }
  const std::size_t n = sys.ground_size();
  CompactProjection out;
  out.sample = capped_sample(n, compact_projection_size(n, delta, dimension, c), seed);
  out.injective = projection_size(sys, out.sample) == sys.size();
  const auto mask = out.sample.mask();
  for (const auto& v : sys) out.max_projected_length = std::max(out.max_projected_length, v.count_within(mask));
  out.length_threshold = 1.5 * static_cast<double>(k) * static_cast<double>(out.sample.size()) /
                         static_cast<double>(n);
  out.short_projection = static_cast<double>(out.max_projected_length) <= out.length_threshold + kSlack;
  return out;
}

double conditional_variance_sum(const SetSystem& sys) {
  if (sys.ground_size() > kMaxVarianceGround || sys.size() > kMaxVarianceVectors) {
    throw BudgetExceeded("conditional_variance_sum: system exceeds exact-computation limits");
  }
  if (sys.empty()) return 0.0;
  const double total = static_cast<double>(sys.size());
  double sum = 0.0;
  // For coordinate i, the conditioning event is the pattern on the other
  // coordinates; group vectors by that pattern.
  std::unordered_map<IncidenceVector, std::pair<std::size_t, std::size_t>, IncidenceVectorHash> groups;
  for (std::size_t i = 0; i < sys.ground_size(); ++i) {
    groups.clear();
    for (const auto& v : sys) {
      IncidenceVector rest = v;
      rest.set(i, false);
      auto& [count, ones] = groups[rest];
      ++count;
      ones += v.test(i) ? 1 : 0;
    }
    for (const auto& [_, g] : groups) {
      const double weight = static_cast<double>(g.first) / total;
      const double p = static_cast<double>(g.second) / static_cast<double>(g.first);
      sum += weight * p * (1.0 - p);
    }
  }
  return sum;
}

SuccessRate epsilon_net_success(const SetSystem& sys, const SampleParams& params,
                                std::optional<double> dimension, std::size_t trials,
                                std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("epsilon_net_success: trials must be positive");
  const double d = resolve_dimension(sys, dimension);
  SuccessRate out{trials, 0, epsilon_net_size(params, d), 0};
  out.sample_size = std::min(out.formula_size, sys.ground_size());
  std::vector<char> ok(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    const auto net = epsilon_net(sys, params, d, derive_seed(seed, "epsilon_net", t));
    ok[t] = verify_epsilon_net(sys, net, params.epsilon) ? 1 : 0;
  });
  out.successes = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  return out;
}

SuccessRate relative_approximation_success(const SetSystem& sys, const SampleParams& params,
                                           std::optional<double> dimension, std::size_t trials,
                                           std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("relative_approximation_success: trials must be positive");
  const double d = resolve_dimension(sys, dimension);
  SuccessRate out{trials, 0, relative_approximation_size(params, d), 0};
  out.sample_size = std::min(out.formula_size, sys.ground_size());
  std::vector<char> ok(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    const auto sample = relative_approximation(sys, params, d, derive_seed(seed, "relative", t));
    ok[t] = verify_relative_approximation(sys, sample, params.epsilon, params.eta) ? 1 : 0;
  });
  out.successes = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  return out;
}

SuccessRate compact_projection_success(const SetSystem& sys, std::size_t delta, std::size_t k,
                                       double dimension, double c, std::size_t trials,
                                       std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("compact_projection_success: trials must be positive");
  SuccessRate out{trials, 0, compact_projection_size(sys.ground_size(), delta, dimension, c), 0};
  out.sample_size = std::min(out.formula_size, sys.ground_size());
  std::vector<char> ok(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    ok[t] = compact_projection(sys, delta, k, dimension, c, derive_seed(seed, "compact", t)).both() ? 1 : 0;
  });
  out.successes = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  return out;
}

bool ProjectionCheck::holds(std::size_t d0, double sigmas) const {
  return lhs <= static_cast<double>(d0 + 1) * (mean + sigmas * se) + kSlack;
}

ProjectionCheck projection_expectation_check(const SetSystem& sys, std::size_t delta,
                                             std::size_t d0, std::size_t trials,
                                             std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("projection_expectation_check: trials must be positive");
  const std::size_t n = sys.ground_size();
  if (d0 + 1 < 64 && static_cast<double>(delta) >
                         static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(d0 + 1))) {
    throw std::invalid_argument("projection_expectation_check: requires delta <= n / 2^(d0+1)");
  }
  if (!is_separated(sys, delta, Separation::Strict)) {
    throw std::invalid_argument("projection_expectation_check: system is not delta-separated");
  }
  const std::size_t m = haussler_sample_size(d0, n, delta);
  if (m == 0 || m - 1 > n) throw std::invalid_argument("projection_expectation_check: m - 1 exceeds n");

  std::vector<double> sizes(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto sample = draw_sample(n, m - 1, derive_seed(seed, "projection", t));
    sizes[t] = static_cast<double>(projection_size(sys, sample));
  });
  const double mean = std::accumulate(sizes.begin(), sizes.end(), 0.0) / static_cast<double>(trials);
  double var = 0.0;
  for (double s : sizes) var += (s - mean) * (s - mean);
  var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;

  ProjectionCheck out;
  out.lhs = static_cast<double>(sys.size());
  out.mean = mean;
  out.se = std::sqrt(var / static_cast<double>(trials));
  out.rhs = static_cast<double>(d0 + 1) * mean;
  out.trials = trials;
  out.sample_size = m - 1;
  return out;
}

}  // namespace shallowpack
