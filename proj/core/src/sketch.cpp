#include "shallowpack/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "shallowpack/parallel.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/sampling.hpp"

namespace shallowpack {
namespace {

// Coordinate-descent NNLS on the normal equations.
std::vector<double> nnls(const std::vector<std::vector<double>>& rows, const std::vector<double>& target) {
  const std::size_t k = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<double>> gram(k, std::vector<double>(k, 0.0));
  std::vector<double> rhs(k, 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      rhs[i] += rows[r][i] * target[r];
      for (std::size_t j = 0; j < k; ++j) gram[i][j] += rows[r][i] * rows[r][j];
    }
  }
  std::vector<double> w(k, 0.0);
  for (int sweep = 0; sweep < 500; ++sweep) {
    double change = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (gram[i][i] <= 0.0) continue;
      double g = rhs[i];
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) g -= gram[i][j] * w[j];
      }
      const double next = std::max(0.0, g / gram[i][i]);
      change = std::max(change, std::abs(next - w[i]));
      w[i] = next;
    }
    if (change < 1e-12) break;
  }
  return w;
}

}  // namespace

HammingSketch::HammingSketch(std::vector<IndexSample> subsets, std::size_t sets,
                             std::vector<std::uint32_t> ids)
    : subsets_(std::move(subsets)), sets_(sets), ids_(std::move(ids)) {
  if (ids_.size() != sets_ * subsets_.size()) throw std::invalid_argument("HammingSketch: id table size mismatch");
}

std::span<const std::uint32_t> HammingSketch::ids(std::size_t s) const {
  if (s >= sets_) throw std::out_of_range("HammingSketch::ids: set index out of range");
  return std::span<const std::uint32_t>(ids_).subspan(s * mu(), mu());
}

std::size_t HammingSketch::distance(std::size_t a, std::size_t b) const {
  const auto x = ids(a);
  const auto y = ids(b);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < x.size(); ++i) diff += x[i] != y[i] ? 1 : 0;
  return diff;
}

std::vector<std::size_t> geometric_schedule(std::size_t n) {
  if (n == 0) throw std::invalid_argument("geometric_schedule: n must be positive");
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s < n; s *= 2) sizes.push_back(s);
  sizes.push_back(n);
  return sizes;
}

HammingSketch build_sketch(const SetSystem& sys, std::size_t mu,
                           std::span<const std::size_t> schedule, std::uint64_t seed) {
  if (mu == 0) throw std::invalid_argument("build_sketch: mu must be positive");
  if (schedule.empty()) throw std::invalid_argument("build_sketch: empty size schedule");
  const std::size_t n = sys.ground_size();
  for (std::size_t s : schedule) {
    if (s > n) throw std::invalid_argument("build_sketch: subset size exceeds n");
  }
  std::vector<IndexSample> subsets(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    subsets[i] = draw_sample(n, schedule[i % schedule.size()], derive_seed(seed, "sketch", i));
  }
  const std::size_t sets = sys.size();
  std::vector<std::uint32_t> ids(sets * mu);
  parallel_for(mu, [&](std::size_t i) {
    std::unordered_map<IncidenceVector, std::uint32_t, IncidenceVectorHash> dictionary;
    const auto mask = subsets[i].mask();
    for (std::size_t s = 0; s < sets; ++s) {
      const auto next = static_cast<std::uint32_t>(dictionary.size());
      ids[s * mu + i] = dictionary.try_emplace(sys[s] & mask, next).first->second;
    }
  });
  return HammingSketch(std::move(subsets), sets, std::move(ids));
}

SpanningTree approx_mst(const SetSystem& sys, const HammingSketch& sketch, double eta,
                        std::uint64_t seed) {
  if (sketch.sets() != sys.size()) throw std::invalid_argument("approx_mst: sketch was built for another system");
  if (!(eta > 0.0)) throw std::invalid_argument("approx_mst: eta must be positive");
  const std::size_t m = sys.size();
  if (m <= 1) return exact_mst(sys);

  // Size classes of the sketch coordinates.
  std::map<std::size_t, std::size_t> class_of_size;
  for (const auto& p : sketch.subsets()) class_of_size.emplace(p.size(), 0);
  std::size_t next_class = 0;
  for (auto& [_, c] : class_of_size) c = next_class++;
  std::vector<std::size_t> coord_class(sketch.mu());
  for (std::size_t i = 0; i < sketch.mu(); ++i) coord_class[i] = class_of_size[sketch.subsets()[i].size()];
  const std::size_t classes = next_class;

  auto features = [&](std::size_t a, std::size_t b) {
    std::vector<double> f(classes, 0.0);
    const auto x = sketch.ids(a);
    const auto y = sketch.ids(b);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) f[coord_class[i]] += 1.0;
    }
    return f;
  };

  const std::uint64_t all_pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  const auto wanted = static_cast<std::uint64_t>(std::ceil(8.0 / (eta * eta)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (wanted >= all_pairs) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    }
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < wanted; ++i) {
      const auto a = static_cast<std::size_t>(rng.below(m));
      auto b = static_cast<std::size_t>(rng.below(m - 1));
      if (b >= a) ++b;
      pairs.emplace_back(a, b);
    }
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> target;
  for (const auto& [a, b] : pairs) {
    rows.push_back(features(a, b));
    target.push_back(static_cast<double>(distance(sys[a], sys[b])));
  }
  const bool varied = std::any_of(target.begin(), target.end(), [&](double t) { return t != target.front(); });
  const auto weights = nnls(rows, target);
  const bool any_weight = std::any_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
  if (!varied || !any_weight) return exact_mst(sys);

  std::vector<double> coord_weight(sketch.mu());
  for (std::size_t i = 0; i < sketch.mu(); ++i) coord_weight[i] = weights[coord_class[i]];
  return prim_tree(sys, [&](std::size_t a, std::size_t b) {
    const auto x = sketch.ids(a);
    const auto y = sketch.ids(b);
    double est = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) est += coord_weight[i];
    }
    return est;
  });
}

}  // namespace shallowpack
