#include "shallowpack/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "shallowpack/rng.hpp"

namespace shallowpack {

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("PointSet: dim must be positive");
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("PointSet: dim must be positive");
  if (coords_.size() % dim_ != 0) throw std::invalid_argument("PointSet: ragged coordinates");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("PointSet: non-finite coordinate");
  }
}

void PointSet::push_back(std::span<const double> point) {
  if (point.size() != dim_) throw std::invalid_argument("PointSet: point dimension mismatch");
  for (double c : point) {
    if (!std::isfinite(c)) throw std::invalid_argument("PointSet: non-finite coordinate");
  }
  coords_.insert(coords_.end(), point.begin(), point.end());
}

PointSet random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = rng.uniform();
  return PointSet(dim, std::move(coords));
}

PointSet random_points_on_sphere(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_points_on_sphere: requires dim >= 2");
  Rng rng(seed);
  std::vector<double> coords;
  coords.reserve(n * dim);
  std::vector<double> p(dim);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    while (norm < 1e-12) {
      norm = 0.0;
      for (double& c : p) {
        c = rng.normal();
        norm += c * c;
      }
    }
    norm = std::sqrt(norm);
    for (double c : p) coords.push_back(c / norm);
  }
  return PointSet(dim, std::move(coords));
}

PointSet clustered_points(std::size_t n, std::size_t dim, std::size_t clusters, double spread,
                          std::uint64_t seed) {
  if (clusters == 0) throw std::invalid_argument("clustered_points: need at least one cluster");
  Rng rng(seed);
  std::vector<double> centres(clusters * dim);
  for (double& c : centres) c = rng.uniform();
  std::vector<double> coords(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = static_cast<std::size_t>(rng.below(clusters));
    for (std::size_t k = 0; k < dim; ++k) {
      coords[i * dim + k] = centres[c * dim + k] + spread * rng.normal();
    }
  }
  return PointSet(dim, std::move(coords));
}

bool has_duplicate_points(const PointSet& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(pts[a].begin(), pts[a].end(), pts[b].begin(),
                                        pts[b].end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (std::equal(pts[order[i]].begin(), pts[order[i]].end(), pts[order[i - 1]].begin())) {
      return true;
    }
  }
  return false;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

}  // namespace shallowpack
