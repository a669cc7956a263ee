#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace shallowpack {

/// n points in R^dim, stored row-major. Coordinates are always finite.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  /// `coords.size()` must be a multiple of `dim`. Throws std::invalid_argument
  /// for dim == 0, ragged input or non-finite coordinates.
  PointSet(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coordinates() const noexcept { return coords_; }

  void push_back(std::span<const double> point);

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// n points uniform in [0,1)^dim, deterministic given seed.
PointSet random_points(std::size_t n, std::size_t dim, std::uint64_t seed);

/// n points uniform on the unit sphere S^(dim-1), so in convex position.
/// Requires dim >= 2.
PointSet random_points_on_sphere(std::size_t n, std::size_t dim, std::uint64_t seed);

/// Gaussian clusters: `clusters` centres uniform in the unit cube, each point
/// offset by N(0, spread^2) per coordinate.
PointSet clustered_points(std::size_t n, std::size_t dim, std::size_t clusters, double spread,
                          std::uint64_t seed);

/// True when two points share all coordinates exactly.
bool has_duplicate_points(const PointSet& pts);

double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace shallowpack
