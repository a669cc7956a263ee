#pragma once

// Cell sampling for hyperplane arrangements in R^1..R^3. Internal to the
// geometric generators.

#include <array>
#include <cstddef>
#include <vector>

namespace shallowpack::detail {

using Vec3 = std::array<double, 3>;

/// {x : <normal, x> = offset}; only the first `dim` components are used.
struct Hyperplane {
  Vec3 normal{};
  double offset = 0.0;
};

struct CellSample {
  Vec3 point{};
  /// Lower bound on the distance from `point` to every hyperplane.
  double clearance = 0.0;
};

/// At least one point strictly inside every full-dimensional cell of the
/// arrangement (cells may be hit more than once). dim in {1, 2, 3}.
std::vector<CellSample> sample_cells(const std::vector<Hyperplane>& planes, int dim);

/// Directions a in R^dim, one or more per cell of the central arrangement
/// {a : <a, w> = 0} over the given normals, up to sign: every cell C has a
/// sample in C or in -C.
std::vector<Vec3> sample_directions(const std::vector<Vec3>& normals, int dim);

/// Orthonormal frame of the affine hull of `points` (rows use the first
/// `dim` components). Differences with residual norm below `tol` are treated
/// as lying in the hull.
struct AffineFrame {
  Vec3 origin{};
  std::vector<Vec3> basis;
};
AffineFrame affine_hull(const std::vector<Vec3>& points, int dim, double tol);

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace shallowpack::detail
