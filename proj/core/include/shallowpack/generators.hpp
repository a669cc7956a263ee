#pragma once

#include <cstddef>

#include "shallowpack/point_set.hpp"
#include "shallowpack/set_system.hpp"

namespace shallowpack {

/// Highest point dimension accepted by the geometric generators.
inline constexpr std::size_t kMaxGeneratorDim = 3;

// Geometric range spaces over a point set, enumerated exactly. Duplicate
// points are allowed (they always fall in the same ranges), and so are
// degenerate configurations: the points are first reduced to their affine
// hull, and every range is realized by a generic direction or centre.
// All three throw std::invalid_argument for an empty set or dim > 3.

/// Every distinct subset {x : <a, x> <= b}, including the empty and full sets.
SetSystem build_halfspaces(const PointSet& pts);

/// Every distinct subset {x : |x - c| <= r}, plus the halfspace subsets as
/// limiting balls.
SetSystem build_balls(const PointSet& pts);

/// Every distinct subset {x : b1 <= <a, x> <= b2}. Contains build_halfspaces.
SetSystem build_slabs(const PointSet& pts);

/// Dual system of an (n/δ) x (n/δ) grid of axis-parallel rectangles, each
/// repeated δ/2 times, restricted to the depth-δ cells. Ground-set layout:
/// vertical stacks left to right (each stack's δ/2 copies contiguous), then
/// horizontal stacks top to bottom. Requires δ even, δ >= 2 and δ | n.
SetSystem build_rectangle_grid_dual(std::size_t n, std::size_t delta);

/// Exhaustive verification of build_rectangle_grid_dual(n, δ).
struct GridCheck {
  std::size_t n = 0;
  std::size_t delta = 0;
  /// (n/δ)^2.
  std::size_t expected_cells = 0;
  std::size_t cells = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::size_t min_distance = 0;

  /// Right cell count, every length equal to δ, min distance >= δ.
  bool ok() const;
};

GridCheck check_rectangle_grid(std::size_t n, std::size_t delta);

}  // namespace shallowpack
