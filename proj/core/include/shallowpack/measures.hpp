#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "shallowpack/point_set.hpp"
#include "shallowpack/set_system.hpp"
#include "shallowpack/spanning.hpp"

namespace shallowpack {

enum class Measure { Diameter, SebRadius, BboxVolume };

std::string_view measure_name(Measure m);
/// "diameter", "seb" or "bbox".
Measure parse_measure(std::string_view name);

/// Largest pairwise Euclidean distance; 0 for fewer than two points.
double measure_diameter(const PointSet& pts);

/// Radius of the smallest enclosing ball (move-to-front Welzl). Throws
/// std::invalid_argument for dim > 3. 0 for an empty set.
double measure_seb_radius(const PointSet& pts);

/// Product of the coordinate extents; 0 for an empty set.
double measure_bbox_volume(const PointSet& pts);

double evaluate_measure(Measure m, const PointSet& pts);

/// Multiset of ground points with an update counter. Queries see the active
/// points in increasing index order, so they reproduce a from-scratch
/// evaluation exactly.
class DynamicPointStore {
 public:
  explicit DynamicPointStore(const PointSet& ground);

  void insert(std::size_t index);
  /// Throws std::logic_error when the point is not present.
  void erase(std::size_t index);

  std::uint64_t updates() const noexcept { return updates_; }
  std::size_t active() const noexcept { return active_; }
  std::size_t multiplicity(std::size_t index) const { return count_.at(index); }

  /// Active points, each repeated by multiplicity, in index order.
  PointSet snapshot() const;
  /// Same as evaluate_measure(m, snapshot()); the box volume comes from the
  /// maintained coordinate multisets.
  double query(Measure m) const;

 private:
  void check(std::size_t index) const;

  const PointSet* ground_;
  std::vector<std::uint32_t> count_;
  std::vector<std::multiset<double>> extents_;
  std::size_t active_ = 0;
  std::uint64_t updates_ = 0;
};

struct MeasureReport {
  Measure measure = Measure::Diameter;
  /// Per set, in the system's canonical order.
  std::vector<double> values;
  std::vector<std::size_t> set_sizes;
  std::uint64_t updates = 0;
  /// 2 * Σ|S|.
  std::uint64_t brute_force_updates = 0;
  /// Sets in order of first arrival.
  std::vector<std::size_t> walk;
  std::size_t root = 0;
};

/// Position of a longest set (smallest position among ties).
std::size_t longest_set(const SetSystem& sys);

/// Loads the root set, then walks the tree by Euler tour (children in index
/// order), applying the symmetric difference at every step and measuring at
/// each first arrival. The update count is |S_root| + 2 * total_conflict.
/// Throws std::invalid_argument when the tree does not span sys or the ground
/// size differs from the number of points.
MeasureReport traverse_and_measure(const SetSystem& sys, const SpanningTree& tree,
                                   const PointSet& pts, Measure measure,
                                   std::optional<std::size_t> root = std::nullopt);

/// Every set loaded from an empty store, measured and unloaded.
MeasureReport brute_force_measure(const SetSystem& sys, const PointSet& pts, Measure measure);

}  // namespace shallowpack
