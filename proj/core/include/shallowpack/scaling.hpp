#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shallowpack/combinatorics.hpp"
#include "shallowpack/fit.hpp"
#include "shallowpack/point_set.hpp"
#include "shallowpack/set_system.hpp"

namespace shallowpack {

enum class GeneratorKind { Halfspaces, Balls, Slabs, RectangleGrid };

/// Where the random points of a geometric generator are drawn from.
enum class PointDomain { Cube, Sphere };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Halfspaces;
  /// Point dimension; ignored by the rectangle grid.
  std::size_t dim = 2;
  PointDomain domain = PointDomain::Cube;

  /// "halfplanes", "halfspaces3d", "balls2d", "slabs2d", "grid", with a
  /// "-sphere" suffix for the sphere domain.
  std::string label() const;
  CsParams params() const;
  /// The grid is only separated in the non-strict sense.
  Separation separation() const;
};

/// Accepts every label() form, plus "halfspaces", "balls" and "slabs" with
/// the given dimension (and optional "-sphere" suffix). Throws
/// std::invalid_argument on unknown names.
GeneratorSpec parse_generator(std::string_view name, std::size_t dim = 2);

/// Points for a geometric generator: n uniform points in [0,1)^dim or on the
/// unit sphere, from a seed derived from (seed, n).
PointSet generator_points(const GeneratorSpec& gen, std::size_t n, std::uint64_t seed);

/// Builds the generator's system over n ground elements from
/// generator_points; the grid instead uses delta as its stack depth.
SetSystem generate_system(const GeneratorSpec& gen, std::size_t n, std::size_t delta,
                          std::uint64_t seed);

enum class SweepVar { N, K, Delta };

std::string_view sweep_name(SweepVar var);
SweepVar parse_sweep(std::string_view name);

struct ScalingSpec {
  GeneratorSpec generator;
  SweepVar sweep = SweepVar::Delta;
  /// Values taken by the swept variable; the other two come from n/k/delta.
  std::vector<std::size_t> values;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  /// Greedy restarts per configuration.
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

struct ScalingRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::size_t trials = 0;
  /// Vectors of length <= k.
  std::size_t shallow_size = 0;
  std::size_t packing_size = 0;
  double bound = 0.0;
};

struct ScalingReport {
  std::string generator;
  SweepVar sweep = SweepVar::Delta;
  std::vector<ScalingRow> rows;
  /// log-log fit of packing size against the swept variable.
  LineFit fit;
  /// Exponent of the swept variable in bound_shallow_packing.
  double predicted_slope = 0.0;
};

/// Throws std::invalid_argument unless the sweep has at least three distinct
/// values and every configuration satisfies 1 <= delta <= n, k <= n and
/// 2k >= delta (plus the grid's divisibility rules).
void validate(const ScalingSpec& spec);

/// Packing size per configuration is the best of `trials` greedy restarts on
/// the k-shallow subsystem.
ScalingReport scaling_experiment(const ScalingSpec& spec);

}  // namespace shallowpack
