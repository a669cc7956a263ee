#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "shallowpack/set_system.hpp"
#include "shallowpack/spanning.hpp"

namespace shallowpack {

/// Embedding of a set system into Hamming space: coordinate i holds an
/// integer ID of each vector's restriction to the random index subset P_i.
class HammingSketch {
 public:
  HammingSketch() = default;
  HammingSketch(std::vector<IndexSample> subsets, std::size_t sets, std::vector<std::uint32_t> ids);

  std::size_t mu() const noexcept { return subsets_.size(); }
  std::size_t sets() const noexcept { return sets_; }
  std::span<const IndexSample> subsets() const noexcept { return subsets_; }
  /// The mu IDs of set s.
  std::span<const std::uint32_t> ids(std::size_t s) const;

  /// Number of coordinates where the IDs of a and b differ.
  std::size_t distance(std::size_t a, std::size_t b) const;

 private:
  std::vector<IndexSample> subsets_;
  std::size_t sets_ = 0;
  std::vector<std::uint32_t> ids_;
};

/// 1, 2, 4, ... up to n, ending with n itself.
std::vector<std::size_t> geometric_schedule(std::size_t n);

/// Draws P_i with size schedule[i % schedule.size()]. IDs number the distinct
/// restrictions at each coordinate in order of first appearance along the
/// canonical order of sys. Requires mu >= 1 and a non-empty schedule of sizes
/// <= n.
HammingSketch build_sketch(const SetSystem& sys, std::size_t mu,
                           std::span<const std::size_t> schedule, std::uint64_t seed);

/// MST under sketch distances rescaled by per-size-class weights. The weights
/// are a non-negative least-squares fit of exact distance against the
/// per-class mismatch counts over min(all, ceil(8 / eta^2)) random pairs.
/// Edge weights of the result are exact distances. Falls back to exact_mst
/// when the calibration is degenerate.
SpanningTree approx_mst(const SetSystem& sys, const HammingSketch& sketch, double eta,
                        std::uint64_t seed);

}  // namespace shallowpack
