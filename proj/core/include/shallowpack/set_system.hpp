#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shallowpack/bitvector.hpp"

namespace shallowpack {

/// Deduplicated collection of indicator vectors over a ground set of size n,
/// kept in canonical (lexicographic) order. Immutable after construction.
class SetSystem {
 public:
  SetSystem() = default;
  explicit SetSystem(std::size_t ground_size) : n_(ground_size) {}
  /// Sorts and deduplicates. Throws std::invalid_argument when a vector's
  /// width differs from `ground_size`.
  SetSystem(std::size_t ground_size, std::vector<IncidenceVector> vectors);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }

  const IncidenceVector& operator[](std::size_t i) const { return vectors_[i]; }
  std::span<const IncidenceVector> vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  bool contains(const IncidenceVector& v) const;
  /// Position of `v` in canonical order, or size() when absent.
  std::size_t index_of(const IncidenceVector& v) const;
  std::size_t max_length() const noexcept;
  /// The vectors at the given positions, as a new system.
  SetSystem subsystem(std::span<const std::size_t> positions) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<IncidenceVector> vectors_;
};

/// Strictly increasing subset of [0, n).
class IndexSample {
 public:
  IndexSample() = default;
  /// Throws std::invalid_argument unless `indices` is strictly increasing
  /// and bounded by n.
  IndexSample(std::size_t n, std::vector<std::size_t> indices);
  static IndexSample full(std::size_t n);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }

  /// Indicator of the sample as a width-n vector.
  IncidenceVector mask() const;

  friend bool operator==(const IndexSample&, const IndexSample&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> indices_;
};

/// v restricted to the coordinates of `sample`, as a width-|sample| vector.
IncidenceVector restrict_to(const IncidenceVector& v, const IndexSample& sample);

/// Deduplicated restriction of every vector onto `sample`.
SetSystem project(const SetSystem& sys, const IndexSample& sample);

/// Number of distinct restrictions onto `sample`; same as project(...).size()
/// without materializing the projected system.
std::size_t projection_size(const SetSystem& sys, const IndexSample& sample);

/// ρ(u, v) > δ.
bool separated_strict(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta);
/// ρ(u, v) ≥ δ. The lower-bound grid construction is separated only in this sense.
bool separated_nonstrict(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta);

enum class Separation { Strict, NonStrict };

bool separated(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta,
               Separation mode);

/// Exhaustive pairwise check.
bool is_separated(const SetSystem& sys, std::size_t delta, Separation mode);

/// Smallest pairwise distance; 0 when fewer than two vectors.
std::size_t min_pairwise_distance(const SetSystem& sys);

}  // namespace shallowpack
