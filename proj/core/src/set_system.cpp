#include "shallowpack/set_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace shallowpack {

SetSystem::SetSystem(std::size_t ground_size, std::vector<IncidenceVector> vectors)
    : n_(ground_size), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.width() != n_) throw std::invalid_argument("SetSystem: vector width differs from n");
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool SetSystem::contains(const IncidenceVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::size_t SetSystem::index_of(const IncidenceVector& v) const {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) return vectors_.size();
  return static_cast<std::size_t>(it - vectors_.begin());
}

std::size_t SetSystem::max_length() const noexcept {
  std::size_t best = 0;
  for (const auto& v : vectors_) best = std::max(best, v.length());
  return best;
}

SetSystem SetSystem::subsystem(std::span<const std::size_t> positions) const {
  std::vector<IncidenceVector> picked;
  picked.reserve(positions.size());
  for (std::size_t p : positions) picked.push_back(vectors_.at(p));
  return SetSystem(n_, std::move(picked));
}

IndexSample::IndexSample(std::size_t n, std::vector<std::size_t> indices)
    : n_(n), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= n_) throw std::invalid_argument("IndexSample: index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("IndexSample: indices must be strictly increasing");
    }
  }
}

IndexSample IndexSample::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return IndexSample(n, std::move(all));
}

IncidenceVector IndexSample::mask() const { return IncidenceVector::from_indices(n_, indices_); }

IncidenceVector restrict_to(const IncidenceVector& v, const IndexSample& sample) {
  if (v.width() != sample.ground_size()) {
    throw std::invalid_argument("restrict_to: sample ground size differs from vector width");
  }
  IncidenceVector out(sample.size());
  const auto idx = sample.indices();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (v.test(idx[j])) out.set(j);
  }
  return out;
}

SetSystem project(const SetSystem& sys, const IndexSample& sample) {
  if (sys.ground_size() != sample.ground_size()) {
    throw std::invalid_argument("project: sample ground size differs from system");
  }
  std::vector<IncidenceVector> out;
  out.reserve(sys.size());
  for (const auto& v : sys) out.push_back(restrict_to(v, sample));
  return SetSystem(sample.size(), std::move(out));
}

std::size_t projection_size(const SetSystem& sys, const IndexSample& sample) {
  if (sys.ground_size() != sample.ground_size()) {
    throw std::invalid_argument("projection_size: sample ground size differs from system");
  }
  // Masking preserves distinctness of restrictions, so no bit gathering is needed.
  const IncidenceVector mask = sample.mask();
  std::unordered_set<IncidenceVector, IncidenceVectorHash> seen;
  seen.reserve(sys.size() * 2);
  for (const auto& v : sys) seen.insert(v & mask);
  return seen.size();
}

bool separated_strict(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta) {
  return distance(u, v) > delta;
}

bool separated_nonstrict(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta) {
  return distance(u, v) >= delta;
}

bool separated(const IncidenceVector& u, const IncidenceVector& v, std::size_t delta,
               Separation mode) {
  return mode == Separation::Strict ? separated_strict(u, v, delta)
                                    : separated_nonstrict(u, v, delta);
}

bool is_separated(const SetSystem& sys, std::size_t delta, Separation mode) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      if (!separated(sys[i], sys[j], delta, mode)) return false;
    }
  }
  return true;
}

std::size_t min_pairwise_distance(const SetSystem& sys) {
  if (sys.size() < 2) return 0;
  std::size_t best = sys.ground_size() + 1;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) best = std::min(best, distance(sys[i], sys[j]));
  }
  return best;
}

}  // namespace shallowpack
