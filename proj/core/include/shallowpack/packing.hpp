#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shallowpack/combinatorics.hpp"
#include "shallowpack/set_system.hpp"

namespace shallowpack {

/// A δ-separated subcollection, stored as positions into the system it was
/// computed from.
struct Packing {
  /// Strictly increasing positions into the source system.
  std::vector<std::size_t> members;
  std::size_t delta = 0;
  Separation mode = Separation::Strict;

  std::size_t size() const noexcept { return members.size(); }
  SetSystem extract(const SetSystem& source) const { return source.subsystem(members); }
};

/// Maximal δ-separated subset found by a single greedy scan. Seed 0 scans in
/// canonical order; any other seed scans a seeded permutation of it.
Packing greedy_packing(const SetSystem& sys, std::size_t delta, Separation mode,
                       std::uint64_t seed = 0);

/// Best of `restarts` greedy scans with seeds derived from `seed`; restart 0
/// uses canonical order. Runs restarts in parallel; ties go to the lowest
/// restart index.
Packing greedy_packing_restarts(const SetSystem& sys, std::size_t delta, Separation mode,
                                std::size_t restarts, std::uint64_t seed);

/// Largest system accepted by max_packing_bruteforce.
inline constexpr std::size_t kMaxBruteforcePacking = 64;

/// Maximum δ-separated subset (maximum clique of the separation graph).
/// Throws BudgetExceeded when |sys| > kMaxBruteforcePacking.
Packing max_packing_bruteforce(const SetSystem& sys, std::size_t delta, Separation mode);

/// Vectors of length at most k.
SetSystem shallow_filter(const SetSystem& sys, std::size_t k);

/// (n/δ)^d. Requires 1 <= δ <= n.
double bound_packing(std::size_t n, std::size_t delta, const CsParams& params);

/// n^d1 k^(d-d1) / δ^d. Requires 2k >= δ and 1 <= δ <= n.
double bound_shallow_packing(std::size_t n, std::size_t k, std::size_t delta,
                             const CsParams& params);

}  // namespace shallowpack
