#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace shallowpack {

/// Seeded 64-bit generator. Bounded integers and reals are derived here rather
/// than through <random> distributions so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed-splitting rule used by every randomized experiment:
/// splitmix64(seed ^ fnv1a(label) ^ splitmix64(index)).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace shallowpack
