#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shallowpack {

/// Indicator vector over the ground set [0, width). Bit i lives in word i / 64
/// at position i % 64; bits past `width` are always zero.
///
/// Ordering is lexicographic on the 0/1 string read from index 0, which is the
/// canonical order used by SetSystem.
class IncidenceVector {
 public:
  IncidenceVector() = default;
  explicit IncidenceVector(std::size_t width);

  /// Parses a string of '0'/'1' characters; index 0 is the first character.
  static IncidenceVector from_string(std::string_view bits);
  static IncidenceVector from_indices(std::size_t width, std::span<const std::size_t> indices);

  std::size_t width() const noexcept { return width_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void reset() noexcept;

  /// L1 norm: number of set bits.
  std::size_t length() const noexcept;
  /// |this ∩ mask| for a mask of equal width.
  std::size_t count_within(const IncidenceVector& mask) const;

  std::vector<std::size_t> indices() const;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  IncidenceVector& operator|=(const IncidenceVector& other);
  IncidenceVector& operator&=(const IncidenceVector& other);
  IncidenceVector& operator^=(const IncidenceVector& other);
  /// Clears every bit that is set in `other`.
  IncidenceVector& subtract(const IncidenceVector& other);
  IncidenceVector complement() const;

  friend bool operator==(const IncidenceVector&, const IncidenceVector&) = default;
  friend std::strong_ordering operator<=>(const IncidenceVector& a, const IncidenceVector& b);

  std::size_t hash() const noexcept;

 private:
  void require_same_width(const IncidenceVector& other) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

inline IncidenceVector operator^(IncidenceVector a, const IncidenceVector& b) { return a ^= b; }
inline IncidenceVector operator|(IncidenceVector a, const IncidenceVector& b) { return a |= b; }
inline IncidenceVector operator&(IncidenceVector a, const IncidenceVector& b) { return a &= b; }

/// Symmetric-difference distance popcount(u XOR v). Throws std::invalid_argument
/// on a width mismatch.
std::size_t distance(const IncidenceVector& u, const IncidenceVector& v);

struct IncidenceVectorHash {
  std::size_t operator()(const IncidenceVector& v) const noexcept { return v.hash(); }
};

}  // namespace shallowpack
