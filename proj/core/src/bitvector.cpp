#include "shallowpack/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace shallowpack {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

}  // namespace

IncidenceVector::IncidenceVector(std::size_t width) : width_(width), words_(word_count(width), 0) {}

IncidenceVector IncidenceVector::from_string(std::string_view bits) {
  IncidenceVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("incidence string may only contain '0' and '1'");
    }
  }
  return v;
}

IncidenceVector IncidenceVector::from_indices(std::size_t width,
                                              std::span<const std::size_t> indices) {
  IncidenceVector v(width);
  for (std::size_t i : indices) v.set(i);
  return v;
}

bool IncidenceVector::test(std::size_t i) const {
  if (i >= width_) throw std::out_of_range("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void IncidenceVector::set(std::size_t i, bool value) {
  if (i >= width_) throw std::out_of_range("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

void IncidenceVector::reset() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t IncidenceVector::length() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t IncidenceVector::count_within(const IncidenceVector& mask) const {
  require_same_width(mask);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & mask.words_[i]));
  }
  return total;
}

std::vector<std::size_t> IncidenceVector::indices() const {
  std::vector<std::size_t> out;
  out.reserve(length());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string IncidenceVector::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i : indices()) s[i] = '1';
  return s;
}

IncidenceVector& IncidenceVector::operator|=(const IncidenceVector& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

IncidenceVector& IncidenceVector::operator&=(const IncidenceVector& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

IncidenceVector& IncidenceVector::operator^=(const IncidenceVector& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

IncidenceVector& IncidenceVector::subtract(const IncidenceVector& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

IncidenceVector IncidenceVector::complement() const {
  IncidenceVector out(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (const std::size_t tail = width_ % kWordBits; tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

std::strong_ordering operator<=>(const IncidenceVector& a, const IncidenceVector& b) {
  if (a.width_ != b.width_) return a.width_ <=> b.width_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      // The vector holding a 0 at the first differing index sorts first.
      return (a.words_[i] & lowest) == 0 ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t IncidenceVector::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void IncidenceVector::require_same_width(const IncidenceVector& other) const {
  if (width_ != other.width_) throw std::invalid_argument("incidence vector width mismatch");
}

std::size_t distance(const IncidenceVector& u, const IncidenceVector& v) {
  if (u.width() != v.width()) throw std::invalid_argument("distance: width mismatch");
  const auto a = u.words();
  const auto b = v.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  }
  return total;
}

}  // namespace shallowpack
