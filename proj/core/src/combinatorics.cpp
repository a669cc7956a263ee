#include "shallowpack/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "shallowpack/errors.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/sampling.hpp"

namespace shallowpack {
namespace {

std::vector<std::uint64_t> as_words(const SetSystem& sys) {
  std::vector<std::uint64_t> out;
  out.reserve(sys.size());
  for (const auto& v : sys) out.push_back(v.words().empty() ? 0 : v.words()[0]);
  return out;
}

void require_budget(const SetSystem& sys, std::size_t m) {
  if (sys.ground_size() > kMaxExactGround) {
    throw BudgetExceeded("exact enumeration limited to n <= " + std::to_string(kMaxExactGround));
  }
  if (binomial(sys.ground_size(), m) > kSubsetBudget) {
    throw BudgetExceeded("C(n, m) exceeds the subset budget");
  }
}

std::size_t distinct_masked(const std::vector<std::uint64_t>& words, std::uint64_t mask,
                            std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (auto w : words) scratch.push_back(w & mask);
  std::sort(scratch.begin(), scratch.end());
  return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

// Calls fn(mask) for every m-subset of [n] (Gosper's hack); stops early when
// fn returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t m, Fn fn) {
  if (m > n) return false;
  if (m == 0) return fn(std::uint64_t{0});
  std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (fn(mask)) return true;
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return false;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  const boost::multiprecision::cpp_int cap = UINT64_MAX;
  boost::multiprecision::cpp_int acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

std::size_t shatter_function_exact(const SetSystem& sys, std::size_t m) {
  if (m > sys.ground_size()) throw std::invalid_argument("shatter_function_exact: m > n");
  require_budget(sys, m);
  const auto words = as_words(sys);
  std::vector<std::uint64_t> scratch;
  std::size_t best = 0;
  for_each_subset(sys.ground_size(), m, [&](std::uint64_t mask) {
    best = std::max(best, distinct_masked(words, mask, scratch));
    return best == sys.size();
  });
  return best;
}

std::size_t vc_dimension_exact(const SetSystem& sys) {
  if (sys.ground_size() > kMaxExactGround) {
    throw BudgetExceeded("exact enumeration limited to n <= " + std::to_string(kMaxExactGround));
  }
  const auto words = as_words(sys);
  std::vector<std::uint64_t> scratch;
  std::size_t vc = 0;
  // Shattering is hereditary, so the first size with no shattered subset ends
  // the search; 2^k <= |V| bounds it from above.
  for (std::size_t k = 1; k <= sys.ground_size() && (std::size_t{1} << k) <= sys.size(); ++k) {
    require_budget(sys, k);
    const bool found = for_each_subset(sys.ground_size(), k, [&](std::uint64_t mask) {
      return distinct_masked(words, mask, scratch) == (std::size_t{1} << k);
    });
    if (!found) break;
    vc = k;
  }
  return vc;
}

ShatterProfile cs_profile(const SetSystem& sys, std::span<const std::size_t> sample_sizes,
                          std::span<const std::size_t> length_caps, std::size_t trials,
                          std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("cs_profile: trials must be positive");
  for (std::size_t m : sample_sizes) {
    if (m > sys.ground_size()) throw std::invalid_argument("cs_profile: sample size exceeds n");
  }
  ShatterProfile profile;
  profile.trials = trials;
  for (std::size_t m : sample_sizes) {
    for (std::size_t k : length_caps) profile.entries[{m, k}] = 0;
  }
  std::unordered_map<IncidenceVector, std::size_t, IncidenceVectorHash> lengths;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t m : sample_sizes) {
      const auto sample = draw_sample(sys.ground_size(), m, derive_seed(derive_seed(seed, "cs_profile", m), "trial", t));
      const auto mask = sample.mask();
      lengths.clear();
      for (const auto& v : sys) {
        auto restricted = v & mask;
        const std::size_t len = restricted.length();
        lengths.emplace(std::move(restricted), len);
      }
      for (std::size_t k : length_caps) {
        std::size_t count = 0;
        for (const auto& [_, len] : lengths) count += len <= k ? 1 : 0;
        auto& slot = profile.entries[{m, k}];
        slot = std::max(slot, count);
      }
    }
  }
  return profile;
}

void CsParams::validate() const {
  if (!(d1 >= 1.0 && d1 <= d)) throw std::invalid_argument("CsParams: requires 1 <= d1 <= d");
  if (d0 < 1) throw std::invalid_argument("CsParams: requires d0 >= 1");
}

CsParams CsParams::halfspaces(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("CsParams::halfspaces: requires dim >= 2");
  return {static_cast<double>(dim), static_cast<double>(dim / 2), dim + 1};
}

CsParams CsParams::balls(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("CsParams::balls: requires dim >= 1");
  return {static_cast<double>(dim + 1), static_cast<double>((dim + 1) / 2), dim + 1};
}

CsParams CsParams::slabs(std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("CsParams::slabs: requires dim >= 1");
  return {static_cast<double>(dim + 1), static_cast<double>(dim), 2 * dim + 2};
}

boost::rational<std::int64_t> unit_distance_density(const SetSystem& sys) {
  if (sys.empty()) throw std::invalid_argument("unit_distance_density: empty system");
  std::int64_t edges = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      if (distance(sys[i], sys[j]) == 1) ++edges;
    }
  }
  return {edges, static_cast<std::int64_t>(sys.size())};
}

}  // namespace shallowpack
