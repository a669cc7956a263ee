#include "shallowpack/packing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "shallowpack/errors.hpp"
#include "shallowpack/parallel.hpp"
#include "shallowpack/rng.hpp"

namespace shallowpack {
namespace {

std::vector<std::size_t> scan_order(std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (seed == 0) return order;
  Rng rng(seed);
  for (std::size_t i = count; i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  return order;
}

// Vectors whose lengths differ by more than this are separated without
// looking at their bits.
std::size_t length_window(std::size_t delta, Separation mode) {
  return mode == Separation::Strict ? delta : (delta == 0 ? 0 : delta - 1);
}

using Mask = std::uint64_t;

std::size_t bits(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

// Tomita-style maximum clique with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adjacency) : adj_(std::move(adjacency)) {}

  Mask run() {
    const std::size_t n = adj_.size();
    Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    expand(0, all);
    return best_;
  }

 private:
  void expand(Mask clique, Mask candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (bits(clique) + colour[i] <= bits(best_)) return;
      const std::size_t v = order[i];
      const Mask next_clique = clique | (Mask{1} << v);
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        if (bits(next_clique) > bits(best_)) best_ = next_clique;
      } else {
        expand(next_clique, next);
      }
      candidates &= ~(Mask{1} << v);
    }
  }

  // Orders candidates by greedy colour class; colour[i] bounds the clique
  // size reachable from order[0..i].
  void colour_sort(Mask candidates, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colour) const {
    std::size_t k = 0;
    while (candidates != 0) {
      ++k;
      Mask uncoloured = candidates;
      while (uncoloured != 0) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(uncoloured));
        uncoloured &= ~(Mask{1} << v);
        uncoloured &= ~adj_[v];
        candidates &= ~(Mask{1} << v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
};

double checked_ratio(std::size_t n, std::size_t delta) {
  if (delta < 1 || delta > n) throw std::invalid_argument("packing bound: requires 1 <= delta <= n");
  return static_cast<double>(n) / static_cast<double>(delta);
}

}  // namespace

Packing greedy_packing(const SetSystem& sys, std::size_t delta, Separation mode,
                       std::uint64_t seed) {
  Packing out{{}, delta, mode};
  if (sys.empty()) return out;
  const std::size_t window = length_window(delta, mode);
  // Accepted members bucketed by length.
  std::vector<std::vector<std::size_t>> buckets(sys.ground_size() + 1);
  for (std::size_t pos : scan_order(sys.size(), seed)) {
    const auto& v = sys[pos];
    const std::size_t len = v.length();
    const std::size_t lo = len > window ? len - window : 0;
    const std::size_t hi = std::min(sys.ground_size(), len + window);
    bool ok = true;
    for (std::size_t l = lo; l <= hi && ok; ++l) {
      for (std::size_t other : buckets[l]) {
        if (!separated(v, sys[other], delta, mode)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      buckets[len].push_back(pos);
      out.members.push_back(pos);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

Packing greedy_packing_restarts(const SetSystem& sys, std::size_t delta, Separation mode,
                                std::size_t restarts, std::uint64_t seed) {
  if (restarts == 0) throw std::invalid_argument("greedy_packing_restarts: restarts must be positive");
  std::vector<Packing> runs(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    runs[r] = greedy_packing(sys, delta, mode, r == 0 ? 0 : derive_seed(seed, "greedy", r));
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].size() > runs[best].size()) best = r;
  }
  return std::move(runs[best]);
}

Packing max_packing_bruteforce(const SetSystem& sys, std::size_t delta, Separation mode) {
  if (sys.size() > kMaxBruteforcePacking) {
    throw BudgetExceeded("max_packing_bruteforce: system has more than 64 vectors");
  }
  Packing out{{}, delta, mode};
  if (sys.empty()) return out;
  std::vector<Mask> adj(sys.size(), 0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      if (separated(sys[i], sys[j], delta, mode)) {
        adj[i] |= Mask{1} << j;
        adj[j] |= Mask{1} << i;
      }
    }
  }
  Mask best = CliqueSearch(std::move(adj)).run();
  while (best != 0) {
    out.members.push_back(static_cast<std::size_t>(std::countr_zero(best)));
    best &= best - 1;
  }
  return out;
}

SetSystem shallow_filter(const SetSystem& sys, std::size_t k) {
  if (k > sys.ground_size()) throw std::invalid_argument("shallow_filter: requires k <= n");
  std::vector<IncidenceVector> kept;
  for (const auto& v : sys) {
    if (v.length() <= k) kept.push_back(v);
  }
  return SetSystem(sys.ground_size(), std::move(kept));
}

double bound_packing(std::size_t n, std::size_t delta, const CsParams& params) {
  params.validate();
  return std::pow(checked_ratio(n, delta), params.d);
}

double bound_shallow_packing(std::size_t n, std::size_t k, std::size_t delta,
                             const CsParams& params) {
  params.validate();
  checked_ratio(n, delta);
  if (2 * k < delta) throw std::invalid_argument("bound_shallow_packing: requires k >= delta/2");
  return std::pow(static_cast<double>(n), params.d1) *
         std::pow(static_cast<double>(k), params.d - params.d1) /
         std::pow(static_cast<double>(delta), params.d);
}

}  // namespace shallowpack
