#pragma once

// Brute-force reference implementations used only by the tests. None of
// them share code with the library beyond IncidenceVector / SetSystem.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "shallowpack/point_set.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/set_system.hpp"

namespace oracle {

using shallowpack::IncidenceVector;
using shallowpack::PointSet;
using shallowpack::SetSystem;

using Bits = std::vector<char>;

inline IncidenceVector to_vector(const Bits& bits) {
  IncidenceVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) v.set(i);
  }
  return v;
}

inline SetSystem to_system(std::size_t n, const std::set<Bits>& sets) {
  std::vector<IncidenceVector> vs;
  for (const auto& b : sets) vs.push_back(to_vector(b));
  return SetSystem(n, std::move(vs));
}

// Halfplanes: a line through points i and j, every other point classified by
// side, and the four in/out patterns of i and j (a slight rotation or shift
// realizes each). Complete for points in general position.
inline SetSystem halfplanes(const PointSet& pts) {
  const std::size_t n = pts.size();
  std::set<Bits> sets{Bits(n, 0), Bits(n, 1)};
  if (n == 1) sets.insert(Bits(1, 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[j][0] - pts[i][0];
      const double dy = pts[j][1] - pts[i][1];
      for (int side : {-1, 1}) {
        Bits base(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
          if (p == i || p == j) continue;
          const double cross = dx * (pts[p][1] - pts[i][1]) - dy * (pts[p][0] - pts[i][0]);
          base[p] = (cross * side > 0) ? 1 : 0;
        }
        for (int pattern = 0; pattern < 4; ++pattern) {
          Bits s = base;
          s[i] = pattern & 1;
          s[j] = (pattern >> 1) & 1;
          sets.insert(s);
        }
      }
    }
  }
  return to_system(n, sets);
}

// Number of subsets cut off by halfspaces from n points in general position
// in R^d: 2 * sum_{i<=d} C(n-1, i).
inline std::uint64_t halfspace_count(std::uint64_t n, std::uint64_t d) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i <= d && i <= n - 1; ++i) {
    total += c;
    c = c * (n - 1 - i) / (i + 1);
  }
  return 2 * total;
}

inline std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> a) {
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
    }
    std::swap(a[col], a[best]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

// Halfspaces in R^3 via planes through triples, with all eight patterns on
// the triple. Non-triple points are classified by the exact plane.
inline SetSystem halfspaces3(const PointSet& pts) {
  const std::size_t n = pts.size();
  std::set<Bits> sets{Bits(n, 0), Bits(n, 1)};
  auto sub = [](std::span<const double> a, std::span<const double> b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto u = sub(pts[j], pts[i]);
        const auto v = sub(pts[k], pts[i]);
        const std::array<double, 3> normal{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                           u[0] * v[1] - u[1] * v[0]};
        for (int side : {-1, 1}) {
          Bits base(n, 0);
          for (std::size_t p = 0; p < n; ++p) {
            if (p == i || p == j || p == k) continue;
            const auto w = sub(pts[p], pts[i]);
            const double s = normal[0] * w[0] + normal[1] * w[1] + normal[2] * w[2];
            base[p] = s * side > 0 ? 1 : 0;
          }
          for (int pattern = 0; pattern < 8; ++pattern) {
            Bits s = base;
            s[i] = pattern & 1;
            s[j] = (pattern >> 1) & 1;
            s[k] = (pattern >> 2) & 1;
            sets.insert(s);
          }
        }
      }
    }
  }
  return to_system(n, sets);
}

// Closed disks: circles through three points, diametral circles of pairs,
// single points and the limiting halfplanes, each with every in/out pattern
// on its defining points.
inline SetSystem disks(const PointSet& pts) {
  const std::size_t n = pts.size();
  std::set<Bits> sets{Bits(n, 0)};
  for (const auto& v : halfplanes(pts)) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = v.test(i);
    sets.insert(b);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Bits single(n, 0);
    single[i] = 1;
    sets.insert(single);
  }
  auto classify = [&](double cx, double cy, double r2, const std::vector<std::size_t>& on,
                      int pattern) {
    Bits s(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      const double dx = pts[p][0] - cx;
      const double dy = pts[p][1] - cy;
      s[p] = dx * dx + dy * dy < r2 ? 1 : 0;
    }
    for (std::size_t t = 0; t < on.size(); ++t) s[on[t]] = (pattern >> t) & 1;
    sets.insert(s);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = 0.5 * (pts[i][0] + pts[j][0]);
      const double cy = 0.5 * (pts[i][1] + pts[j][1]);
      const double dx = pts[i][0] - cx;
      const double dy = pts[i][1] - cy;
      for (int pattern = 0; pattern < 4; ++pattern) classify(cx, cy, dx * dx + dy * dy, {i, j}, pattern);
      for (std::size_t k = j + 1; k < n; ++k) {
        // |p|^2 - 2 p.c - w = 0 for the three points, w = r^2 - |c|^2.
        std::array<std::array<double, 4>, 3> a{};
        std::size_t idx[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
          const auto p = pts[idx[r]];
          a[r] = {2 * p[0], 2 * p[1], 1.0, p[0] * p[0] + p[1] * p[1]};
        }
        const auto sol = solve3(a);
        const double r2 = sol[2] + sol[0] * sol[0] + sol[1] * sol[1];
        for (int pattern = 0; pattern < 8; ++pattern) classify(sol[0], sol[1], r2, {i, j, k}, pattern);
      }
    }
  }
  return to_system(n, sets);
}

// Slabs in the plane: every contiguous run of the order along a direction
// strictly between consecutive critical angles.
inline SetSystem slabs(const PointSet& pts) {
  const std::size_t n = pts.size();
  std::vector<double> angles{0.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Directions u with <u, p_i - p_j> = 0.
      double a = std::atan2(pts[j][1] - pts[i][1], pts[j][0] - pts[i][0]) + std::numbers::pi / 2;
      a = std::fmod(a + 2 * std::numbers::pi, std::numbers::pi);
      angles.push_back(a);
    }
  }
  std::sort(angles.begin(), angles.end());
  angles.push_back(angles.front() + std::numbers::pi);
  std::set<Bits> sets{Bits(n, 0)};
  for (std::size_t a = 0; a + 1 < angles.size(); ++a) {
    if (angles[a + 1] - angles[a] < 1e-12) continue;
    const double theta = 0.5 * (angles[a] + angles[a + 1]);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto key = [&](std::size_t p) { return std::cos(theta) * pts[p][0] + std::sin(theta) * pts[p][1]; };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    for (std::size_t lo = 0; lo < n; ++lo) {
      Bits s(n, 0);
      for (std::size_t hi = lo; hi < n; ++hi) {
        s[order[hi]] = 1;
        sets.insert(s);
      }
    }
  }
  return to_system(n, sets);
}

// Largest number of distinct restrictions onto any m-subset of indices.
inline std::size_t shatter(const SetSystem& sys, std::size_t m) {
  const std::size_t n = sys.ground_size();
  std::size_t best = 0;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), 1);
  do {
    std::set<std::string> seen;
    for (const auto& v : sys) {
      std::string key;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) key += v.test(i) ? '1' : '0';
      }
      seen.insert(key);
    }
    best = std::max(best, seen.size());
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

inline std::size_t vc_dimension(const SetSystem& sys) {
  std::size_t d = 0;
  for (std::size_t m = 1; m <= sys.ground_size(); ++m) {
    if (shatter(sys, m) == (std::size_t{1} << m)) d = m;
    else break;
  }
  return d;
}

// Largest pairwise-separated subset by plain subset enumeration.
inline std::size_t max_packing(const SetSystem& sys, std::size_t delta, bool strict) {
  const std::size_t m = sys.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < m && ok; ++j) {
        if (!((mask >> j) & 1)) continue;
        const auto d = shallowpack::distance(sys[i], sys[j]);
        ok = strict ? d > delta : d >= delta;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Minimum spanning-tree weight over all labelled trees (Prufer sequences).
inline std::uint64_t min_tree_weight(const SetSystem& sys) {
  const std::size_t m = sys.size();
  if (m <= 1) return 0;
  if (m == 2) return shallowpack::distance(sys[0], sys[1]);
  std::uint64_t best = UINT64_MAX;
  std::vector<std::size_t> code(m - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(m, 1);
    for (auto c : code) ++degree[c];
    std::uint64_t weight = 0;
    auto deg = degree;
    for (auto c : code) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      weight += shallowpack::distance(sys[leaf], sys[c]);
      --deg[leaf];
      --deg[c];
    }
    std::size_t u = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (deg[i] == 1) {
        if (u == m) {
          u = i;
        } else {
          weight += shallowpack::distance(sys[u], sys[i]);
          break;
        }
      }
    }
    best = std::min(best, weight);
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == m) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return best;
}

inline std::uint64_t count_labelled_trees(std::size_t m) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i + 2 < m; ++i) t *= m;
  return t;
}

// P[X = s] by enumerating every sample of [n]; marked items are [0, v_len).
inline double hypergeom_by_enumeration(std::size_t n, std::size_t sample, std::size_t v_len,
                                       std::size_t s) {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != sample) continue;
    ++total;
    const std::uint64_t marked = v_len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v_len) - 1;
    if (static_cast<std::size_t>(std::popcount(mask & marked)) == s) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

// Σ_i Var(V_i | V_{-i}) under the uniform distribution, by direct matching.
inline double conditional_variance(const SetSystem& sys) {
  const double total = static_cast<double>(sys.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < sys.ground_size(); ++i) {
    for (const auto& v : sys) {
      double same = 0.0;
      double ones = 0.0;
      for (const auto& u : sys) {
        bool match = true;
        for (std::size_t j = 0; j < sys.ground_size() && match; ++j) {
          if (j != i && u.test(j) != v.test(j)) match = false;
        }
        if (match) {
          same += 1.0;
          ones += u.test(i) ? 1.0 : 0.0;
        }
      }
      const double p = ones / same;
      sum += p * (1.0 - p) / total;
    }
  }
  return sum;
}

// Smallest enclosing disk by trying every circle through 2 or 3 points.
inline double seb_radius_2d(const PointSet& pts) {
  const std::size_t n = pts.size();
  if (n <= 1) return 0.0;
  double best = INFINITY;
  auto covers = [&](double cx, double cy, double r2) {
    for (std::size_t p = 0; p < n; ++p) {
      const double dx = pts[p][0] - cx;
      const double dy = pts[p][1] - cy;
      if (dx * dx + dy * dy > r2 * (1 + 1e-9) + 1e-18) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = 0.5 * (pts[i][0] + pts[j][0]);
      const double cy = 0.5 * (pts[i][1] + pts[j][1]);
      const double r2 = (pts[i][0] - cx) * (pts[i][0] - cx) + (pts[i][1] - cy) * (pts[i][1] - cy);
      if (covers(cx, cy, r2)) best = std::min(best, r2);
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<std::array<double, 4>, 3> a{};
        std::size_t idx[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
          const auto p = pts[idx[r]];
          a[r] = {2 * p[0], 2 * p[1], 1.0, p[0] * p[0] + p[1] * p[1]};
        }
        const auto sol = solve3(a);
        const double rr = sol[2] + sol[0] * sol[0] + sol[1] * sol[1];
        if (std::isfinite(rr) && covers(sol[0], sol[1], rr)) best = std::min(best, rr);
      }
    }
  }
  return std::sqrt(best);
}

// Random system over n bits with up to `count` vectors.
inline SetSystem random_system(shallowpack::Rng& rng, std::size_t n, std::size_t count) {
  std::vector<IncidenceVector> vs;
  for (std::size_t i = 0; i < count; ++i) {
    IncidenceVector v(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (rng.coin()) v.set(b);
    }
    vs.push_back(std::move(v));
  }
  return SetSystem(n, std::move(vs));
}

}  // namespace oracle
