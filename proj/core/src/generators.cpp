#include "shallowpack/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "arrangement.hpp"

namespace shallowpack {
namespace {

using detail::Vec3;

constexpr double kHullTol = 1e-9;
constexpr double kGapTol = 1e-12;

// Distinct points in affine-hull coordinates, each remembering the original
// indices it stands for.
struct Prepared {
  std::size_t n = 0;
  int rank = 0;
  std::vector<Vec3> coords;
  std::vector<IncidenceVector> singles;
};

Prepared prepare(const PointSet& pts) {
  if (pts.empty()) throw std::invalid_argument("geometric generator: empty point set");
  if (pts.dim() > kMaxGeneratorDim) {
    throw std::invalid_argument("geometric generator: dimension " + std::to_string(pts.dim()) +
                                " exceeds 3");
  }
  const std::size_t n = pts.size();
  const std::size_t dim = pts.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto lex = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(pts[a].begin(), pts[a].end(), pts[b].begin(),
                                        pts[b].end());
  };
  std::stable_sort(order.begin(), order.end(), lex);

  Prepared prep;
  prep.n = n;
  std::vector<Vec3> raw;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t idx = order[i];
    if (i > 0 && std::equal(pts[idx].begin(), pts[idx].end(), pts[order[i - 1]].begin())) {
      prep.singles.back().set(idx);
      continue;
    }
    Vec3 p{};
    for (std::size_t k = 0; k < dim; ++k) p[k] = pts[idx][k];
    raw.push_back(p);
    prep.singles.emplace_back(n);
    prep.singles.back().set(idx);
  }

  // Translate and scale into a unit box; range families are invariant under
  // this map and the tolerances below assume unit scale.
  Vec3 lo = raw.front();
  Vec3 hi = raw.front();
  for (const auto& p : raw) {
    for (std::size_t k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  double extent = 0.0;
  for (std::size_t k = 0; k < 3; ++k) extent = std::max(extent, hi[k] - lo[k]);
  if (extent == 0.0) extent = 1.0;
  for (auto& p : raw) {
    for (std::size_t k = 0; k < 3; ++k) p[k] = (p[k] - 0.5 * (lo[k] + hi[k])) / extent;
  }

  const auto frame = detail::affine_hull(raw, static_cast<int>(dim), kHullTol);
  prep.rank = static_cast<int>(frame.basis.size());
  prep.coords.reserve(raw.size());
  for (const auto& p : raw) {
    const Vec3 rel{p[0] - frame.origin[0], p[1] - frame.origin[1], p[2] - frame.origin[2]};
    Vec3 c{};
    for (int k = 0; k < prep.rank; ++k) c[k] = detail::dot(rel, frame.basis[k]);
    prep.coords.push_back(c);
  }
  return prep;
}

class Collector {
 public:
  explicit Collector(std::size_t n) : n_(n) {}

  void add(const IncidenceVector& v) { seen_.insert(v); }

  /// Records an ordering; false when the same ordering was already handled.
  bool first_visit(const std::vector<std::uint32_t>& order) {
    std::string key(reinterpret_cast<const char*>(order.data()),
                    order.size() * sizeof(std::uint32_t));
    return orderings_.insert(std::move(key)).second;
  }

  SetSystem finish() {
    std::vector<IncidenceVector> out(seen_.begin(), seen_.end());
    seen_.clear();
    return SetSystem(n_, std::move(out));
  }

 private:
  std::size_t n_;
  std::unordered_set<IncidenceVector, IncidenceVectorHash> seen_;
  std::unordered_set<std::string> orderings_;
};

enum class RangeShape { Prefix, Interval };

// Sorts the distinct points by key and emits every prefix (and, when asked,
// its complement) or every interval whose boundaries fall at strict key gaps.
void emit_ordered(const Prepared& prep, const std::vector<double>& keys, RangeShape shape,
                  bool complements, Collector& out) {
  const std::size_t m = prep.coords.size();
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  if (!out.first_visit(order)) return;

  std::vector<std::size_t> cuts{0};
  for (std::size_t i = 1; i < m; ++i) {
    if (keys[order[i]] - keys[order[i - 1]] > kGapTol) cuts.push_back(i);
  }
  cuts.push_back(m);

  std::vector<IncidenceVector> prefix(m + 1, IncidenceVector(prep.n));
  for (std::size_t i = 0; i < m; ++i) {
    prefix[i + 1] = prefix[i];
    prefix[i + 1] |= prep.singles[order[i]];
  }
  if (shape == RangeShape::Prefix) {
    for (std::size_t c : cuts) {
      out.add(prefix[c]);
      if (complements) out.add(prefix[c].complement());
    }
    return;
  }
  out.add(prefix[0]);
  for (std::size_t a = 0; a < cuts.size(); ++a) {
    for (std::size_t b = a + 1; b < cuts.size(); ++b) {
      IncidenceVector v = prefix[cuts[b]];
      v.subtract(prefix[cuts[a]]);
      out.add(v);
    }
  }
}

std::vector<Vec3> pair_differences(const Prepared& prep) {
  std::vector<Vec3> diffs;
  const auto& c = prep.coords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      diffs.push_back({c[j][0] - c[i][0], c[j][1] - c[i][1], c[j][2] - c[i][2]});
    }
  }
  return diffs;
}

// Halfspace/slab ranges via one generic direction per cell of the arrangement
// of critical directions (those orthogonal to some difference p_j - p_i).
void directional_ranges(const Prepared& prep, RangeShape shape, Collector& out) {
  const auto directions = detail::sample_directions(pair_differences(prep), prep.rank);
  std::vector<double> keys(prep.coords.size());
  for (const auto& a : directions) {
    for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = detail::dot(a, prep.coords[i]);
    emit_ordered(prep, keys, shape, /*complements=*/shape == RangeShape::Prefix, out);
  }
}

// Planar case: rotate a direction through a half-turn. Between consecutive
// critical angles the projection order is fixed; at each critical angle only
// the tied points swap, so only ranges with a boundary inside the swapped
// span change.
std::vector<IncidenceVector> planar_sweep(const Prepared& prep, RangeShape shape) {
  const auto& pts = prep.coords;
  const std::size_t m = pts.size();
  struct Event {
    double angle;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Event> events;
  events.reserve(m * (m - 1) / 2);
  const double pi = std::numbers::pi;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      double theta = std::atan2(pts[j][1] - pts[i][1], pts[j][0] - pts[i][0]) + 0.5 * pi;
      theta = std::fmod(theta, pi);
      if (theta < 0) theta += pi;
      if (theta >= pi) theta -= pi;
      events.push_back({theta, i, j});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.angle < b.angle; });

  // Start in the middle of the widest angular gap so no tie class straddles
  // the start of the sweep.
  double start = 0.0;
  {
    double best_gap = -1.0;
    for (std::size_t e = 0; e < events.size(); ++e) {
      const double next = e + 1 < events.size() ? events[e + 1].angle : events.front().angle + pi;
      if (next - events[e].angle > best_gap) {
        best_gap = next - events[e].angle;
        start = events[e].angle + 0.5 * best_gap;
      }
    }
    for (auto& ev : events) {
      if (ev.angle < start) ev.angle += pi;
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.angle < b.angle; });
  }
  auto key_at = [&](std::uint32_t p, double angle) {
    return std::cos(angle) * pts[p][0] + std::sin(angle) * pts[p][1];
  };

  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return key_at(a, start) < key_at(b, start); });
  std::vector<std::uint32_t> pos(m);
  for (std::uint32_t r = 0; r < m; ++r) pos[order[r]] = r;

  std::vector<IncidenceVector> prefix(m + 1, IncidenceVector(prep.n));
  auto rebuild_prefix = [&](std::size_t from, std::size_t to) {
    for (std::size_t len = from; len <= to; ++len) {
      prefix[len] = prefix[len - 1];
      prefix[len] |= prep.singles[order[len - 1]];
    }
  };
  rebuild_prefix(1, m);

  std::vector<IncidenceVector> out;
  auto emit_interval = [&](std::size_t a, std::size_t b) {
    IncidenceVector v = prefix[b];
    v.subtract(prefix[a]);
    out.push_back(std::move(v));
  };
  if (shape == RangeShape::Prefix) {
    for (std::size_t len = 0; len <= m; ++len) {
      out.push_back(prefix[len]);
      out.push_back(prefix[len].complement());
    }
  } else {
    out.push_back(prefix[0]);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b <= m; ++b) emit_interval(a, b);
    }
  }

  constexpr double kSameAngle = 1e-12;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> spans;
  std::size_t e = 0;
  while (e < events.size()) {
    std::size_t g = e;
    spans.clear();
    while (g < events.size() && events[g].angle - events[e].angle <= kSameAngle) {
      const auto a = pos[events[g].i];
      const auto b = pos[events[g].j];
      spans.emplace_back(std::min(a, b), std::max(a, b));
      ++g;
    }
    const double next = g < events.size() ? events[g].angle : start + pi;
    const double mid = 0.5 * (events[g - 1].angle + next);

    std::sort(spans.begin(), spans.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> merged;
    for (const auto& s : spans) {
      if (!merged.empty() && s.first <= merged.back().second) {
        merged.back().second = std::max(merged.back().second, s.second);
      } else {
        merged.push_back(s);
      }
    }
    for (const auto& [lo, hi] : merged) {
      std::sort(order.begin() + lo, order.begin() + hi + 1,
                [&](auto a, auto b) { return key_at(a, mid) < key_at(b, mid); });
      for (std::uint32_t r = lo; r <= hi; ++r) pos[order[r]] = r;
      rebuild_prefix(lo + 1, hi);
      if (shape == RangeShape::Prefix) {
        for (std::size_t len = lo + 1; len <= hi; ++len) {
          out.push_back(prefix[len]);
          out.push_back(prefix[len].complement());
        }
      } else {
        for (std::size_t cut = lo + 1; cut <= hi; ++cut) {
          for (std::size_t b = cut + 1; b <= m; ++b) emit_interval(cut, b);
          for (std::size_t a = 0; a <= lo; ++a) emit_interval(a, cut);
        }
      }
    }
    e = g;
  }
  return out;
}

SetSystem trivial_ranges(const Prepared& prep) {
  IncidenceVector all(prep.n);
  for (const auto& s : prep.singles) all |= s;
  return SetSystem(prep.n, {IncidenceVector(prep.n), all});
}

SetSystem linear_ranges(const Prepared& prep, RangeShape shape) {
  if (prep.rank == 0) return trivial_ranges(prep);
  if (prep.rank == 2) return SetSystem(prep.n, planar_sweep(prep, shape));
  Collector out(prep.n);
  directional_ranges(prep, shape, out);
  return out.finish();
}

}  // namespace

SetSystem build_halfspaces(const PointSet& pts) {
  return linear_ranges(prepare(pts), RangeShape::Prefix);
}

SetSystem build_slabs(const PointSet& pts) {
  return linear_ranges(prepare(pts), RangeShape::Interval);
}

SetSystem build_balls(const PointSet& pts) {
  const Prepared prep = prepare(pts);
  if (prep.rank == 0) return trivial_ranges(prep);

  Collector out(prep.n);
  for (const auto& v : linear_ranges(prep, RangeShape::Prefix)) out.add(v);

  // Ordering by distance from a centre c is fixed inside each cell of the
  // arrangement of bisectors 2<p_j - p_i, c> = |p_j|^2 - |p_i|^2.
  std::vector<detail::Hyperplane> bisectors;
  const auto& c = prep.coords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Vec3 w{c[j][0] - c[i][0], c[j][1] - c[i][1], c[j][2] - c[i][2]};
      bisectors.push_back({w, 0.5 * (detail::dot(c[j], c[j]) - detail::dot(c[i], c[i]))});
    }
  }
  std::vector<double> keys(c.size());
  for (const auto& cell : detail::sample_cells(bisectors, prep.rank)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      double s = 0.0;
      for (int k = 0; k < prep.rank; ++k) {
        const double d = c[i][k] - cell.point[k];
        s += d * d;
      }
      keys[i] = s;
    }
    emit_ordered(prep, keys, RangeShape::Prefix, /*complements=*/false, out);
  }
  return out.finish();
}

SetSystem build_rectangle_grid_dual(std::size_t n, std::size_t delta) {
  if (delta < 2 || delta % 2 != 0) {
    throw std::invalid_argument("build_rectangle_grid_dual: delta must be even and >= 2");
  }
  if (n == 0 || n % delta != 0) {
    throw std::invalid_argument("build_rectangle_grid_dual: delta must divide n and n > 0");
  }
  const std::size_t side = n / delta;
  const std::size_t copies = delta / 2;
  const std::size_t horizontal_base = side * copies;
  std::vector<IncidenceVector> cells;
  cells.reserve(side * side);
  for (std::size_t col = 0; col < side; ++col) {
    for (std::size_t row = 0; row < side; ++row) {
      IncidenceVector v(n);
      for (std::size_t c = 0; c < copies; ++c) {
        v.set(col * copies + c);
        v.set(horizontal_base + row * copies + c);
      }
      cells.push_back(std::move(v));
    }
  }
  return SetSystem(n, std::move(cells));
}

bool GridCheck::ok() const {
  return cells == expected_cells && min_length == delta && max_length == delta &&
         (cells < 2 || min_distance >= delta);
}

GridCheck check_rectangle_grid(std::size_t n, std::size_t delta) {
  const auto sys = build_rectangle_grid_dual(n, delta);
  GridCheck check;
  check.n = n;
  check.delta = delta;
  check.expected_cells = (n / delta) * (n / delta);
  check.cells = sys.size();
  check.min_distance = min_pairwise_distance(sys);
  if (!sys.empty()) {
    check.min_length = sys[0].length();
    for (const auto& v : sys) {
      check.min_length = std::min(check.min_length, v.length());
      check.max_length = std::max(check.max_length, v.length());
    }
  }
  return check;
}

}  // namespace shallowpack
