#include "shallowpack/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shallowpack {
namespace {

constexpr std::size_t kMaxSebDim = 3;

struct Ball {
  std::array<double, kMaxSebDim> centre{};
  double sq_radius = -1.0;
};

class Welzl {
 public:
  Welzl(const PointSet& pts) : pts_(pts), dim_(pts.dim()) {}

  Ball run() {
    std::vector<std::size_t> order(pts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    order_ = std::move(order);
    support_.clear();
    return mtf(order_.size());
  }

 private:
  bool outside(const Ball& b, std::size_t i) const {
    if (b.sq_radius < 0.0) return true;
    double d2 = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double t = pts_[i][k] - b.centre[k];
      d2 += t * t;
    }
    return std::sqrt(d2) > std::sqrt(b.sq_radius) * (1.0 + 1e-12) + 1e-15;
  }

  // Smallest ball with every support point on its boundary.
  Ball circumball() const {
    Ball b;
    if (support_.empty()) return b;
    const auto p0 = pts_[support_[0]];
    for (std::size_t k = 0; k < dim_; ++k) b.centre[k] = p0[k];
    b.sq_radius = 0.0;
    const std::size_t r = support_.size() - 1;
    if (r == 0) return b;
    // Centre = p0 + Σ λ_j q_j with 2 q_i·Σ λ_j q_j = |q_i|².
    std::array<std::array<double, kMaxSebDim>, kMaxSebDim + 1> q{};
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) q[j][k] = pts_[support_[j + 1]][k] - p0[k];
    }
    std::array<std::array<double, kMaxSebDim + 2>, kMaxSebDim + 1> a{};
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        double dot = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) dot += q[i][k] * q[j][k];
        a[i][j] = 2.0 * dot;
      }
      double sq = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) sq += q[i][k] * q[i][k];
      a[i][r] = sq;
    }
    std::array<double, kMaxSebDim + 1> lambda{};
    std::array<bool, kMaxSebDim + 1> free{};
    std::array<std::size_t, kMaxSebDim + 1> pivot_col{};
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < r; ++col) {
      std::size_t best = row;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
      }
      const double scale = std::max(1e-300, std::abs(a[col][col]) + std::abs(a[best][col]));
      if (std::abs(a[best][col]) <= 1e-14 * scale) {
        free[col] = true;
        continue;
      }
      std::swap(a[row], a[best]);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == row) continue;
        const double f = a[i][col] / a[row][col];
        for (std::size_t j = col; j <= r; ++j) a[i][j] -= f * a[row][j];
      }
      pivot_col[row] = col;
      ++row;
    }
    for (std::size_t i = 0; i < row; ++i) lambda[pivot_col[i]] = a[i][r] / a[i][pivot_col[i]];
    std::array<double, kMaxSebDim> offset{};
    for (std::size_t j = 0; j < r; ++j) {
      if (free[j]) continue;
      for (std::size_t k = 0; k < dim_; ++k) offset[k] += lambda[j] * q[j][k];
    }
    double sq = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      b.centre[k] += offset[k];
      sq += offset[k] * offset[k];
    }
    b.sq_radius = sq;
    return b;
  }

  Ball mtf(std::size_t end) {
    Ball b = circumball();
    if (support_.size() == dim_ + 1) return b;
    for (std::size_t i = 0; i < end; ++i) {
      const std::size_t p = order_[i];
      if (!outside(b, p)) continue;
      support_.push_back(p);
      b = mtf(i);
      support_.pop_back();
      std::rotate(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(i),
                  order_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return b;
  }

  const PointSet& pts_;
  std::size_t dim_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> support_;
};

double volume_from_extents(const std::vector<std::multiset<double>>& extents) {
  double v = 1.0;
  for (const auto& s : extents) {
    if (s.empty()) return 0.0;
    v *= *s.rbegin() - *s.begin();
  }
  return v;
}

void check_inputs(const SetSystem& sys, const PointSet& pts) {
  if (sys.ground_size() != pts.size()) {
    throw std::invalid_argument("measure: ground size " + std::to_string(sys.ground_size()) +
                                " does not match " + std::to_string(pts.size()) + " points");
  }
}

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Diameter: return "diameter";
    case Measure::SebRadius: return "seb";
    case Measure::BboxVolume: return "bbox";
  }
  return "";
}

Measure parse_measure(std::string_view name) {
  for (auto m : {Measure::Diameter, Measure::SebRadius, Measure::BboxVolume}) {
    if (measure_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

double measure_diameter(const PointSet& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, squared_distance(pts[i], pts[j]));
    }
  }
  return std::sqrt(best);
}

double measure_seb_radius(const PointSet& pts) {
  if (pts.dim() > kMaxSebDim) throw std::invalid_argument("measure_seb_radius: dimension above 3");
  if (pts.empty()) return 0.0;
  const Ball b = Welzl(pts).run();
  return std::sqrt(std::max(0.0, b.sq_radius));
}

double measure_bbox_volume(const PointSet& pts) {
  if (pts.empty()) return 0.0;
  double v = 1.0;
  for (std::size_t k = 0; k < pts.dim(); ++k) {
    double lo = pts[0][k];
    double hi = lo;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      lo = std::min(lo, pts[i][k]);
      hi = std::max(hi, pts[i][k]);
    }
    v *= hi - lo;
  }
  return v;
}

double evaluate_measure(Measure m, const PointSet& pts) {
  switch (m) {
    case Measure::Diameter: return measure_diameter(pts);
    case Measure::SebRadius: return measure_seb_radius(pts);
    case Measure::BboxVolume: return measure_bbox_volume(pts);
  }
  return 0.0;
}

DynamicPointStore::DynamicPointStore(const PointSet& ground)
    : ground_(&ground), count_(ground.size(), 0), extents_(ground.dim()) {}

void DynamicPointStore::check(std::size_t index) const {
  if (index >= count_.size()) throw std::out_of_range("DynamicPointStore: point index out of range");
}

void DynamicPointStore::insert(std::size_t index) {
  check(index);
  ++count_[index];
  ++active_;
  ++updates_;
  const auto p = (*ground_)[index];
  for (std::size_t k = 0; k < p.size(); ++k) extents_[k].insert(p[k]);
}

void DynamicPointStore::erase(std::size_t index) {
  check(index);
  if (count_[index] == 0) throw std::logic_error("DynamicPointStore: erasing an absent point");
  --count_[index];
  --active_;
  ++updates_;
  const auto p = (*ground_)[index];
  for (std::size_t k = 0; k < p.size(); ++k) extents_[k].erase(extents_[k].find(p[k]));
}

PointSet DynamicPointStore::snapshot() const {
  PointSet out(ground_->dim());
  for (std::size_t i = 0; i < count_.size(); ++i) {
    for (std::uint32_t c = 0; c < count_[i]; ++c) out.push_back((*ground_)[i]);
  }
  return out;
}

double DynamicPointStore::query(Measure m) const {
  if (m == Measure::BboxVolume) return volume_from_extents(extents_);
  return evaluate_measure(m, snapshot());
}

std::size_t longest_set(const SetSystem& sys) {
  if (sys.empty()) throw std::invalid_argument("longest_set: empty system");
  std::size_t best = 0;
  for (std::size_t i = 1; i < sys.size(); ++i) {
    if (sys[i].length() > sys[best].length()) best = i;
  }
  return best;
}

MeasureReport traverse_and_measure(const SetSystem& sys, const SpanningTree& tree,
                                   const PointSet& pts, Measure measure,
                                   std::optional<std::size_t> root) {
  check_inputs(sys, pts);
  if (!is_valid_tree(tree, sys)) throw std::invalid_argument("traverse_and_measure: tree does not span the system");
  MeasureReport report;
  report.measure = measure;
  const std::size_t m = sys.size();
  report.values.assign(m, 0.0);
  report.set_sizes.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    report.set_sizes[i] = sys[i].length();
    report.brute_force_updates += 2 * report.set_sizes[i];
  }
  report.root = root.value_or(longest_set(sys));
  if (report.root >= m) throw std::invalid_argument("traverse_and_measure: root out of range");

  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& e : tree.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  DynamicPointStore store(pts);
  auto move = [&](std::size_t from, std::size_t to) {
    const auto& a = sys[from];
    const auto& b = sys[to];
    for (std::size_t i : (a & b.complement()).indices()) store.erase(i);
    for (std::size_t i : (b & a.complement()).indices()) store.insert(i);
  };

  for (std::size_t i : sys[report.root].indices()) store.insert(i);
  report.values[report.root] = store.query(measure);
  report.walk.push_back(report.root);

  // Iterative Euler tour: (node, parent, next child slot).
  struct Frame {
    std::size_t node;
    std::size_t parent;
    std::size_t slot;
  };
  std::vector<Frame> stack{{report.root, m, 0}};
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.slot < adj[top.node].size()) {
      const std::size_t child = adj[top.node][top.slot++];
      if (child == top.parent) continue;
      move(top.node, child);
      report.values[child] = store.query(measure);
      report.walk.push_back(child);
      stack.push_back({child, top.node, 0});
    } else {
      const Frame done = top;
      stack.pop_back();
      if (done.parent != m) move(done.node, done.parent);
    }
  }
  report.updates = store.updates();
  return report;
}

MeasureReport brute_force_measure(const SetSystem& sys, const PointSet& pts, Measure measure) {
  check_inputs(sys, pts);
  MeasureReport report;
  report.measure = measure;
  DynamicPointStore store(pts);
  for (std::size_t s = 0; s < sys.size(); ++s) {
    const auto idx = sys[s].indices();
    for (std::size_t i : idx) store.insert(i);
    report.values.push_back(store.query(measure));
    report.set_sizes.push_back(idx.size());
    report.walk.push_back(s);
    for (std::size_t i : idx) store.erase(i);
  }
  report.updates = store.updates();
  report.brute_force_updates = report.updates;
  return report;
}

}  // namespace shallowpack
