#include "shallowpack/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "shallowpack/packing.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/sampling.hpp"
#include "shallowpack/sketch.hpp"

namespace shallowpack {

std::uint64_t total_conflict(const SpanningTree& tree) {
  std::uint64_t total = 0;
  for (const auto& e : tree.edges) total += e.weight;
  return total;
}

bool is_valid_tree(const SpanningTree& tree, const SetSystem& sys) {
  if (tree.nodes != sys.size() || tree.nodes == 0) return false;
  if (tree.edges.size() != tree.nodes - 1) return false;
  std::vector<std::size_t> parent(tree.nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : tree.edges) {
    if (e.u >= e.v || e.v >= tree.nodes) return false;
    if (e.weight != distance(sys[e.u], sys[e.v])) return false;
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

SpanningTree prim_tree(const SetSystem& sys,
                       const std::function<double(std::size_t, std::size_t)>& cost) {
  if (sys.empty()) throw std::invalid_argument("spanning tree of an empty system");
  const std::size_t m = sys.size();
  SpanningTree tree{m, {}};
  tree.edges.reserve(m - 1);
  std::vector<double> key(m, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> link(m, 0);
  std::vector<char> in_tree(m, 0);
  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < m; ++step) {
    std::size_t next = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (in_tree[v]) continue;
      const double c = cost(current, v);
      if (c < key[v]) {
        key[v] = c;
        link[v] = current;
      }
      if (next == m || key[v] < key[next]) next = v;
    }
    in_tree[next] = 1;
    const std::size_t a = std::min(next, link[next]);
    const std::size_t b = std::max(next, link[next]);
    tree.edges.push_back({a, b, distance(sys[a], sys[b])});
    current = next;
  }
  return tree;
}

SpanningTree exact_mst(const SetSystem& sys) {
  return prim_tree(sys, [&](std::size_t a, std::size_t b) {
    return static_cast<double>(distance(sys[a], sys[b]));
  });
}

double bound_tree_conflict(std::size_t n, std::size_t k, std::size_t m, const CsParams& params) {
  params.validate();
  if (m < 1) throw std::invalid_argument("bound_tree_conflict: requires m >= 1");
  if (k > n) throw std::invalid_argument("bound_tree_conflict: requires k <= n");
  const double ratio = params.d1 / params.d;
  return std::pow(static_cast<double>(n), ratio) * std::pow(static_cast<double>(k), 1.0 - ratio) *
         std::pow(static_cast<double>(m), 1.0 - 1.0 / params.d);
}

double ConflictReport::spread() const {
  if (rows.empty()) return 1.0;
  double lo = rows.front().ratio();
  double hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio());
    hi = std::max(hi, r.ratio());
  }
  return hi / lo;
}

ConflictReport conflict_sweep(const ConflictSweepSpec& spec) {
  if (spec.factors.empty()) throw std::invalid_argument("conflict_sweep: no factors");
  const auto params = spec.generator.params();
  ConflictReport report;
  report.generator = spec.generator.label();
  for (std::size_t f : spec.factors) {
    if (f == 0) throw std::invalid_argument("conflict_sweep: factors must be positive");
    ConflictRow row;
    row.n = spec.n * f;
    row.k = spec.k * f;
    row.m = spec.m * f;
    if (row.m == 0 || row.k > row.n) throw std::invalid_argument("conflict_sweep: requires m >= 1 and k <= n");
    const auto full = generate_system(spec.generator, row.n, row.k, spec.seed);
    const auto shallow = shallow_filter(full, row.k);
    if (shallow.size() < row.m) {
      throw std::invalid_argument("conflict_sweep: only " + std::to_string(shallow.size()) +
                                  " shallow vectors for m = " + std::to_string(row.m));
    }
    const auto pick = draw_sample(shallow.size(), row.m, derive_seed(spec.seed, "conflict", f));
    const auto sys = shallow.subsystem(pick.indices());
    row.exact_total = total_conflict(exact_mst(sys));
    if (spec.mu > 0) {
      const auto sketch = build_sketch(sys, spec.mu, geometric_schedule(sys.ground_size()),
                                       derive_seed(spec.seed, "sketch", f));
      row.approx_total = total_conflict(approx_mst(sys, sketch, spec.eta, derive_seed(spec.seed, "calibrate", f)));
    }
    row.bound = bound_tree_conflict(row.n, row.k, row.m, params);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace shallowpack
