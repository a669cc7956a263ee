#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shallowpack/combinatorics.hpp"
#include "shallowpack/scaling.hpp"
#include "shallowpack/set_system.hpp"

namespace shallowpack {

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t weight = 0;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Spanning tree over the positions of a SetSystem, weighted by conflict
/// (symmetric-difference) distance.
struct SpanningTree {
  std::size_t nodes = 0;
  /// Each edge has u < v.
  std::vector<TreeEdge> edges;
};

/// Sum of edge weights.
std::uint64_t total_conflict(const SpanningTree& tree);

/// True when the tree spans sys with nodes - 1 acyclic edges and every weight
/// equals the distance between its endpoints.
bool is_valid_tree(const SpanningTree& tree, const SetSystem& sys);

/// Prim's algorithm over any symmetric cost, from node 0. Among equal keys
/// the smallest node index is taken next, and a node keeps the earliest tree
/// neighbour that achieved its key. Weights in the result are exact conflict
/// distances regardless of `cost`.
SpanningTree prim_tree(const SetSystem& sys,
                       const std::function<double(std::size_t, std::size_t)>& cost);

/// Minimum spanning tree under distance(). Throws std::invalid_argument on an
/// empty system.
SpanningTree exact_mst(const SetSystem& sys);

/// n^(d1/d) k^(1 - d1/d) m^(1 - 1/d). Requires m >= 1 and k <= n.
double bound_tree_conflict(std::size_t n, std::size_t k, std::size_t m, const CsParams& params);

struct ConflictRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::uint64_t exact_total = 0;
  /// Present when the sweep was asked for sketch trees.
  std::optional<std::uint64_t> approx_total;
  double bound = 0.0;

  double ratio() const { return static_cast<double>(exact_total) / bound; }
};

struct ConflictReport {
  std::string generator;
  std::vector<ConflictRow> rows;

  /// max ratio / min ratio over the rows.
  double spread() const;
};

struct ConflictSweepSpec {
  GeneratorSpec generator;
  std::size_t n = 64;
  std::size_t k = 8;
  std::size_t m = 32;
  /// (n, k, m) are multiplied jointly by each factor.
  std::vector<std::size_t> factors{1, 2, 4};
  /// Sketch width for the approximate tree; 0 skips it.
  std::size_t mu = 0;
  double eta = 0.5;
  std::uint64_t seed = 0;
};

/// For each factor: generate the system over f*n elements, keep vectors of
/// length <= f*k, pick f*m of them uniformly, and compare the exact MST
/// weight with bound_tree_conflict. Throws std::invalid_argument when fewer
/// than f*m shallow vectors exist.
ConflictReport conflict_sweep(const ConflictSweepSpec& spec);

}  // namespace shallowpack
