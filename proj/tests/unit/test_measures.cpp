#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "shallowpack/generators.hpp"
#include "shallowpack/measures.hpp"
#include "shallowpack/sampling.hpp"
#include "shallowpack/spanning.hpp"

using namespace shallowpack;

namespace {

PointSet plane(std::initializer_list<std::pair<double, double>> pts) {
  std::vector<double> c;
  for (auto [x, y] : pts) {
    c.push_back(x);
    c.push_back(y);
  }
  return PointSet(2, std::move(c));
}

SetSystem sys_of(std::initializer_list<std::string_view> rows) {
  std::vector<IncidenceVector> vs;
  std::size_t n = 0;
  for (auto r : rows) {
    vs.push_back(IncidenceVector::from_string(r));
    n = r.size();
  }
  return SetSystem(n, std::move(vs));
}

long double brute_diameter(const PointSet& pts) {
  long double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      long double s = 0;
      for (std::size_t d = 0; d < pts.dim(); ++d) {
        const long double x = static_cast<long double>(pts[i][d]) - pts[j][d];
        s += x * x;
      }
      best = std::max(best, std::sqrt(s));
    }
  }
  return best;
}

PointSet without(const PointSet& pts, std::size_t skip) {
  PointSet out(pts.dim());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != skip) out.push_back(pts[i]);
  }
  return out;
}

// A spanning tree whose shape comes from random costs rather than distances.
SpanningTree random_tree(const SetSystem& sys, std::uint64_t seed) {
  return prim_tree(sys, [&](std::size_t a, std::size_t b) {
    const auto lo = std::min(a, b), hi = std::max(a, b);
    return static_cast<double>(derive_seed(seed, "edge", lo * 100003 + hi) >> 11);
  });
}

std::uint64_t total_size(const SetSystem& sys) {
  std::uint64_t s = 0;
  for (const auto& v : sys) s += v.length();
  return s;
}

}  // namespace

TEST_CASE("measure names") {
  CHECK(parse_measure("diameter") == Measure::Diameter);
  CHECK(parse_measure("seb") == Measure::SebRadius);
  CHECK(parse_measure("bbox") == Measure::BboxVolume);
  CHECK(measure_name(Measure::SebRadius) == "seb");
  CHECK_THROWS_AS(parse_measure("width"), std::invalid_argument);
}

TEST_CASE("diameter") {
  CHECK(measure_diameter(plane({{0, 0}, {1, 1}})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(measure_diameter(plane({{0.3, 0.2}})) == 0.0);
  CHECK(measure_diameter(PointSet(2)) == 0.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto pts = random_points(10, 1 + seed % 3, seed);
    CHECK(measure_diameter(pts) == doctest::Approx(static_cast<double>(brute_diameter(pts))).epsilon(1e-12));
  }
}

TEST_CASE("smallest enclosing ball") {
  auto tri = plane({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  CHECK(measure_seb_radius(tri) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(measure_seb_radius(plane({{0, 0}, {2, 0}})) == doctest::Approx(1.0));
  CHECK(measure_seb_radius(plane({{0.4, 0.4}})) == 0.0);
  CHECK(measure_seb_radius(PointSet(2)) == 0.0);
  PointSet tetra(3, {1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1});
  CHECK(measure_seb_radius(tetra) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(measure_seb_radius(random_points(5, 4, 1)), std::invalid_argument);
}

TEST_CASE("smallest enclosing ball against the circle oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto pts = random_points(4 + seed % 9, 2, seed + 500);
    CHECK(measure_seb_radius(pts) == doctest::Approx(oracle::seb_radius_2d(pts)).epsilon(1e-9));
  }
}

TEST_CASE("smallest enclosing ball contains every point and is tight") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t dim = 2 + seed % 2;
    auto pts = random_points(20, dim, seed + 900);
    const double r = measure_seb_radius(pts);
    // Removing a point on the boundary shrinks the ball; removing any other
    // point leaves it unchanged.
    std::size_t boundary = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double r_without = measure_seb_radius(without(pts, i));
      CHECK(r_without <= r + 1e-12);
      if (r_without < r - 1e-12) ++boundary;
    }
    CHECK(boundary >= 2);
    CHECK(boundary <= dim + 1);
    CHECK(r >= measure_diameter(pts) / 2 - 1e-12);
    CHECK(r <= measure_diameter(pts) + 1e-12);
  }
}

TEST_CASE("bounding box volume") {
  CHECK(measure_bbox_volume(plane({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == 1.0);
  CHECK(measure_bbox_volume(plane({{0.5, 0.5}})) == 0.0);
  CHECK(measure_bbox_volume(PointSet(3)) == 0.0);
  CHECK(measure_bbox_volume(plane({{0, 0}, {2, 3}})) == 6.0);
}

TEST_CASE("dynamic store matches recomputation after random updates") {
  auto ground = random_points(30, 3, 4);
  DynamicPointStore store(ground);
  Rng rng(9);
  std::vector<std::uint32_t> count(30, 0);
  std::uint64_t expected_updates = 0;
  for (int step = 0; step < 600; ++step) {
    const auto i = rng.below(30);
    if (count[i] > 0 && rng.coin()) {
      store.erase(i);
      --count[i];
    } else {
      store.insert(i);
      ++count[i];
    }
    ++expected_updates;
    CHECK(store.updates() == expected_updates);
    CHECK(store.multiplicity(i) == count[i]);
    PointSet scratch(3);
    for (std::size_t p = 0; p < 30; ++p) {
      for (std::uint32_t c = 0; c < count[p]; ++c) scratch.push_back(ground[p]);
    }
    CHECK(store.snapshot() == scratch);
    CHECK(store.active() == scratch.size());
    CHECK(store.query(Measure::BboxVolume) == measure_bbox_volume(scratch));
    CHECK(store.query(Measure::Diameter) == measure_diameter(scratch));
  }
  DynamicPointStore empty(ground);
  CHECK_THROWS_AS(empty.erase(3), std::logic_error);
  CHECK_THROWS_AS(empty.insert(30), std::out_of_range);
}

TEST_CASE("diameter and box volume grow under insertion") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto ground = random_points(25, 2, seed + 60);
    DynamicPointStore store(ground);
    double diam = 0.0, vol = 0.0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      store.insert(i);
      const double d = store.query(Measure::Diameter);
      const double v = store.query(Measure::BboxVolume);
      CHECK(d >= diam);
      CHECK(v >= vol);
      diam = d;
      vol = v;
    }
  }
}

TEST_CASE("traversal examples") {
  auto pts = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto one = sys_of({"1101"});
  auto r1 = traverse_and_measure(one, exact_mst(one), pts, Measure::Diameter);
  CHECK(r1.updates == 3);
  CHECK(r1.values.size() == 1);

  auto sys = sys_of({"1000", "1100", "1111"});
  auto tree = exact_mst(sys);
  auto from_longest = traverse_and_measure(sys, tree, pts, Measure::Diameter);
  CHECK(from_longest.root == 2);
  CHECK(from_longest.updates == 10);
  auto from_first = traverse_and_measure(sys, tree, pts, Measure::Diameter, 0);
  CHECK(from_first.updates == 7);
  CHECK(from_first.walk == std::vector<std::size_t>{0, 1, 2});
  auto brute = brute_force_measure(sys, pts, Measure::Diameter);
  CHECK(brute.brute_force_updates == 2 * 7);
  CHECK(from_longest.values == brute.values);
  CHECK(from_first.values == brute.values);
  CHECK(from_longest.values == std::vector<double>{0.0, 1.0, std::sqrt(2.0)});

  CHECK_THROWS_AS(traverse_and_measure(sys, tree, plane({{0, 0}}), Measure::Diameter),
                  std::invalid_argument);
  CHECK_THROWS_AS(traverse_and_measure(sys, SpanningTree{3, {{0, 1, 1}}}, pts, Measure::Diameter),
                  std::invalid_argument);
}

TEST_CASE("brute force examples") {
  auto pts = plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto empty = brute_force_measure(SetSystem(4), pts, Measure::BboxVolume);
  CHECK(empty.values.empty());
  CHECK(empty.updates == 0);
  auto one = brute_force_measure(sys_of({"1100"}), pts, Measure::BboxVolume);
  CHECK(one.updates == 4);
  CHECK(one.values == std::vector<double>{0.0});
}

TEST_CASE("longest set") {
  CHECK(longest_set(sys_of({"0011", "0110", "1000"})) == 0);
  CHECK(longest_set(sys_of({"0001", "0111", "1000"})) == 1);
  CHECK_THROWS_AS(longest_set(SetSystem(2)), std::invalid_argument);
}

TEST_CASE("tree walks agree with brute force on random instances") {
  Rng rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.below(30);
    const std::size_t dim = 1 + rng.below(3);
    auto pts = random_points(n, dim, 1000 + trial);
    auto sys = oracle::random_system(rng, n, 1 + rng.below(40));
    const auto tree = trial % 2 == 0 ? exact_mst(sys) : random_tree(sys, trial);
    REQUIRE(is_valid_tree(tree, sys));
    for (auto m : {Measure::Diameter, Measure::SebRadius, Measure::BboxVolume}) {
      const auto walk = traverse_and_measure(sys, tree, pts, m);
      const auto brute = brute_force_measure(sys, pts, m);
      CHECK(walk.updates == sys[walk.root].length() + 2 * total_conflict(tree));
      CHECK(brute.updates == 2 * total_size(sys));
      CHECK(brute.brute_force_updates == brute.updates);
      CHECK(walk.walk.size() == sys.size());
      CHECK(walk.walk.front() == walk.root);
      REQUIRE(walk.values.size() == brute.values.size());
      for (std::size_t s = 0; s < sys.size(); ++s) {
        CHECK(walk.set_sizes[s] == sys[s].length());
        if (m == Measure::SebRadius) {
          CHECK(std::abs(walk.values[s] - brute.values[s]) <= 1e-9);
        } else {
          CHECK(walk.values[s] == brute.values[s]);
        }
      }
    }
  }
}

TEST_CASE("walk values do not depend on the root") {
  auto pts = random_points(20, 2, 3);
  Rng rng(41);
  auto sys = oracle::random_system(rng, 20, 15);
  auto tree = exact_mst(sys);
  const auto base = traverse_and_measure(sys, tree, pts, Measure::BboxVolume, 0);
  for (std::size_t root = 1; root < sys.size(); ++root) {
    const auto other = traverse_and_measure(sys, tree, pts, Measure::BboxVolume, root);
    CHECK(other.values == base.values);
    CHECK(other.updates == sys[root].length() + 2 * total_conflict(tree));
  }
}

TEST_CASE("clustered halfplane instance needs fewer updates than brute force") {
  auto pts = clustered_points(120, 2, 5, 0.05, 4);
  auto full = build_halfspaces(pts);
  const auto pick = draw_sample(full.size(), 100, 8);
  auto sys = full.subsystem(pick.indices());
  auto tree = exact_mst(sys);
  auto walk = traverse_and_measure(sys, tree, pts, Measure::Diameter);
  auto brute = brute_force_measure(sys, pts, Measure::Diameter);
  CHECK(walk.updates < brute.updates);
  CHECK(walk.updates < total_size(sys));
}
