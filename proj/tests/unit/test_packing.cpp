#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "shallowpack/errors.hpp"
#include "shallowpack/fit.hpp"
#include "shallowpack/generators.hpp"
#include "shallowpack/packing.hpp"
#include "shallowpack/scaling.hpp"

using namespace shallowpack;

namespace {

SetSystem sys_of(std::initializer_list<std::string_view> rows) {
  std::vector<IncidenceVector> vs;
  std::size_t n = 0;
  for (auto r : rows) {
    vs.push_back(IncidenceVector::from_string(r));
    n = r.size();
  }
  return SetSystem(n, std::move(vs));
}

// No excluded vector can join without breaking separation.
bool is_maximal(const SetSystem& sys, const Packing& p) {
  std::vector<char> member(sys.size(), 0);
  for (auto i : p.members) member[i] = 1;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (member[i]) continue;
    bool blocked = false;
    for (auto j : p.members) blocked = blocked || !separated(sys[i], sys[j], p.delta, p.mode);
    if (!blocked) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("greedy packing examples") {
  CHECK(greedy_packing(sys_of({"0000"}), 3, Separation::Strict).size() == 1);
  auto sys = sys_of({"1000", "1100", "1111"});
  auto p = greedy_packing(sys, 1, Separation::Strict);
  REQUIRE(p.size() == 2);
  CHECK(sys[p.members[0]].to_string() == "1000");
  CHECK(sys[p.members[1]].to_string() == "1111");
  CHECK(greedy_packing(build_rectangle_grid_dual(8, 2), 1, Separation::Strict).size() == 16);
}

TEST_CASE("max packing examples") {
  auto sys = sys_of({"1000", "1100", "1111"});
  CHECK(max_packing_bruteforce(sys, 0, Separation::Strict).size() == 3);
  CHECK(max_packing_bruteforce(sys, 1, Separation::Strict).size() == 2);
  CHECK(max_packing_bruteforce(sys_of({"00", "01", "10", "11"}), 2, Separation::Strict).size() == 1);
  CHECK_THROWS_AS(max_packing_bruteforce(build_rectangle_grid_dual(64, 4), 1, Separation::Strict),
                  BudgetExceeded);
}

TEST_CASE("packings on random systems against the subset oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng.below(12);
    auto sys = oracle::random_system(rng, n, 1 + rng.below(16));
    const std::size_t delta = rng.below(n);
    const auto mode = rng.coin() ? Separation::Strict : Separation::NonStrict;
    const auto best = max_packing_bruteforce(sys, delta, mode);
    CHECK(best.size() == oracle::max_packing(sys, delta, mode == Separation::Strict));
    CHECK(is_separated(best.extract(sys), delta, mode));
    for (std::uint64_t seed : {0ULL, 1ULL, 77ULL}) {
      const auto g = greedy_packing(sys, delta, mode, seed);
      CHECK(g.size() >= 1);
      CHECK(g.size() <= best.size());
      CHECK(std::is_sorted(g.members.begin(), g.members.end()));
      CHECK(is_separated(g.extract(sys), delta, mode));
      CHECK(is_maximal(sys, g));
    }
    CHECK(greedy_packing(sys, 0, Separation::Strict).size() == sys.size());
  }
}

TEST_CASE("greedy restarts are deterministic and at least as good as restart 0") {
  auto sys = build_halfspaces(random_points(48, 2, 3));
  const auto one = greedy_packing(sys, 6, Separation::Strict);
  const auto best = greedy_packing_restarts(sys, 6, Separation::Strict, 6, 99);
  CHECK(best.size() >= one.size());
  CHECK(best.members == greedy_packing_restarts(sys, 6, Separation::Strict, 6, 99).members);
  CHECK(is_separated(best.extract(sys), 6, Separation::Strict));
  CHECK(is_maximal(sys, best));
  CHECK_THROWS_AS(greedy_packing_restarts(sys, 6, Separation::Strict, 0, 1), std::invalid_argument);
}

TEST_CASE("grid packing number just below the stack depth") {
  for (auto [n, delta] : {std::pair<std::size_t, std::size_t>{8, 2}, {12, 4}, {16, 4}, {24, 6}}) {
    auto sys = build_rectangle_grid_dual(n, delta);
    const auto cells = (n / delta) * (n / delta);
    CHECK(max_packing_bruteforce(sys, delta - 1, Separation::Strict).size() == cells);
    CHECK(greedy_packing(sys, delta, Separation::NonStrict).size() == cells);
  }
}

TEST_CASE("shallow filter") {
  auto sys = sys_of({"1100", "1110", "0000"});
  CHECK(shallow_filter(sys, 4) == sys);
  CHECK(shallow_filter(sys, 0) == sys_of({"0000"}));
  CHECK(shallow_filter(sys, 2) == sys_of({"1100", "0000"}));
  CHECK_THROWS_AS(shallow_filter(sys, 5), std::invalid_argument);
}

TEST_CASE("packing bounds") {
  const CsParams plane{2.0, 1.0, 3};
  CHECK(bound_packing(16, 4, plane) == doctest::Approx(16));
  CHECK(bound_packing(7, 7, CsParams{3.0, 1.0, 4}) == doctest::Approx(1));
  CHECK(bound_packing(100, 10, CsParams{3.0, 1.0, 4}) == doctest::Approx(1000));
  CHECK(bound_shallow_packing(16, 4, 2, plane) == doctest::Approx(16));
  CHECK(bound_shallow_packing(64, 4, 4, plane) == doctest::Approx(16));
  CHECK_THROWS_AS(bound_shallow_packing(64, 1, 4, plane), std::invalid_argument);
  CHECK_THROWS_AS(bound_packing(8, 0, plane), std::invalid_argument);
  CHECK_THROWS_AS(bound_packing(8, 9, plane), std::invalid_argument);
}

TEST_CASE("shallow bound with k = n and d1 = d degenerates to the plain bound") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(1000);
    const std::size_t delta = 1 + rng.below(n);
    const double d = 1.0 + static_cast<double>(rng.below(4));
    const CsParams p{d, d, 1};
    CHECK(bound_shallow_packing(n, n, delta, p) == doctest::Approx(bound_packing(n, delta, p)));
  }
}

TEST_CASE("line fits") {
  const double x[] = {2, 4, 8};
  const double sq[] = {4, 16, 64};
  const double flat[] = {5, 5, 5};
  auto f = fit_loglog(x, sq);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.slope_se == doctest::Approx(0.0));
  CHECK(f.points == 3);
  CHECK(fit_loglog(x, flat).slope == doctest::Approx(0.0));
  const double lx[] = {0, 1};
  const double ly[] = {1, 3};
  auto l = fit_line(lx, ly);
  CHECK(l.slope == doctest::Approx(2.0));
  CHECK(l.intercept == doctest::Approx(1.0));
  const double same[] = {3, 3, 3};
  CHECK_THROWS_AS(fit_line(same, sq), std::invalid_argument);
  const double neg[] = {-1, 2, 3};
  CHECK_THROWS_AS(fit_loglog(neg, sq), std::invalid_argument);
}

TEST_CASE("noisy power law slope lies within three standard errors") {
  Rng rng(13);
  int outside = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x, y;
    for (int i = 0; i < 12; ++i) {
      const double xi = std::pow(2.0, 1 + i * 0.5);
      x.push_back(xi);
      y.push_back(3.0 * std::pow(xi, 1.5) * std::exp(0.2 * rng.normal()));
    }
    auto f = fit_loglog(x, y);
    if (std::abs(f.slope - 1.5) > 3 * f.slope_se) ++outside;
  }
  // Roughly 0.3% of trials should land outside by chance.
  CHECK(outside <= 3);
}

TEST_CASE("generator specs") {
  CHECK(parse_generator("halfplanes").label() == "halfplanes");
  CHECK(parse_generator("halfspaces", 3).label() == "halfspaces3d");
  CHECK(parse_generator("balls2d").kind == GeneratorKind::Balls);
  CHECK(parse_generator("halfplanes-sphere").domain == PointDomain::Sphere);
  CHECK(parse_generator("grid").separation() == Separation::NonStrict);
  CHECK_THROWS_AS(parse_generator("cubes"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator("grid-sphere"), std::invalid_argument);
  CHECK(parse_sweep("delta") == SweepVar::Delta);
  CHECK(sweep_name(SweepVar::K) == "k");
  CHECK_THROWS(parse_sweep("m"));
}

TEST_CASE("grid sweep in n has slope exactly 2") {
  ScalingSpec spec;
  spec.generator = parse_generator("grid");
  spec.sweep = SweepVar::N;
  spec.values = {16, 32, 64};
  spec.k = 4;
  spec.delta = 4;
  spec.trials = 2;
  auto report = scaling_experiment(spec);
  REQUIRE(report.rows.size() == 3);
  for (const auto& row : report.rows) {
    CHECK(row.packing_size == (row.n / 4) * (row.n / 4));
    CHECK(row.bound == doctest::Approx(static_cast<double>(row.packing_size)));
  }
  CHECK(report.fit.slope == doctest::Approx(2.0));
  CHECK(report.predicted_slope == doctest::Approx(2.0));
}

TEST_CASE("halfplane delta sweep is deterministic and decreasing") {
  ScalingSpec spec;
  spec.generator = parse_generator("halfplanes");
  spec.sweep = SweepVar::Delta;
  spec.values = {4, 8, 16};
  spec.n = 96;
  spec.k = 16;
  spec.trials = 3;
  spec.seed = 4;
  auto a = scaling_experiment(spec);
  auto b = scaling_experiment(spec);
  REQUIRE(a.rows.size() == 3);
  CHECK(a.predicted_slope == doctest::Approx(-2.0));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.rows[i].packing_size == b.rows[i].packing_size);
    CHECK(a.rows[i].packing_size >= 1);
    CHECK(a.rows[i].packing_size <= a.rows[i].shallow_size);
  }
  CHECK(a.rows[0].packing_size > a.rows[2].packing_size);
  CHECK(std::isfinite(a.fit.slope));
  CHECK(a.fit.slope < 0);
}

TEST_CASE("scaling spec validation") {
  ScalingSpec spec;
  spec.generator = parse_generator("halfplanes");
  spec.sweep = SweepVar::Delta;
  spec.n = 64;
  spec.k = 8;
  spec.values = {4, 8};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.values = {4, 8, 8};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.values = {4, 8, 32};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.values = {2, 4, 8};
  CHECK_NOTHROW(validate(spec));
}
