#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "shallowpack/discrepancy.hpp"
#include "shallowpack/generators.hpp"
#include "shallowpack/packing.hpp"

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

}  // namespace

TEST_CASE("coloring construction") {
  CHECK(Coloring::uniform(3).signs() == std::vector<int>{1, 1, 1});
  CHECK(Coloring({1, -1}).negated().signs() == std::vector<int>{-1, 1});
  CHECK_THROWS_AS(Coloring({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring({2}), std::invalid_argument);
  CHECK(random_coloring(0, 3).size() == 0);
}

TEST_CASE("evaluation examples") {
  auto sys = sys_of({"1100", "0111", "0000"});
  auto plus = eval_coloring(sys, Coloring::uniform(4));
  for (std::size_t s = 0; s < sys.size(); ++s) {
    CHECK(plus.values[s] == static_cast<long long>(sys[s].length()));
  }
  CHECK(plus.disc == 3);

  auto all = sys_of({"111111"});
  CHECK(eval_coloring(all, Coloring({1, -1, -1, 1, 1, -1})).disc == 0);

  auto pair = eval_coloring(sys_of({"1100", "0011"}), Coloring({1, -1, 1, -1}));
  CHECK(pair.values == std::vector<long long>{0, 0});
  CHECK(pair.disc == 0);

  CHECK(eval_coloring(SetSystem(3), Coloring::uniform(3)).disc == 0);
  CHECK_THROWS_AS(eval_coloring(sys, Coloring::uniform(5)), std::invalid_argument);
}

TEST_CASE("evaluation properties on random systems") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(40);
    auto sys = oracle::random_system(rng, n, 1 + rng.below(30));
    auto chi = random_coloring(n, trial);
    auto a = eval_coloring(sys, chi);
    auto b = eval_coloring(sys, chi.negated());
    CHECK(a.disc == b.disc);
    CHECK(a.disc >= 0);
    CHECK(a.disc <= static_cast<long long>(sys.max_length()));
    for (std::size_t s = 0; s < sys.size(); ++s) {
      CHECK(a.values[s] == -b.values[s]);
      long long direct = 0;
      for (auto i : sys[s].indices()) direct += chi[i];
      CHECK(a.values[s] == direct);
    }
  }
}

TEST_CASE("a single odd set always has discrepancy at least one") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(30);
    IncidenceVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin()) v.set(i);
    }
    if (v.length() % 2 == 0) v.set(0, !v.test(0));
    SetSystem sys(n, {v});
    CHECK(eval_coloring(sys, random_coloring(n, trial)).disc >= 1);
  }
}

TEST_CASE("random coloring is fair and deterministic") {
  CHECK(random_coloring(50, 4).signs() == random_coloring(50, 4).signs());
  long long plus = 0;
  long long total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (int s : random_coloring(100, seed).signs()) {
      plus += s > 0 ? 1 : 0;
      ++total;
    }
  }
  CHECK(std::abs(static_cast<double>(plus) / static_cast<double>(total) - 0.5) <= 0.02);
}

TEST_CASE("random colorings of shallow systems stay near sqrt(k log m)") {
  auto full = build_halfspaces(random_points(128, 2, 5));
  const std::size_t k = 16;
  auto sys = shallow_filter(full, k);
  const double scale = std::sqrt(2.0 * k * std::log(2.0 * static_cast<double>(sys.size())));
  int above = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto disc = eval_coloring(sys, random_coloring(128, seed)).disc;
    CHECK(disc <= static_cast<long long>(k));
    if (static_cast<double>(disc) > scale) ++above;
  }
  // The union bound puts each seed above the scale with probability < 1/m.
  CHECK(above <= 5);
}

TEST_CASE("halfspace discrepancy predictor") {
  CHECK(bound_disc_halfspaces(16, 256, 4) == doctest::Approx(4.0 * std::pow(8.0, 0.125)));
  CHECK(bound_disc_halfspaces(8, 8, 3) == doctest::Approx(2.0 * std::pow(3.0, 7.0 / 6.0)));
  const double odd = std::pow(32.0, 0.25 + 0.05) * std::pow(1024.0, 0.25 - 0.15) * std::pow(10.0, 0.1);
  CHECK(bound_disc_halfspaces(32, 1024, 5) == doctest::Approx(odd));
  for (std::size_t d : {3u, 4u, 5u, 6u, 7u}) {
    double prev = 0.0;
    for (std::size_t s = 1; s <= 500; s += 7) {
      const double b = bound_disc_halfspaces(s, 500, d);
      CHECK(b > prev);
      prev = b;
    }
  }
  CHECK_THROWS_AS(bound_disc_halfspaces(4, 16, 2), std::invalid_argument);
  CHECK_THROWS_AS(bound_disc_halfspaces(17, 16, 3), std::invalid_argument);
}

TEST_CASE("discrepancy report") {
  auto sys = sys_of({"1100", "0111"});
  auto chi = Coloring({1, 1, -1, 1});
  auto with = discrepancy_report(sys, chi, 3);
  REQUIRE(with.rows.size() == 2);
  // Canonical order puts 0111 first.
  CHECK(with.rows[0].set_size == 3);
  CHECK(with.rows[0].chi == 1);
  CHECK(with.rows[1].chi == 2);
  CHECK(with.disc == 2);
  REQUIRE(with.rows[1].predicted.has_value());
  CHECK(*with.rows[1].predicted == doctest::Approx(bound_disc_halfspaces(2, 4, 3)));
  auto without = discrepancy_report(sys, chi, std::nullopt);
  CHECK_FALSE(without.rows[0].predicted.has_value());
}
