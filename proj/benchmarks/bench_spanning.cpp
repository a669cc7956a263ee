#include <benchmark/benchmark.h>

#include "shallowpack/generators.hpp"
#include "shallowpack/measures.hpp"
#include "shallowpack/sampling.hpp"
#include "shallowpack/sketch.hpp"
#include "shallowpack/spanning.hpp"

namespace {

using namespace shallowpack;

SetSystem halfplane_sets(std::size_t m) {
  const auto full = build_halfspaces(random_points(128, 2, 5));
  return full.subsystem(draw_sample(full.size(), m, 9).indices());
}

void BM_ExactMst(benchmark::State& state) {
  const auto sys = halfplane_sets(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_mst(sys));
}
BENCHMARK(BM_ExactMst)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond);

void BM_ApproxMst(benchmark::State& state) {
  const auto sys = halfplane_sets(static_cast<std::size_t>(state.range(0)));
  const auto sketch = build_sketch(sys, 64, geometric_schedule(128), 3);
  for (auto _ : state) benchmark::DoNotOptimize(approx_mst(sys, sketch, 0.5, 3));
}
BENCHMARK(BM_ApproxMst)->RangeMultiplier(2)->Range(128, 2048)->Unit(benchmark::kMillisecond);

void BM_BuildSketch(benchmark::State& state) {
  const auto sys = halfplane_sets(1024);
  const auto mu = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sketch(sys, mu, geometric_schedule(128), 3));
}
BENCHMARK(BM_BuildSketch)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TreeWalk(benchmark::State& state) {
  const auto pts = clustered_points(128, 2, 5, 0.05, 4);
  const auto full = build_halfspaces(pts);
  const auto sys = full.subsystem(draw_sample(full.size(), 500, 1).indices());
  const auto tree = exact_mst(sys);
  for (auto _ : state) benchmark::DoNotOptimize(traverse_and_measure(sys, tree, pts, Measure::BboxVolume));
}
BENCHMARK(BM_TreeWalk)->Unit(benchmark::kMillisecond);

void BM_BruteForceMeasure(benchmark::State& state) {
  const auto pts = clustered_points(128, 2, 5, 0.05, 4);
  const auto full = build_halfspaces(pts);
  const auto sys = full.subsystem(draw_sample(full.size(), 500, 1).indices());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_measure(sys, pts, Measure::BboxVolume));
}
BENCHMARK(BM_BruteForceMeasure)->Unit(benchmark::kMillisecond);

}  // namespace
