#include <benchmark/benchmark.h>

#include "shallowpack/generators.hpp"
#include "shallowpack/point_set.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/set_system.hpp"

namespace {

using namespace shallowpack;

IncidenceVector random_vector(std::size_t n, Rng& rng) {
  IncidenceVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.coin()) v.set(i);
  }
  return v;
}

void BM_Distance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto a = random_vector(n, rng);
  const auto b = random_vector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(distance(a, b));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(n / 4));
}
BENCHMARK(BM_Distance)->RangeMultiplier(4)->Range(64, 16384);

void BM_Halfplanes(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_halfspaces(pts));
}
BENCHMARK(BM_Halfplanes)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_Halfspaces3d(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_halfspaces(pts));
}
BENCHMARK(BM_Halfspaces3d)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

void BM_Disks(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_balls(pts));
}
BENCHMARK(BM_Disks)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
  const auto sys = build_halfspaces(random_points(256, 2, 3));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < 256; i += 2) idx.push_back(i);
  const IndexSample sample(256, idx);
  for (auto _ : state) benchmark::DoNotOptimize(projection_size(sys, sample));
}
BENCHMARK(BM_Project)->Unit(benchmark::kMillisecond);

}  // namespace
