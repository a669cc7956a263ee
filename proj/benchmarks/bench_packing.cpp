#include <benchmark/benchmark.h>

#include "shallowpack/generators.hpp"
#include "shallowpack/packing.hpp"
#include "shallowpack/sampling.hpp"

namespace {

using namespace shallowpack;

const SetSystem& halfplanes512() {
  static const SetSystem sys = build_halfspaces(random_points_on_sphere(512, 2, 1));
  return sys;
}

void BM_GreedyPacking(benchmark::State& state) {
  const auto& sys = halfplanes512();
  const auto delta = static_cast<std::size_t>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) size = greedy_packing(sys, delta, Separation::Strict).size();
  state.counters["packing"] = static_cast<double>(size);
}
BENCHMARK(BM_GreedyPacking)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ShallowGreedyPacking(benchmark::State& state) {
  const auto sys = shallow_filter(halfplanes512(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_packing(sys, 8, Separation::Strict));
}
BENCHMARK(BM_ShallowGreedyPacking)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_MaxPackingBruteforce(benchmark::State& state) {
  const auto sys = build_rectangle_grid_dual(24, 6);
  for (auto _ : state) benchmark::DoNotOptimize(max_packing_bruteforce(sys, 5, Separation::Strict));
}
BENCHMARK(BM_MaxPackingBruteforce)->Unit(benchmark::kMillisecond);

void BM_DrawSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(draw_sample(n, n / 4, ++seed));
}
BENCHMARK(BM_DrawSample)->Arg(256)->Arg(4096);

}  // namespace
