#include <benchmark/benchmark.h>

#include "q1lab/families.hpp"
#include "q1lab/spectral.hpp"
#include "q1lab/verify.hpp"

namespace {

using namespace q1lab;

void BM_JacobiQ1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = turan(n, std::max(2, n / 3));
  for (auto _ : state) benchmark::DoNotOptimize(q1(g));
}
BENCHMARK(BM_JacobiQ1)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CliqueNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = turan(n, std::max(2, n / 4));
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32)->Arg(64);

void BM_ZykovStep(benchmark::State& state) {
  const Graph g = kite(12, 5);
  for (auto _ : state) benchmark::DoNotOptimize(zykov_step(g));
}
BENCHMARK(BM_ZykovStep);

void BM_SharpnessSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SweepOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_sweep(n, opts));
}
BENCHMARK(BM_SharpnessSweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CountConnectedDedup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_connected(n, true, 1));
}
BENCHMARK(BM_CountConnectedDedup)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
