#include <benchmark/benchmark.h>

#include "hpopa/boundary.hpp"
#include "hpopa/formulas.hpp"
#include "hpopa/solver.hpp"

namespace {

hpopa::HpFunction test_function(int grid) {
  return hpopa::HpFunction(
      hpopa::TaylorPoly({{1.0, 0.2}, {-0.7, 0.1}, {0.3, -0.4}, {0.1, 0.1}}), grid);
}

void BM_PNorm(benchmark::State& state) {
  const hpopa::HpFunction f = test_function(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpopa::p_norm(f.grid(), 3.0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PNorm)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_SolveL2(benchmark::State& state) {
  const hpopa::HpFunction f = test_function(4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpopa::solve_l2(f, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SolveL2)->Arg(1)->Arg(4)->Arg(8);

void BM_SolveP4(benchmark::State& state) {
  const hpopa::HpFunction f = test_function(4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpopa::solve(f, static_cast<int>(state.range(0)), 4.0));
  }
}
BENCHMARK(BM_SolveP4)->Arg(1)->Arg(3);

void BM_SolveP15(benchmark::State& state) {
  const hpopa::HpFunction f = test_function(4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpopa::solve(f, 1, 1.5));
  }
}
BENCHMARK(BM_SolveP15);

void BM_WeightedMoments(benchmark::State& state) {
  const hpopa::HpFunction f = test_function(4096);
  const hpopa::TaylorPoly q({{0.4, 0.0}, {0.2, 0.1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hpopa::weighted_moments(f, q, 4.0));
  }
}
BENCHMARK(BM_WeightedMoments);

}  // namespace

BENCHMARK_MAIN();
