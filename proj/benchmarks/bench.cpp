#include <benchmark/benchmark.h>

#include "tspdisk/encode.hpp"
#include "tspdisk/oracle.hpp"
#include "tspdisk/solver.hpp"

using namespace tspdisk;

static void BM_SolveFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_euclidean(n, 12345, 1000);
  const Complex cx = full_complex(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_exact(inst, cx));
}
BENCHMARK(BM_SolveFull)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_SolveFullNoBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_euclidean(n, 12345, 1000);
  const Complex cx = full_complex(n);
  SolveOptions opts;
  opts.use_bound = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_exact(inst, cx, opts));
}
BENCHMARK(BM_SolveFullNoBound)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_SolveDelaunay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = random_euclidean(n, 777, 1000);
  const Complex cx = restricted_complex(n, delaunay_candidates(inst));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_exact(inst, cx));
}
BENCHMARK(BM_SolveDelaunay)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_HeldKarp(benchmark::State& state) {
  const Instance inst = random_euclidean(static_cast<int>(state.range(0)), 5, 1000);
  for (auto _ : state)
    benchmark::DoNotOptimize(tsp_oracle_held_karp(inst));
}
BENCHMARK(BM_HeldKarp)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_FanEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex cx = full_complex(n);
  Tour tour;
  for (int i = 0; i < n; ++i) tour.order.push_back(i);
  for (auto _ : state)
    benchmark::DoNotOptimize(fan_encode(tour, 0, cx));
}
BENCHMARK(BM_FanEncode)->DenseRange(8, 16, 4);

static void BM_CheckAdmissible(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Complex cx = full_complex(n);
  Tour tour;
  for (int i = 0; i < n; ++i) tour.order.push_back(i);
  const Selection sel = fan_encode(tour, 0, cx);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_admissible(sel));
}
BENCHMARK(BM_CheckAdmissible)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
