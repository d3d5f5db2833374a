#include <benchmark/benchmark.h>

#include <random>

#include "schmidt/enumerate.hpp"
#include "schmidt/phi.hpp"
#include "schmidt/qseries.hpp"
#include "schmidt/verify.hpp"

using namespace schmidt;

static void BM_PhiForward(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<Int> d(-9, 9);
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(phi_forward(a));
}
BENCHMARK(BM_PhiForward)->Arg(3)->Arg(10)->Arg(50);

static void BM_PhiRoundTrip(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = static_cast<Int>(i * 7 + j * 3) % 11 - 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(phi_inverse(phi_forward(a), k));
}
BENCHMARK(BM_PhiRoundTrip)->Arg(10)->Arg(50);

static void BM_EnumeratePartitions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partitions(state.range(0)));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30);

static void BM_EnumerateSchmidtOver(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_overpartitions(state.range(0), 2, true));
}
BENCHMARK(BM_EnumerateSchmidtOver)->Arg(8)->Arg(12);

static void BM_SeriesInvert(benchmark::State& state) {
  const auto e = pochhammer(1, 1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(e));
}
BENCHMARK(BM_SeriesInvert)->Arg(100)->Arg(500);

static void BM_DiamondSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diamond_gf(2, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DiamondSeries)->Arg(50)->Arg(200);

static void BM_VerifyFg(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection(Theorem::f_eq_g, state.range(0), 2));
}
BENCHMARK(BM_VerifyFg)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
