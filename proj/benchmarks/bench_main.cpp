#include <benchmark/benchmark.h>

#include <random>

#include "krein/parameters.hpp"
#include "krein/qmc.hpp"
#include "krein/scheme.hpp"
#include "krein/spectral.hpp"

namespace {

void BM_DecomposeJohnson(benchmark::State& state) {
  const auto s = krein::build_johnson(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(krein::decompose(s));
  state.counters["n"] = s.n();
}
BENCHMARK(BM_DecomposeJohnson)->Args({6, 3})->Args({8, 3})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_BuildGrassmann(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int v = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(krein::build_grassmann(q, v, 2));
}
BENCHMARK(BM_BuildGrassmann)->Args({2, 4})->Args({2, 5})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_KreinParameters(benchmark::State& state) {
  const auto dec = krein::decompose(krein::build_johnson(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(krein::krein_parameters(dec));
}
BENCHMARK(BM_KreinParameters)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SzegedyWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  krein::RMatrix d(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) d(i, j) = u(rng);
    d.col(j) /= d.col(j).sum();
  }
  for (auto _ : state) benchmark::DoNotOptimize(krein::szegedy_walk(d));
}
BENCHMARK(BM_SzegedyWalk)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
