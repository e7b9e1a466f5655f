#include <benchmark/benchmark.h>

#include "steklov/specfun.hpp"

using namespace steklov;

namespace {

void BM_BesselJ(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_j(order, x));
    x = x < 45.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(4)->Arg(20)->Arg(40);

void BM_BesselY(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_y(order, x));
    x = x < 45.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_BesselY)->Arg(0)->Arg(4)->Arg(20);

void BM_JPrimeZeros(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::jprime_zeros(3, count));
}
BENCHMARK(BM_JPrimeZeros)->Arg(5)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
