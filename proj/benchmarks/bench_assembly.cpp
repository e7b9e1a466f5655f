#include <benchmark/benchmark.h>

#include "steklov/assembly.hpp"

using namespace steklov;

namespace {

BasisSet basis(int truncation, bool include_sin) {
  BasisSpec s;
  s.include_sin = include_sin;
  s.truncation = truncation;
  return build_basis(s);
}

void BM_AssembleDiskInclusion(benchmark::State& state) {
  const auto b = basis(static_cast<int>(state.range(0)), false);
  const auto medium = disk_inclusion(0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(b, medium, 1.0, {}, 1));
}
BENCHMARK(BM_AssembleDiskInclusion)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_AssemblePearWithSines(benchmark::State& state) {
  const auto b = basis(45, true);
  const auto medium = polar_inclusion("0.3*(2+0.3*cos(3*theta))", 2.0);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(b, medium, 1.0, {}, threads));
}
BENCHMARK(BM_AssemblePearWithSines)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AssembleExpression(benchmark::State& state) {
  const auto b = basis(25, false);
  const auto medium = expression_medium("2+r*(sin(theta)-cos(theta))");
  for (auto _ : state) benchmark::DoNotOptimize(assemble(b, medium, 1.0, {}, 1));
}
BENCHMARK(BM_AssembleExpression)->Unit(benchmark::kMillisecond);

void BM_BasisConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(basis(45, true));
}
BENCHMARK(BM_BasisConstruction);

}  // namespace

BENCHMARK_MAIN();
