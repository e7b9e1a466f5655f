#include <benchmark/benchmark.h>

#include "steklov/eigensolve.hpp"

using namespace steklov;

namespace {

GalerkinSystem system_for(int truncation, bool include_sin) {
  BasisSpec s;
  s.include_sin = include_sin;
  s.truncation = truncation;
  return assemble(build_basis(s), polar_inclusion("0.3*(2+0.3*cos(3*theta))", {2.0, 0.5}), 1.0);
}

void BM_SolveSpectrum(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)), state.range(0) > 25);
  for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(sys));
}
BENCHMARK(BM_SolveSpectrum)->Arg(10)->Arg(25)->Arg(45)->Unit(benchmark::kMicrosecond);

void BM_EigenfunctionField(benchmark::State& state) {
  BasisSpec s;
  const auto basis = build_basis(s);
  const auto spectrum = solve_spectrum(assemble(basis, disk_inclusion(0.5, 2.0), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenfunction_field(spectrum, basis, 1, 101));
}
BENCHMARK(BM_EigenfunctionField)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
