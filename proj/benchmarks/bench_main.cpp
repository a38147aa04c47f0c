#include <benchmark/benchmark.h>

#include "braidrep/bratteli.hpp"
#include "braidrep/constructions.hpp"

using namespace braidrep;

static void BM_BuildUT4(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ut4(D).dim(D));
}
BENCHMARK(BM_BuildUT4)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SolveEven(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(1, D, true).phi.degree());
}
BENCHMARK(BM_SolveEven)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_LiftHecke(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  Associator phi = solve(1, D, true);
  InfRep r = hecke_rep({3, 1}, FieldElem(1, 3), FieldElem(2));
  for (auto _ : state) benchmark::DoNotOptimize(lift(r, phi).N());
}
BENCHMARK(BM_LiftHecke)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BratteliBuild(benchmark::State& state) {
  InfRep r = hecke_rep({3, 2, 1}, FieldElem(2, 3), FieldElem(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_from_chain(r).n());
}
BENCHMARK(BM_BratteliBuild)->Unit(benchmark::kMillisecond);

static void BM_ValidateHecke(benchmark::State& state) {
  InfRep r = hecke_rep({3, 2}, FieldElem(1, 2), FieldElem(3));
  for (auto _ : state) benchmark::DoNotOptimize(validate(r).valid());
}
BENCHMARK(BM_ValidateHecke)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
