#include <benchmark/benchmark.h>

#include <complex>

#include "unitary/catalog.hpp"
#include "unitary/characters.hpp"
#include "unitary/integers.hpp"
#include "unitary/series.hpp"
#include "unitary/weight.hpp"

namespace {

void BM_Factorize64(benchmark::State& state) {
  std::int64_t n = 1000000007LL * 999999937LL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitary::factorize(n));
  }
}
BENCHMARK(BM_Factorize64);

void BM_FactorizeSmallRange(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n <= 10000; ++n) acc += unitary::factorize(n).omega();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FactorizeSmallRange);

void BM_SeriesEvalTwoOmega(benchmark::State& state) {
  const auto kernel = unitary::catalog::two_omega();
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitary::series_eval(kernel, {2.0, 0.0}, n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SeriesEvalTwoOmega)->Arg(100000)->Arg(1000000);

void BM_AxiomSuiteCoprime(benchmark::State& state) {
  const auto w = unitary::WeightFn::coprime(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitary::check_all_axioms(w, state.range(0)));
  }
}
BENCHMARK(BM_AxiomSuiteCoprime)->Arg(1000)->Arg(5000);

void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(unitary::characters(state.range(0)));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(24)->Arg(360);

}  // namespace

BENCHMARK_MAIN();
