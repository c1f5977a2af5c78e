#include <benchmark/benchmark.h>

#include "gotzmann/census.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/verify.hpp"

using namespace gotzmann;

static void BM_GrowthClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Count d = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth_S(d, n));
    d = d % 100000 + 1;
  }
}
BENCHMARK(BM_GrowthClosedForm)->Arg(3)->Arg(5)->Arg(8);

static void BM_GrowthShadowOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Count dim = dim_degree(RingSpec::polynomial(n), 6);
  for (auto _ : state) benchmark::DoNotOptimize(growth_S_oracle(dim / 2, n, 6));
}
BENCHMARK(BM_GrowthShadowOracle)->Arg(3)->Arg(5);

static void BM_GrowthQuotient(benchmark::State& state) {
  for (auto _ : state)
    for (Count d = 1; d <= 60; ++d) benchmark::DoNotOptimize(growth_R(d, 4, 3, 8));
}
BENCHMARK(BM_GrowthQuotient);

static void BM_Shadow(benchmark::State& state) {
  const auto seg = lex_segment(RingSpec::polynomial(5), 6, static_cast<Count>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shadow(seg).size());
}
BENCHMARK(BM_Shadow)->Arg(10)->Arg(100)->Arg(200);

static void BM_Census(benchmark::State& state) {
  CensusOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_gotzmann(RingSpec::polynomial(3), 4, static_cast<Count>(state.range(0)), opts));
}
BENCHMARK(BM_Census)->Args({4, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_CensusPruned(benchmark::State& state) {
  CensusOptions opts;
  opts.prune = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_gotzmann(RingSpec::polynomial(3), 4, static_cast<Count>(state.range(0)), opts));
}
BENCHMARK(BM_CensusPruned)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TwoLexSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n = {3, 3};
  cfg.a = {1, 4};
  cfg.t = {0, 6};
  cfg.d = {1, 1000};
  for (auto _ : state) benchmark::DoNotOptimize(sweep_two_lex(cfg));
}
BENCHMARK(BM_TwoLexSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
