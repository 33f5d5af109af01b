#include <benchmark/benchmark.h>

#include "siegel/dirichlet.hpp"
#include "siegel/gf.hpp"
#include "siegel/nonvanishing.hpp"
#include "siegel/signs.hpp"

using namespace siegel;

namespace {

HeckeSeed satake_fixture(std::uint64_t p, std::uint64_t salt) {
  Rng rng(salt);
  return satake_to_seed(SatakePair{rng.uniform(0, M_PI), rng.uniform(0, M_PI)}, p);
}

void BM_RecurrenceFloat(benchmark::State& state) {
  HeckeSeed seed = satake_fixture(97, 1);
  RealSeed view = real_view(seed);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto lam = lambda_powers(view, n);
    benchmark::DoNotOptimize(lam.data());
  }
}
BENCHMARK(BM_RecurrenceFloat)->Arg(14)->Arg(64);

void BM_RecurrenceExact(benchmark::State& state) {
  HeckeSeed seed = make_seed(97, ratio(3, 2), ratio(-5, 4));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto lam = lambda_powers(seed, n);
    benchmark::DoNotOptimize(lam.data());
  }
}
BENCHMARK(BM_RecurrenceExact)->Arg(14)->Arg(64);

void BM_RankinFactorFloat(benchmark::State& state) {
  HeckeSeed f = satake_fixture(5, 2);
  HeckeSeed g = satake_fixture(5, 3);
  for (auto _ : state) {
    auto fac = local_rankin_factor_real(f, g);
    benchmark::DoNotOptimize(fac.gp.data());
  }
}
BENCHMARK(BM_RankinFactorFloat);

void BM_FirstJointNonvanishing(benchmark::State& state) {
  HeckeSeed f = satake_fixture(7, 4);
  HeckeSeed g = satake_fixture(7, 5);
  for (auto _ : state) {
    auto w = first_joint_nonvanishing_real(f, g);
    benchmark::DoNotOptimize(w.n);
  }
}
BENCHMARK(BM_FirstJointNonvanishing);

void BM_TableExtension(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  EigenSystem sys = sample_system(SamplingMeasure::parse("uniform"), primes_up_to(n), 6);
  for (auto _ : state) {
    auto table = extend_multiplicative(sys, n);
    benchmark::DoNotOptimize(table.value.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_TableExtension)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_SignCensus(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  EigenSystem sysF = sample_system(SamplingMeasure::parse("uniform"), primes_up_to(n), 7);
  EigenSystem sysG = sample_system(SamplingMeasure::parse("uniform"), primes_up_to(n), 8);
  EigenTable<double> f = extend_multiplicative(sysF, n);
  EigenTable<double> g = extend_multiplicative(sysG, n);
  for (auto _ : state) {
    auto census = sign_census(f, g, n);
    benchmark::DoNotOptimize(census.pos);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SignCensus)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.trials = static_cast<std::uint64_t>(state.range(0));
  cfg.rng_seed = 9;
  cfg.workers = 1;
  for (auto _ : state) {
    auto rep = sweep_nonvanishing(cfg);
    benchmark::DoNotOptimize(rep.max_index);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
