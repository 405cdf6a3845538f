/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "coh/channels.hpp"
#include "coh/linalg.hpp"
#include "coh/random.hpp"
#include "coh/rates.hpp"
#include "coh/smoothing.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace {

using namespace coh;

void bench_waterfilling(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const GroupedDistribution p = dephase(random_pure_state(d, rng).projector());
  const double cap = 1.2 / d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_fidelity_capped(p, cap));
  }
}
BENCHMARK(bench_waterfilling)->Arg(8)->Arg(64)->Arg(512);

void bench_smoothed_min_entropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const GroupedDistribution p = dephase(random_pure_state(d, rng).projector());
  for (auto _ : state) {
    benchmark::DoNotOptimize(smoothed_min_entropy_pure(p, 0.05, d));
  }
}
BENCHMARK(bench_smoothed_min_entropy)->Arg(8)->Arg(64);

void bench_channel_synthesis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  const PureState psi = random_pure_state(d, rng);
  const std::vector<double> p = psi.probabilities();
  const int m = std::max(1, static_cast<int>(std::floor(1.0 / *std::max_element(p.begin(), p.end()))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_concentration_channel(psi, m));
  }
}
BENCHMARK(bench_channel_synthesis)->Arg(4)->Arg(8)->Arg(16);

void bench_ncopy_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sqrt9 = std::sqrt(0.9), sqrt1 = std::sqrt(0.1);
  ComplexVector a(2), b(2);
  a << sqrt9, sqrt1;
  b << sqrt1, sqrt9;
  const PureEnsemble e({{0.5, PureState(a)}, {0.5, PureState(b)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ncopy_sweep(e, 0.05, n));
  }
}
BENCHMARK(bench_ncopy_sweep)->Arg(5)->Arg(15)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
