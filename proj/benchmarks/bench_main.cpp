// Copyright 2026 The Polywaring Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "polywaring/arcs.hpp"
#include "polywaring/expsums.hpp"
#include "polywaring/figurate.hpp"
#include "polywaring/localdensity.hpp"
#include "polywaring/repcount.hpp"
#include "polywaring/singularintegral.hpp"
#include "polywaring/singularseries.hpp"
#include "polywaring/weylbounds.hpp"

namespace pw = polywaring;

namespace {

const pw::FigurateSpec& f1() {
  static const auto spec = pw::catalog("f1");
  return spec;
}

void BM_CountRepresentations(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pw::count_representations(f1(), 17, m));
}
BENCHMARK(BM_CountRepresentations)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_CountProfileDft(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pw::count_profile_via_dft(f1(), 4, m));
}
BENCHMARK(BM_CountProfileDft)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_WeylSum(benchmark::State& state) {
  const auto N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pw::weyl_sum(f1(), N, 0.1234567));
}
BENCHMARK(BM_WeylSum)->Arg(1000)->Arg(100000);

void BM_MeanValue(benchmark::State& state) {
  const auto j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pw::mean_value(f1(), 40, j));
}
BENCHMARK(BM_MeanValue)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SeriesTerms(benchmark::State& state) {
  const auto Q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pw::series_terms(f1(), 17, 100000, Q));
}
BENCHMARK(BM_SeriesTerms)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_LocalDensity(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pw::local_density(f1(), 17, 100000, 3, k));
}
BENCHMARK(BM_LocalDensity)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_J1Profile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pw::j1_profile(17, 5000));
}
BENCHMARK(BM_J1Profile)->Unit(benchmark::kMillisecond);

void BM_WeylDifferencing(benchmark::State& state) {
  const pw::QuarticPhase phase{{0.31, -0.17, 0.053, 0.0071}};
  for (auto _ : state) benchmark::DoNotOptimize(pw::check_weyl_differencing(phase, 30, 3));
}
BENCHMARK(BM_WeylDifferencing)->Unit(benchmark::kMillisecond);

void BM_MajorArcs(benchmark::State& state) {
  const auto m = state.range(0);
  const auto d = pw::dissect(pw::choose_N(72, m), pw::Rational{73, 372});
  for (auto _ : state) benchmark::DoNotOptimize(pw::major_arc_integral(f1(), 3, m, d));
}
BENCHMARK(BM_MajorArcs)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
