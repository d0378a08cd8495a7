// Copyright 2026 The qpcodes Authors.
//
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

#include "qpcodes/code_analysis.hpp"
#include "qpcodes/exact_ball.hpp"
#include "qpcodes/lattice.hpp"
#include "qpcodes/search.hpp"

namespace qpcodes {
namespace {

void BM_BallPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PowRadius s(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ball_points(n, 2, s));
  state.SetItemsProcessed(state.iterations() * mu(n, 2, s));
}
BENCHMARK(BM_BallPoints)->Args({2, 74})->Args({2, 833})->Args({3, 49});

void BM_DistanceSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(distance_set(2, 2, PowRadius(state.range(0))));
}
BENCHMARK(BM_DistanceSet)->Arg(1 << 12)->Arg(1 << 16);

void BM_InjectivityTest(benchmark::State& state) {
  const HnfBasis h = hnf(LatticeBasis(parse_matrix("1,12;0,241")));
  for (auto _ : state) benchmark::DoNotOptimize(injectivity_test(h, 2, PowRadius(state.range(0))));
}
BENCHMARK(BM_InjectivityTest)->Arg(45)->Arg(74);

void BM_Analyze(benchmark::State& state) {
  const LatticeBasis b(parse_matrix(state.range(0) == 2 ? "1,5;0,24" : "1,0,5;0,1,41;0,0,105"));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(b, 2));
}
BENCHMARK(BM_Analyze)->Arg(2)->Arg(3);

void BM_CanonicalForm(benchmark::State& state) {
  const LatticeBasis b(parse_matrix("1,0,5;0,1,41;0,0,105"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_congruence_form(b));
}
BENCHMARK(BM_CanonicalForm);

void BM_PlanarSearch(benchmark::State& state) {
  SearchQuery q;
  q.volume_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run_search(q, {.jobs = 1}));
}
BENCHMARK(BM_PlanarSearch)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qpcodes

BENCHMARK_MAIN();
