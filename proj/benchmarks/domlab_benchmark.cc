// Copyright 2026 The domlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "domlab/algo_spec.h"
#include "domlab/iesds.h"
#include "domlab/learners.h"
#include "domlab/simulate.h"

namespace domlab {
namespace {

void BM_IesdsDir(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Game g = Game::Dir({k, 2.0 * k});
  for (auto _ : state) benchmark::DoNotOptimize(Iesds(g));
}
BENCHMARK(BM_IesdsDir)->Arg(5)->Arg(10)->Arg(20);

void BM_IesdsRandom(benchmark::State& state) {
  const Game g = MakeRandomGame(2, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Iesds(g));
}
BENCHMARK(BM_IesdsRandom)->Arg(10)->Arg(30);

void BM_LemonsAnalyticPath(benchmark::State& state) {
  const LemonsParams p = LemonsParams::Standard(
      static_cast<int>(state.range(0)), 3.0, 1.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(LemonsAnalyticPath(p));
}
BENCHMARK(BM_LemonsAnalyticPath)->Arg(50)->Arg(500);

// One observe/distribution cycle of a single learner with K actions.
void BM_LearnerStep(benchmark::State& state, const char* spec) {
  const int k = static_cast<int>(state.range(0));
  auto learner = MakeLearner(ParseAlgoSpec(spec), k);
  Rng rng(1);
  for (auto _ : state) {
    const int a = learner->SampleAction(rng);
    learner->ObserveBandit(a, UniformUnit(rng));
  }
}
BENCHMARK_CAPTURE(BM_LearnerStep, exp3dh, "exp3dh:b=0.2,beta=20")->Arg(10)->Arg(51);
BENCHMARK_CAPTURE(BM_LearnerStep, exp3, "exp3")->Arg(10)->Arg(51);
BENCHMARK_CAPTURE(BM_LearnerStep, exp3pswap, "exp3pswap:T=1000000")->Arg(10)->Arg(51);
BENCHMARK_CAPTURE(BM_LearnerStep, omdlb, "omdlb:T=1000000")->Arg(10)->Arg(51);

void BM_SelfPlayDir(benchmark::State& state) {
  const Game g = Game::Dir({10, 20.0});
  const EliminationPath path = Iesds(g);
  RunConfig config;
  config.algos = {"exp3dh:b=0.2,beta=20"};
  config.horizon = state.range(0);
  config.noise_std = 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(RunSelfPlay(g, path, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SelfPlayDir)->Arg(10000);

void BM_SelfPlayLemons(benchmark::State& state) {
  const Game g = Game::Lemons(LemonsParams::Standard(50, 3.0, 1.5, 5.0));
  const EliminationPath path = MetricPath(g);
  RunConfig config;
  config.algos = {"exp3dh:b=0.5,beta=33"};
  config.horizon = state.range(0);
  config.noise_std = 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(RunSelfPlay(g, path, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SelfPlayLemons)->Arg(1000);

}  // namespace
}  // namespace domlab

BENCHMARK_MAIN();
