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

#include "domlab/lemma_check.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domlab/errors.h"
#include "domlab/learners.h"

namespace domlab {

double Lemma1Bound(double gap, int num_actions, std::int64_t horizon,
                   double beta, double b, double sigma, double delta) {
  long double sum_gamma = 0.0L;
  long double sum_ratio = 0.0L;
  const long double big_t = static_cast<long double>(horizon);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const long double gamma = std::pow(t / big_t, static_cast<long double>(beta));
    sum_gamma += gamma;
    sum_ratio += gamma * gamma / std::pow(static_cast<long double>(t), -b);
  }
  const long double k = num_actions;
  return static_cast<double>(
      gap * sum_gamma -
      4.0L * std::sqrt(std::log(2.0L * k / delta)) *
          std::sqrt(k * (1.0L + sigma * sigma) * sum_ratio));
}

Lemma1Result Lemma1EmpiricalCheck(const Lemma1Config& config) {
  const Game game = Game::Dir(config.game);
  const int k = config.game.num_actions;
  if (config.trials < 1 || config.horizon < 1) {
    throw UsageError("lemma check: need trials >= 1 and T >= 1");
  }
  ValidateMixedStrategy(config.dominator, k);
  MixedStrategy opponent =
      config.opponent.empty() ? MixedStrategy(k, 1.0 / k) : config.opponent;
  ValidateMixedStrategy(opponent, k);
  if (config.dominated < 0 || config.dominated >= k) {
    throw UsageError("lemma check: dominated action out of range");
  }

  // Gap of the pair against every opponent action.
  double gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j) {
    double mix = 0.0;
    for (int i = 0; i < k; ++i) {
      mix += config.dominator[i] * game.Payoff(0, ActionProfile{i, j});
    }
    gap = std::min(gap, mix - game.Payoff(0, ActionProfile{config.dominated, j}));
  }
  if (!(gap > 0.0)) throw UsageError("lemma check: pair is not a strict dominance");

  Lemma1Result result;
  result.gap = gap;
  result.bound = Lemma1Bound(gap, k, config.horizon, config.beta, config.b,
                             config.sigma, config.delta);
  result.trials = config.trials;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
    Rng own(StreamSeed(seed, 1));
    Rng other(StreamSeed(seed, 3));
    Rng noise(StreamSeed(seed, 2));
    Exp3DH learner(k, config.b, config.beta);
    // Rounds 0..T: the round-0 estimate carries zero weight in y(T+1).
    for (std::int64_t t = 0; t <= config.horizon; ++t) {
      const int a = learner.SampleAction(own);
      const int j = SampleIndex(opponent, other);
      double reward = game.Payoff(0, ActionProfile{a, j});
      if (config.sigma > 0.0) reward += config.sigma * gauss(noise);
      learner.ObserveBandit(a, reward);
    }
    const auto& y = learner.Scores();
    double y_mix = 0.0;
    for (int i = 0; i < k; ++i) y_mix += config.dominator[i] * y[i];
    if (y_mix - y[config.dominated] >= result.bound) ++result.passes;
  }
  result.pass_rate = static_cast<double>(result.passes) / result.trials;
  result.threshold =
      1.0 - config.delta -
      3.0 * std::sqrt(config.delta * (1.0 - config.delta) / result.trials);
  result.ok = result.pass_rate >= result.threshold;
  return result;
}

}  // namespace domlab
