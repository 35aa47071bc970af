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

#ifndef DOMLAB_SIMULATE_H_
#define DOMLAB_SIMULATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domlab/game.h"
#include "domlab/iesds.h"

namespace domlab {

enum class FeedbackMode { kBandit, kExactGradient };

std::string FeedbackModeName(FeedbackMode mode);
FeedbackMode ParseFeedbackMode(const std::string& name);

struct RunConfig {
  // One algorithm string shared by every agent, or one per agent.
  std::vector<std::string> algos;
  std::int64_t horizon = 1;
  FeedbackMode feedback = FeedbackMode::kBandit;
  // Gaussian observation noise on the normalized reward scale.
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  // Empty means CheckpointTimes(horizon).
  std::vector<std::int64_t> checkpoints;
};

struct Checkpoint {
  std::int64_t t = 0;
  MixedProfile distributions;
  std::optional<double> poe;
  std::optional<double> ne_mass;
  double max_dom_prob = 0.0;
};

struct Trace {
  std::string algo;  // label of the run (the shared spec text)
  std::uint64_t seed = 0;
  std::vector<Checkpoint> checkpoints;
};

// Self-play of the configured learners on `game`. Distributions recorded
// at checkpoint t are the ones used to draw round t (t = T: after the last
// round). Rewards fed to learners are payoffs divided by the game's payoff
// bound. Deterministic in config.seed.
Trace RunSelfPlay(const Game& game, const EliminationPath& path,
                  const RunConfig& config);

// Runs every config, using up to `jobs` threads; results are returned in
// input order regardless of scheduling.
std::vector<Trace> RunBatch(const Game& game, const EliminationPath& path,
                            const std::vector<RunConfig>& configs, int jobs);

// Path used for metrics: exact IESDS when the game is small and
// deterministic, else the closed-form lemons path (computed on the
// noise-free parameters).
EliminationPath MetricPath(const Game& game);

}  // namespace domlab

#endif  // DOMLAB_SIMULATE_H_
