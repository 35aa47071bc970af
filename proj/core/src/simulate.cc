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

#include "domlab/simulate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <memory>
#include <thread>

#include "domlab/algo_spec.h"
#include "domlab/errors.h"
#include "domlab/learner.h"
#include "domlab/metrics.h"
#include "domlab/rng.h"

namespace domlab {
namespace {

constexpr std::uint64_t kEnvStream = 0;

std::uint64_t SamplingStream(int agent) { return 1 + 2 * static_cast<std::uint64_t>(agent); }
std::uint64_t NoiseStream(int agent) { return 2 + 2 * static_cast<std::uint64_t>(agent); }

std::vector<std::unique_ptr<Learner>> MakeAgents(const Game& game,
                                                 const RunConfig& config) {
  const int n = game.NumPlayers();
  if (config.algos.size() != 1 && static_cast<int>(config.algos.size()) != n) {
    throw UsageError("need one algorithm for all agents or one per agent");
  }
  std::vector<std::unique_ptr<Learner>> agents;
  for (int i = 0; i < n; ++i) {
    const auto& text = config.algos.size() == 1 ? config.algos[0] : config.algos[i];
    agents.push_back(MakeLearner(ParseAlgoSpec(text), game.NumActions(i)));
  }
  return agents;
}

Checkpoint Record(std::int64_t t, const EliminationPath& path,
                  const std::vector<std::unique_ptr<Learner>>& agents) {
  Checkpoint c;
  c.t = t;
  for (const auto& agent : agents) c.distributions.push_back(agent->Distribution());
  if (path.Length() > 0) c.poe = Poe(path, c.distributions);
  c.ne_mass = NeMass(path, c.distributions);
  c.max_dom_prob = MaxDominatedProb(path, c.distributions);
  return c;
}

}  // namespace

std::string FeedbackModeName(FeedbackMode mode) {
  return mode == FeedbackMode::kBandit ? "bandit" : "exact-gradient";
}

FeedbackMode ParseFeedbackMode(const std::string& name) {
  if (name == "bandit") return FeedbackMode::kBandit;
  if (name == "exact-gradient" || name == "exact") {
    return FeedbackMode::kExactGradient;
  }
  throw UsageError("unknown feedback mode \"" + name + "\"");
}

Trace RunSelfPlay(const Game& game, const EliminationPath& path,
                  const RunConfig& config) {
  if (config.horizon < 1) throw UsageError("horizon T must be >= 1");
  if (!(config.noise_std >= 0.0) || !std::isfinite(config.noise_std)) {
    throw UsageError("noise std must be >= 0");
  }
  if (path.action_counts != game.ActionCounts()) {
    throw UsageError("elimination path does not match the game");
  }
  std::vector<std::int64_t> checkpoints =
      config.checkpoints.empty() ? CheckpointTimes(config.horizon)
                                 : config.checkpoints;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 || checkpoints[i] > config.horizon ||
        (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw UsageError("checkpoints must increase within [0, T]");
    }
  }
  auto agents = MakeAgents(game, config);
  const int n = game.NumPlayers();
  const bool exact = config.feedback == FeedbackMode::kExactGradient;
  for (const auto& agent : agents) {
    const auto want = exact ? FeedbackKind::kFullVector : FeedbackKind::kBandit;
    if (agent->Feedback() != want) {
      throw CapabilityError(agent->Name() + " cannot run with " +
                            FeedbackModeName(config.feedback) + " feedback");
    }
  }
  if (exact) {
    if (!game.SupportsExactExpectation()) {
      throw CapabilityError(PayoffKindName(game.Kind()) +
                            " games do not support exact-gradient feedback");
    }
    if (config.noise_std > 0.0) {
      throw UsageError("exact-gradient feedback is noise-free; drop the noise");
    }
  }
  const double scale = game.PayoffBound() > 0.0 ? game.PayoffBound() : 1.0;

  Rng env(StreamSeed(config.seed, kEnvStream));
  std::vector<Rng> sampling;
  std::vector<Rng> noise;
  for (int i = 0; i < n; ++i) {
    sampling.emplace_back(StreamSeed(config.seed, SamplingStream(i)));
    noise.emplace_back(StreamSeed(config.seed, NoiseStream(i)));
  }
  std::normal_distribution<double> gauss(0.0, 1.0);

  Trace trace;
  trace.algo = config.algos.size() == 1 ? config.algos[0] : "";
  if (config.algos.size() > 1) {
    for (std::size_t i = 0; i < config.algos.size(); ++i) {
      trace.algo += (i ? "|" : "") + config.algos[i];
    }
  }
  trace.seed = config.seed;

  std::size_t next = 0;
  ActionProfile profile(n);
  std::vector<double> payoffs(n);
  MixedProfile current(n);
  for (std::int64_t t = 0; t < config.horizon; ++t) {
    if (next < checkpoints.size() && checkpoints[next] == t) {
      trace.checkpoints.push_back(Record(t, path, agents));
      ++next;
    }
    if (exact) {
      for (int i = 0; i < n; ++i) current[i] = agents[i]->Distribution();
      for (int i = 0; i < n; ++i) {
        std::vector<double> v = game.ActionPayoffVector(i, current);
        for (double& x : v) x /= scale;
        agents[i]->ObserveVector(v);
      }
      continue;
    }
    for (int i = 0; i < n; ++i) profile[i] = agents[i]->SampleAction(sampling[i]);
    game.Payoffs(profile, &env, payoffs);
    for (int i = 0; i < n; ++i) {
      double reward = payoffs[i] / scale;
      if (config.noise_std > 0.0) reward += config.noise_std * gauss(noise[i]);
      if (!std::isfinite(reward)) throw NumericalError("non-finite payoff");
      agents[i]->ObserveBandit(profile[i], reward);
    }
  }
  if (next < checkpoints.size() && checkpoints[next] == config.horizon) {
    trace.checkpoints.push_back(Record(config.horizon, path, agents));
  }
  return trace;
}

std::vector<Trace> RunBatch(const Game& game, const EliminationPath& path,
                            const std::vector<RunConfig>& configs, int jobs) {
  std::vector<Trace> results(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < configs.size(); i = cursor++) {
      try {
        results[i] = RunSelfPlay(game, path, configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(jobs, static_cast<int>(configs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

EliminationPath MetricPath(const Game& game) {
  if (game.Kind() == PayoffKind::kLemons) {
    LemonsParams params = game.Lemons();
    params.quality_noise_std = 0.0;
    try {
      return LemonsAnalyticPath(params);
    } catch (const AnalyticPathUnavailable&) {
      return Iesds(Game::Lemons(params));
    }
  }
  return Iesds(game);
}

}  // namespace domlab
