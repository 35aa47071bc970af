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

#ifndef DOMLAB_LEARNER_H_
#define DOMLAB_LEARNER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "domlab/game.h"
#include "domlab/rng.h"

namespace domlab {

enum class FeedbackKind { kBandit, kFullVector };

// A sequential decision maker over K actions. Round t starts at 0; each
// Observe* call consumes the feedback of the current round and advances t.
// Distribution() is a pure function of the state and is cached.
class Learner {
 public:
  explicit Learner(int num_actions);
  virtual ~Learner() = default;

  Learner(const Learner&) = delete;
  Learner& operator=(const Learner&) = delete;

  int NumActions() const { return num_actions_; }
  std::int64_t Round() const { return round_; }

  virtual FeedbackKind Feedback() const = 0;
  virtual std::string Name() const = 0;

  // Distribution used to draw the action of the current round.
  const MixedStrategy& Distribution() const;

  int SampleAction(Rng& rng) const { return SampleIndex(Distribution(), rng); }

  // Realized reward of the played action (bandit learners only).
  void ObserveBandit(int played, double reward);
  // Expected payoff of every action (full-vector learners only).
  void ObserveVector(std::span<const double> payoffs);

 protected:
  virtual MixedStrategy ComputeDistribution() const = 0;
  virtual void UpdateBandit(int played, double reward);
  virtual void UpdateVector(std::span<const double> payoffs);

 private:
  int num_actions_;
  std::int64_t round_ = 0;
  mutable std::optional<MixedStrategy> cache_;
};

}  // namespace domlab

#endif  // DOMLAB_LEARNER_H_
