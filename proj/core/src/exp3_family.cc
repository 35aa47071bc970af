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

#include <algorithm>
#include <cmath>

#include "domlab/errors.h"
#include "domlab/learners.h"

namespace domlab {
namespace {

MixedStrategy MixWithUniform(MixedStrategy p, double gamma) {
  const double floor = gamma / static_cast<double>(p.size());
  for (double& v : p) v = (1.0 - gamma) * v + floor;
  return p;
}

}  // namespace

Exp3::Exp3(int num_actions)
    : Learner(num_actions), scores_(num_actions, 0.0) {}

double Exp3::LearningRateAt(std::int64_t t) const {
  const double k = NumActions();
  return std::sqrt(std::log(k) / (k * static_cast<double>(t)));
}

double Exp3::ExplorationAt(std::int64_t t) const {
  const double k = NumActions();
  return std::min(1.0, std::sqrt(k * std::log(k) / static_cast<double>(t)));
}

MixedStrategy Exp3::ComputeDistribution() const {
  const std::int64_t t = Round() + 1;
  if (NumActions() == 1) return {1.0};
  std::vector<double> y = EffectiveScores();
  const double eta = LearningRateAt(t);
  for (double& v : y) v *= eta;
  return MixWithUniform(Softmax(y), ExplorationAt(t));
}

void Exp3::UpdateBandit(int played, double reward) {
  scores_[played] += reward / Distribution()[played];
}

Exp3Rvu::Exp3Rvu(int num_actions)
    : Exp3(num_actions), last_estimate_(num_actions, 0.0) {}

std::vector<double> Exp3Rvu::EffectiveScores() const {
  std::vector<double> y = scores_;
  for (int i = 0; i < NumActions(); ++i) y[i] += last_estimate_[i];
  return y;
}

void Exp3Rvu::UpdateBandit(int played, double reward) {
  const double estimate = reward / Distribution()[played];
  std::fill(last_estimate_.begin(), last_estimate_.end(), 0.0);
  last_estimate_[played] = estimate;
  scores_[played] += estimate;
}

Exp3P::Exp3P(int num_actions, std::int64_t horizon, double delta)
    : Learner(num_actions), scores_(num_actions, 0.0) {
  if (horizon < 1) throw UsageError("exp3p: horizon T must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw UsageError("exp3p: delta must lie in (0, 1)");
  }
  const double k = num_actions;
  const double n = static_cast<double>(horizon);
  const double log_k = std::log(std::max(k, 2.0));
  bonus_ = std::sqrt(std::log(k / delta) / (n * k));
  eta_ = 0.95 * std::sqrt(log_k / (n * k));
  gamma_ = std::min(1.0, 1.05 * std::sqrt(k * log_k / n));
}

MixedStrategy Exp3P::ComputeDistribution() const {
  std::vector<double> y = scores_;
  for (double& v : y) v *= eta_;
  return MixWithUniform(Softmax(y), gamma_);
}

void Exp3P::UpdateBandit(int played, double reward) {
  const MixedStrategy& p = Distribution();
  for (int i = 0; i < NumActions(); ++i) {
    const double gain = (i == played ? reward : 0.0) + bonus_;
    scores_[i] += gain / p[i];
  }
}

}  // namespace domlab
