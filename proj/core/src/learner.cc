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

#include "domlab/learner.h"

#include <cmath>
#include <string>

#include "domlab/errors.h"

namespace domlab {

Learner::Learner(int num_actions) : num_actions_(num_actions) {
  if (num_actions < 1) throw UsageError("learner needs at least one action");
}

const MixedStrategy& Learner::Distribution() const {
  if (!cache_) cache_ = ComputeDistribution();
  return *cache_;
}

void Learner::ObserveBandit(int played, double reward) {
  if (Feedback() != FeedbackKind::kBandit) {
    throw CapabilityError(Name() + " consumes full payoff vectors, not "
                          "bandit feedback");
  }
  if (played < 0 || played >= num_actions_) {
    throw UsageError("played action " + std::to_string(played) +
                     " out of range");
  }
  if (!std::isfinite(reward)) throw UsageError("non-finite reward");
  UpdateBandit(played, reward);
  ++round_;
  cache_.reset();
}

void Learner::ObserveVector(std::span<const double> payoffs) {
  if (Feedback() != FeedbackKind::kFullVector) {
    throw CapabilityError(Name() + " only accepts bandit feedback");
  }
  if (static_cast<int>(payoffs.size()) != num_actions_) {
    throw UsageError("payoff vector has wrong length");
  }
  for (double v : payoffs) {
    if (!std::isfinite(v)) throw UsageError("non-finite payoff vector");
  }
  UpdateVector(payoffs);
  ++round_;
  cache_.reset();
}

void Learner::UpdateBandit(int, double) {
  throw CapabilityError(Name() + ": bandit feedback unsupported");
}

void Learner::UpdateVector(std::span<const double>) {
  throw CapabilityError(Name() + ": full-vector feedback unsupported");
}

}  // namespace domlab
