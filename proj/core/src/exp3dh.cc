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

#include <cmath>

#include "domlab/errors.h"
#include "domlab/learners.h"

namespace domlab {

Exp3DH::Exp3DH(int num_actions, double b, double beta)
    : Learner(num_actions), b_(b), beta_(beta), scores_(num_actions, 0.0) {
  if (!(b > 0.0 && b < 1.0)) throw UsageError("exp3dh: b must lie in (0, 1)");
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw UsageError("exp3dh: beta must be >= 0");
  }
}

double Exp3DH::ExplorationRate(std::int64_t t, double b) {
  return t == 0 ? 1.0 : std::pow(static_cast<double>(t), -b);
}

double Exp3DH::DiscountFactor(std::int64_t t, double beta) {
  // y(t+1) = sum_{tau<=t} (tau/t)^beta u(tau) unrolls to the factor
  // ((t-1)/t)^beta on y(t). Rounds 0 and 1 start from a clean slate.
  if (t <= 1) return beta == 0.0 ? 1.0 : 0.0;
  const double td = static_cast<double>(t);
  return std::pow((td - 1.0) / td, beta);
}

MixedStrategy Exp3DH::DistributionFor(std::span<const double> y,
                                      std::int64_t t, double b) {
  const double eps = ExplorationRate(t, b);
  MixedStrategy p = Softmax(y);
  const double floor = eps / static_cast<double>(y.size());
  for (double& v : p) v = (1.0 - eps) * v + floor;
  return p;
}

MixedStrategy Exp3DH::ComputeDistribution() const {
  return DistributionFor(scores_, Round(), b_);
}

void Exp3DH::UpdateBandit(int played, double reward) {
  const double p = Distribution()[played];
  const double factor = DiscountFactor(Round(), beta_);
  for (double& y : scores_) y *= factor;
  scores_[played] += reward / p;
}

}  // namespace domlab
