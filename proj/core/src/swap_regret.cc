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

std::optional<MixedStrategy> PowerIteration(const std::vector<double>& m,
                                            int k, MixedStrategy start,
                                            double tolerance,
                                            int max_iterations) {
  if (k < 1 || m.size() != static_cast<std::size_t>(k) * k) {
    throw UsageError("power iteration: matrix shape mismatch");
  }
  MixedStrategy p = start.empty() ? MixedStrategy(k, 1.0 / k) : start;
  if (static_cast<int>(p.size()) != k) {
    throw UsageError("power iteration: start vector has wrong length");
  }
  MixedStrategy next(k);
  for (int it = 0; it < max_iterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < k; ++i) {
      const double w = p[i];
      if (w == 0.0) continue;
      const double* row = &m[static_cast<std::size_t>(i) * k];
      for (int j = 0; j < k; ++j) next[j] += w * row[j];
    }
    double total = 0.0;
    for (double v : next) total += v;
    double change = 0.0;
    for (int j = 0; j < k; ++j) {
      next[j] /= total;
      change += std::abs(next[j] - p[j]);
    }
    p.swap(next);
    if (change <= tolerance) return p;
  }
  return std::nullopt;
}

MixedStrategy StationaryDistribution(const std::vector<double>& m, int k,
                                     MixedStrategy start) {
  if (auto p = PowerIteration(m, k, start)) return *p;
  std::vector<double> mixed = m;
  constexpr double kNoise = 1e-6;
  for (double& v : mixed) v = (1.0 - kNoise) * v + kNoise / k;
  if (auto p = PowerIteration(mixed, k, start)) return *p;
  throw NumericalError("stationary distribution: power iteration diverged");
}

SwapRegret::SwapRegret(int num_actions, const Factory& factory,
                       std::string name)
    : Learner(num_actions), name_(std::move(name)) {
  for (int i = 0; i < num_actions; ++i) {
    bases_.push_back(factory());
    if (bases_.back()->NumActions() != num_actions ||
        bases_.back()->Feedback() != FeedbackKind::kBandit) {
      throw UsageError("swap regret: base learner must be a K-action bandit");
    }
  }
}

MixedStrategy SwapRegret::ComputeDistribution() const {
  const int k = NumActions();
  std::vector<double> m(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    const MixedStrategy& row = bases_[i]->Distribution();
    std::copy(row.begin(), row.end(), m.begin() + static_cast<std::size_t>(i) * k);
  }
  warm_start_ = StationaryDistribution(m, k, warm_start_);
  return warm_start_;
}

void SwapRegret::UpdateBandit(int played, double reward) {
  const MixedStrategy p = Distribution();
  for (int i = 0; i < NumActions(); ++i) {
    bases_[i]->ObserveBandit(played, p[i] * reward);
  }
}

}  // namespace domlab
