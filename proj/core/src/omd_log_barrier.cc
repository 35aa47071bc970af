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
#include <limits>

#include "domlab/errors.h"
#include "domlab/learners.h"

namespace domlab {

OmdLogBarrier::OmdLogBarrier(int num_actions, std::int64_t horizon,
                             std::optional<double> eta)
    : Learner(num_actions),
      x_(num_actions, 1.0 / num_actions),
      threshold_(num_actions, 2.0 * num_actions) {
  if (horizon < 2) throw UsageError("omdlb: horizon T must be >= 2");
  const double log_t = std::log(static_cast<double>(horizon));
  kappa_ = std::exp(1.0 / log_t);
  const double init =
      eta ? *eta : std::sqrt(log_t / (num_actions * static_cast<double>(horizon)));
  if (!(init > 0.0) || !std::isfinite(init)) {
    throw UsageError("omdlb: eta must be > 0");
  }
  eta_.assign(num_actions, init);
}

MixedStrategy OmdLogBarrier::Step(std::span<const double> x,
                                  std::span<const double> u,
                                  std::span<const double> eta) {
  const int k = static_cast<int>(x.size());
  // Next iterate as a function of the normalizer lambda:
  //   1 / x'_i = 1 / x_i - eta_i (u_i - lambda).
  // The total mass decreases in lambda; the root lies in (lo, hi].
  double lo = -std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    lo = std::max(lo, u[i] - 1.0 / (eta[i] * x[i]));
    hi = std::max(hi, u[i]);
  }
  auto mass = [&](double lambda, double* slope) {
    double total = 0.0;
    double d = 0.0;
    for (int i = 0; i < k; ++i) {
      const double inv = 1.0 / x[i] - eta[i] * (u[i] - lambda);
      const double xi = 1.0 / inv;
      total += xi;
      d -= eta[i] * xi * xi;
    }
    if (slope) *slope = d;
    return total - 1.0;
  };
  double lambda = hi;
  double slope = 0.0;
  double f = mass(lambda, &slope);
  for (int it = 0; it < 200 && std::abs(f) > 1e-13; ++it) {
    if (f > 0.0) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    double next = lambda - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lambda) break;
    lambda = next;
    f = mass(lambda, &slope);
  }
  if (!std::isfinite(f) || std::abs(f) > 1e-6) {
    throw NumericalError("omdlb: normalization root not found");
  }
  MixedStrategy out(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    out[i] = 1.0 / (1.0 / x[i] - eta[i] * (u[i] - lambda));
    total += out[i];
  }
  for (double& v : out) v /= total;
  return out;
}

void OmdLogBarrier::UpdateBandit(int played, double reward) {
  std::vector<double> estimate(NumActions(), 0.0);
  estimate[played] = reward / x_[played];
  x_ = Step(x_, estimate, eta_);
  for (int i = 0; i < NumActions(); ++i) {
    if (1.0 / x_[i] > threshold_[i]) {
      threshold_[i] = 2.0 / x_[i];
      eta_[i] *= kappa_;
    }
  }
}

}  // namespace domlab
