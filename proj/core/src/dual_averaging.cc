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

double LearningRate::At(std::int64_t t) const {
  return eta0 * std::pow(static_cast<double>(t + 1), -exponent);
}

DualAveraging::DualAveraging(int num_actions, MirrorMapKind map,
                             LearningRate rate)
    : Learner(num_actions),
      map_(map),
      rate_(rate),
      scores_(num_actions, 0.0) {
  if (!(rate.eta0 > 0.0) || !std::isfinite(rate.eta0)) {
    throw UsageError("dual averaging: eta0 must be > 0");
  }
  // Non-increasing schedules only.
  if (!(rate.exponent >= 0.0 && rate.exponent <= 1.0)) {
    throw UsageError("dual averaging: rate exponent must lie in [0, 1]");
  }
}

std::string DualAveraging::Name() const {
  switch (map_) {
    case MirrorMapKind::kEntropic:
      return "ew";
    case MirrorMapKind::kEuclidean:
      return "lgd";
    case MirrorMapKind::kBestResponse:
      return "fp";
  }
  return "da";
}

MixedStrategy DualAveraging::ComputeDistribution() const {
  return MirrorMap(map_, scores_);
}

void DualAveraging::UpdateVector(std::span<const double> payoffs) {
  const double eta = rate_.At(Round());
  for (int i = 0; i < NumActions(); ++i) scores_[i] += eta * payoffs[i];
}

}  // namespace domlab
