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

#include "domlab/mirror_map.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "domlab/errors.h"

namespace domlab {
namespace {

void CheckScores(std::span<const double> y) {
  if (y.empty()) throw UsageError("mirror map: empty score vector");
  for (double v : y) {
    if (!std::isfinite(v)) throw UsageError("mirror map: non-finite score");
  }
}

}  // namespace

std::string MirrorMapName(MirrorMapKind kind) {
  switch (kind) {
    case MirrorMapKind::kEntropic:
      return "entropic";
    case MirrorMapKind::kEuclidean:
      return "euclidean";
    case MirrorMapKind::kBestResponse:
      return "best-response";
  }
  return "unknown";
}

MixedStrategy Softmax(std::span<const double> y) {
  CheckScores(y);
  const double top = *std::max_element(y.begin(), y.end());
  MixedStrategy p(y.size());
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    p[i] = std::exp(y[i] - top);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

MixedStrategy ProjectToSimplex(std::span<const double> y) {
  CheckScores(y);
  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  MixedStrategy p(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) p[i] = std::max(y[i] - theta, 0.0);
  return p;
}

MixedStrategy MirrorMap(MirrorMapKind kind, std::span<const double> y) {
  switch (kind) {
    case MirrorMapKind::kEntropic:
      return Softmax(y);
    case MirrorMapKind::kEuclidean:
      return ProjectToSimplex(y);
    case MirrorMapKind::kBestResponse: {
      CheckScores(y);
      MixedStrategy p(y.size(), 0.0);
      p[std::max_element(y.begin(), y.end()) - y.begin()] = 1.0;
      return p;
    }
  }
  throw UsageError("unknown mirror map");
}

}  // namespace domlab
