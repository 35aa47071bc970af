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

#ifndef DOMLAB_MIRROR_MAP_H_
#define DOMLAB_MIRROR_MAP_H_

#include <span>
#include <string>

#include "domlab/game.h"

namespace domlab {

// Choice maps Q(y) = argmax_x <y, x> - h(x) over the simplex.
enum class MirrorMapKind {
  kEntropic,      // negative entropy: exponential weights
  kEuclidean,     // squared norm: lazy projected gradient
  kBestResponse,  // h = 0: fictitious play, lowest index on ties
};

std::string MirrorMapName(MirrorMapKind kind);

MixedStrategy MirrorMap(MirrorMapKind kind, std::span<const double> y);

// Numerically stable softmax (max-shifted).
MixedStrategy Softmax(std::span<const double> y);

// Euclidean projection onto the probability simplex (sort and threshold).
MixedStrategy ProjectToSimplex(std::span<const double> y);

}  // namespace domlab

#endif  // DOMLAB_MIRROR_MAP_H_
