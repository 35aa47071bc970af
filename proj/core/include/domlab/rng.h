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

#ifndef DOMLAB_RNG_H_
#define DOMLAB_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace domlab {

// All randomness goes through 64-bit Mersenne Twister streams. Results are
// reproducible within one build; the standard distributions are not
// guaranteed identical across standard library implementations.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kStreamMultiplier = 0x9E3779B97F4A7C15ULL;

// Seed of stream `stream_index` derived from a run's master seed.
constexpr std::uint64_t StreamSeed(std::uint64_t master_seed,
                                   std::uint64_t stream_index) {
  return master_seed ^ (stream_index * kStreamMultiplier);
}

// Uniform double in [0, 1) using the top 53 bits of one draw.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF draw from a discrete distribution. The last index with
// positive mass absorbs rounding slack.
inline int SampleIndex(std::span<const double> probs, Rng& rng) {
  const double u = UniformUnit(rng);
  double acc = 0.0;
  int last_positive = 0;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    acc += probs[i];
    if (u < acc) return i;
  }
  return last_positive;
}

}  // namespace domlab

#endif  // DOMLAB_RNG_H_
