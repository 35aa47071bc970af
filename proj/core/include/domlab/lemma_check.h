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

#ifndef DOMLAB_LEMMA_CHECK_H_
#define DOMLAB_LEMMA_CHECK_H_

#include <cstdint>

#include "domlab/game.h"

namespace domlab {

// Statistical check of the score-gap lower bound for Exp3-DH: in DIR(K, c)
// player A runs Exp3-DH against an opponent fixed at `opponent`; after T
// rounds the score of `dominator` minus that of `dominated` should exceed
//   Delta sum_t gamma_t - 4 sqrt(ln(2K/delta)) sqrt(K (1+sigma^2)
//                                                  sum_t gamma_t^2/eps_t)
// with probability at least 1 - delta, where gamma_t = (t/T)^beta.
struct Lemma1Config {
  DirParams game{3, 9.0};
  int dominated = 0;
  MixedStrategy dominator{0.0, 1.0, 0.0};
  MixedStrategy opponent;  // empty means uniform
  std::int64_t horizon = 1000;
  double beta = 1.0;
  double b = 0.5;
  double sigma = 0.0;
  double delta = 0.05;
  int trials = 200;
  std::uint64_t seed = 0;
};

struct Lemma1Result {
  double gap = 0.0;    // Delta of the (dominated, dominator) pair
  double bound = 0.0;  // right-hand side of the inequality
  int passes = 0;
  int trials = 0;
  double pass_rate = 0.0;
  double threshold = 0.0;  // 1 - delta - 3 sqrt(delta (1-delta) / trials)
  bool ok = false;
};

Lemma1Result Lemma1EmpiricalCheck(const Lemma1Config& config);

// Right-hand side of the inequality for the given parameters.
double Lemma1Bound(double gap, int num_actions, std::int64_t horizon,
                   double beta, double b, double sigma, double delta);

}  // namespace domlab

#endif  // DOMLAB_LEMMA_CHECK_H_
