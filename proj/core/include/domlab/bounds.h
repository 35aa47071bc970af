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

#ifndef DOMLAB_BOUNDS_H_
#define DOMLAB_BOUNDS_H_

#include <cstdint>
#include <vector>

namespace domlab {

// Parameters of the first-phase convergence condition for Exp3-DH.
struct T1Params {
  int num_actions = 2;   // K
  int num_players = 2;   // N
  double sigma = 0.0;    // noise level
  double beta = 1.0;     // discount exponent
  double b = 0.5;        // exploration exponent, in (0, 1)
  double gap = 0.1;      // Delta
  double eps = 0.25;     // target accuracy, in (0, 1/2]
  double delta = 0.01;   // failure probability, in (0, 1/2)

  void Validate() const;
};

// Left side t^(-b)/K + exp(A t^((1+b)/2) - Delta t / (16 (1+beta))).
long double T1LeftSide(const T1Params& p, long double t);
// Right side min(eps, Delta/2) / (4 K N).
long double T1RightSide(const T1Params& p);

// Smallest integer T1 such that the left side is below the right side for
// every t >= T1. Throws LimitError past 9e18.
std::int64_t T1Bound(const T1Params& p);

// ceil(max{(1 + 8/Delta)^(1/(1+beta)) T_l,
//          T_l + (1+beta)^2 (4+Delta)^2 (8+Delta)^2 / (4 (1+2 beta) Delta^2)
//                * ln(1/delta)}).
std::int64_t NextTBound(std::int64_t t_prev, double gap, double beta,
                        double delta);

// T_1, ..., T_{L0} from the recursion.
std::vector<std::int64_t> HorizonSchedule(const T1Params& p, int length);

}  // namespace domlab

#endif  // DOMLAB_BOUNDS_H_
