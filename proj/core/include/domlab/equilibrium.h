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

#ifndef DOMLAB_EQUILIBRIUM_H_
#define DOMLAB_EQUILIBRIUM_H_

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "domlab/game.h"

namespace domlab {

// Distribution over pure profiles, stored sparsely.
struct JointDistribution {
  std::vector<std::pair<ActionProfile, double>> support;

  // Throws UsageError on invalid or repeated profiles, negative mass, or a
  // total that differs from 1 by more than 1e-9.
  void Validate(const Game& game) const;
  double Mass(const ActionProfile& profile) const;
};

// max over players n, recommendations a with positive marginal mass and
// deviations a' != a of sum_{a_-n} pi(a, a_-n) [u_n(a', a_-n) - u_n(a, a_-n)].
// Negative for strict equilibria; pi is an eps-CE iff the gap is <= eps.
double EpsilonCeGap(const Game& game, const JointDistribution& pi);

// Sum over players of expected payoff under pi.
double Welfare(const Game& game, const JointDistribution& pi);

// eps-correlated equilibrium of DIR(K, c) supported on the staircase
// (1,1), (2,1), (2,2), (3,2), ... with geometrically growing weights.
struct DirCeConstruction {
  JointDistribution pi;
  int staircase_length = 0;  // number of profiles carrying mass
};

DirCeConstruction ConstructDirEpsilonCe(int num_actions, double c, double eps);

// Upper bound (1 + ceil(log(1/eps) / log c)) / rho on the welfare of the
// constructed distribution.
double DirCeWelfareBound(int num_actions, double c, double eps);

struct NeCheck {
  bool is_equilibrium = false;
  // Per player: min over deviations of current minus deviation payoff
  // (+infinity when the player has a single action).
  std::vector<double> slack;
};

NeCheck VerifyNe(const Game& game, const ActionProfile& profile);

// Inner product v(x) . (x - x*) at x = (e_i, e_i), x* = (e_K, e_K) for
// DIR(K, c), with v the pure-action payoff vectors of both players.
// `action` is 0-based and must be below K - 1.
double VariationalWitness(int num_actions, double c, int action);

// {"support":[{"profile":[1-based...],"p":...},...]}
nlohmann::json DistributionToJson(const JointDistribution& pi);
JointDistribution DistributionFromJson(const nlohmann::json& j);

}  // namespace domlab

#endif  // DOMLAB_EQUILIBRIUM_H_
