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

#ifndef DOMLAB_METRICS_H_
#define DOMLAB_METRICS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "domlab/game.h"
#include "domlab/iesds.h"

namespace domlab {

// Progress of elimination: (1/N) sum_n sum_i p_{n,i} Lambda(n,i) / L0.
// Throws UsageError when L0 = 0.
double Poe(const EliminationPath& path, const MixedProfile& profile);

// Mean over agents of the mass on the unique surviving profile; nullopt
// unless the path leaves exactly one action per player.
std::optional<double> NeMass(const EliminationPath& path,
                             const MixedProfile& profile);

// Largest probability on any eliminated action (0 when L0 = 0).
double MaxDominatedProb(const EliminationPath& path,
                        const MixedProfile& profile);

struct EssentialEntry {
  int player = 0;
  int action = 0;
  double prob = 0.0;
  bool pass = false;
};

struct EssentialReport {
  double threshold = 0.0;  // eps / (4 K N)
  std::vector<EssentialEntry> entries;
  bool all_pass = true;
  // eps / 2 bound on the L1 distance to the surviving profile, reported
  // when every listed action passes.
  std::optional<double> l1_bound;
};

EssentialReport EssentialEliminationReport(
    const MixedProfile& profile, const std::vector<EliminatedAction>& eliminated,
    double eps, int num_actions, int num_players);

// 0, then ceil(10^(j/40)) for j = 0, 1, ... up to T (deduplicated), then T.
std::vector<std::int64_t> CheckpointTimes(std::int64_t horizon);

}  // namespace domlab

#endif  // DOMLAB_METRICS_H_
