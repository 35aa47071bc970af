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

#ifndef DOMLAB_IESDS_H_
#define DOMLAB_IESDS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "domlab/game.h"

namespace domlab {

inline constexpr double kStrictnessTolerance = 1e-9;

// Surviving actions per player, each list sorted ascending.
using SurvivingSets = std::vector<std::vector<int>>;

SurvivingSets AllActions(const Game& game);

struct DominanceCertificate {
  int player = 0;
  int dominated_action = 0;
  // Full-length mixed strategy over the player's actions; zero outside the
  // surviving set it was computed against.
  MixedStrategy dominator;
  double margin = 0.0;
};

struct EliminatedAction {
  int player = 0;
  int action = 0;
  bool operator==(const EliminatedAction&) const = default;
};

struct EliminationPath {
  std::vector<int> action_counts;
  // iterations[l] holds E_{l+1} \ E_l, in (player, action) order.
  std::vector<std::vector<EliminatedAction>> iterations;
  // Parallel to `iterations` when certificates were computed, else empty.
  std::vector<std::vector<DominanceCertificate>> certificates;
  std::optional<double> gap;
  SurvivingSets survivors;
  // distances[n][a] = number of iterations `a` survives (L0 for survivors).
  std::vector<std::vector<int>> distances;

  int Length() const { return static_cast<int>(iterations.size()); }
  // Cumulative eliminated set E_l for l in [0, L0].
  std::vector<EliminatedAction> Set(int l) const;
  // Single surviving profile, if the game is dominance solvable.
  std::optional<ActionProfile> UniqueSurvivor() const;
};

struct IesdsOptions {
  double strictness = kStrictnessTolerance;
  std::int64_t enumeration_limit = kDefaultEnumerationLimit;
};

// Largest-margin mixed strategy over surviving own actions against every
// surviving opponent profile; returned iff the margin exceeds strictness.
std::optional<DominanceCertificate> FindDominator(
    const Game& game, int player, int action, const SurvivingSets& surviving,
    const IesdsOptions& options = {});

// Same question restricted to pure dominators (reference scan; misses
// actions that only a mixture dominates).
std::optional<DominanceCertificate> FindPureDominator(
    const Game& game, int player, int action, const SurvivingSets& surviving,
    const IesdsOptions& options = {});

// Simultaneous-maximal elimination: every certified action is removed at
// each iteration, against the sets at the start of that iteration.
EliminationPath Iesds(const Game& game, const IesdsOptions& options = {});

// Closed-form path for the market for lemons (no enumeration). Throws
// AnalyticPathUnavailable when the spacing or price-grid conditions fail.
EliminationPath LemonsAnalyticPath(const LemonsParams& params);

// Smallest k in [1, N] with q_i - q_{i-k} >= c_1 for every i > k; throws
// AnalyticPathUnavailable unless also c_1 > q_i - q_{i-k+1} for all i >= k.
int LemonsSpacing(const LemonsParams& params);

int EliminationDistance(const EliminationPath& path, int player, int action);

// Derives survivors, distances and gap from the per-iteration sets.
EliminationPath MakeEliminationPath(
    std::vector<int> action_counts,
    std::vector<std::vector<EliminatedAction>> iterations,
    std::vector<std::vector<DominanceCertificate>> certificates);

// Replays a certificate; returns min over surviving opponent profiles of
// u(dominator) - u(dominated).
double CertificateMargin(const Game& game, const DominanceCertificate& cert,
                         const SurvivingSets& surviving,
                         std::int64_t limit = kDefaultEnumerationLimit);

// Report with 1-based players and actions.
nlohmann::json PathToJson(const EliminationPath& path);

}  // namespace domlab

#endif  // DOMLAB_IESDS_H_
