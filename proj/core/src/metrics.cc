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

#include "domlab/metrics.h"

#include <algorithm>
#include <cmath>

#include "domlab/errors.h"

namespace domlab {
namespace {

void CheckShape(const EliminationPath& path, const MixedProfile& profile) {
  if (profile.size() != path.action_counts.size()) {
    throw UsageError("profile and elimination path disagree on players");
  }
  for (std::size_t n = 0; n < profile.size(); ++n) {
    if (static_cast<int>(profile[n].size()) != path.action_counts[n]) {
      throw UsageError("profile and elimination path disagree on actions");
    }
  }
}

}  // namespace

double Poe(const EliminationPath& path, const MixedProfile& profile) {
  CheckShape(path, profile);
  const int length = path.Length();
  if (length == 0) throw UsageError("PoE is undefined when L0 = 0");
  double total = 0.0;
  for (std::size_t n = 0; n < profile.size(); ++n) {
    double agent = 0.0;
    for (std::size_t a = 0; a < profile[n].size(); ++a) {
      agent += profile[n][a] * path.distances[n][a];
    }
    total += agent / length;
  }
  return total / static_cast<double>(profile.size());
}

std::optional<double> NeMass(const EliminationPath& path,
                             const MixedProfile& profile) {
  CheckShape(path, profile);
  const auto survivor = path.UniqueSurvivor();
  if (!survivor) return std::nullopt;
  double total = 0.0;
  for (std::size_t n = 0; n < profile.size(); ++n) {
    total += profile[n][(*survivor)[n]];
  }
  return total / static_cast<double>(profile.size());
}

double MaxDominatedProb(const EliminationPath& path,
                        const MixedProfile& profile) {
  CheckShape(path, profile);
  double best = 0.0;
  for (const auto& level : path.iterations) {
    for (const auto& e : level) best = std::max(best, profile[e.player][e.action]);
  }
  return best;
}

EssentialReport EssentialEliminationReport(
    const MixedProfile& profile, const std::vector<EliminatedAction>& eliminated,
    double eps, int num_actions, int num_players) {
  // eps >= 1/2 is accepted: the per-action test is still meaningful.
  if (!(eps > 0.0)) throw UsageError("essential elimination: eps must be > 0");
  if (num_actions < 1 || num_players < 1) {
    throw UsageError("essential elimination: K and N must be positive");
  }
  EssentialReport report;
  report.threshold = eps / (4.0 * num_actions * num_players);
  for (const auto& e : eliminated) {
    if (e.player < 0 || e.player >= static_cast<int>(profile.size()) ||
        e.action < 0 ||
        e.action >= static_cast<int>(profile[e.player].size())) {
      throw UsageError("essential elimination: action out of range");
    }
    EssentialEntry entry{e.player, e.action, profile[e.player][e.action],
                         false};
    entry.pass = entry.prob <= report.threshold;
    report.all_pass = report.all_pass && entry.pass;
    report.entries.push_back(entry);
  }
  if (report.all_pass) report.l1_bound = eps / 2.0;
  return report;
}

std::vector<std::int64_t> CheckpointTimes(std::int64_t horizon) {
  if (horizon < 1) throw UsageError("horizon must be >= 1");
  std::vector<std::int64_t> times{0};
  for (int j = 0;; ++j) {
    const auto t = static_cast<std::int64_t>(std::ceil(std::pow(10.0, j / 40.0) - 1e-9));
    if (t > horizon) break;
    if (t != times.back()) times.push_back(t);
  }
  if (times.back() != horizon) times.push_back(horizon);
  return times;
}

}  // namespace domlab
