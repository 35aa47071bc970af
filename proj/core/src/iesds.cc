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

#include "domlab/iesds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "domlab/errors.h"
#include "domlab/simplex.h"

namespace domlab {
namespace {

// Payoffs of one player's surviving actions (rows) against every surviving
// opponent profile (columns, enumerated last-player-fastest).
struct PayoffMatrix {
  std::vector<int> rows;
  std::int64_t cols = 0;
  std::vector<double> values;

  double At(int r, std::int64_t c) const { return values[r * cols + c]; }
};

void CheckSurviving(const Game& game, const SurvivingSets& surviving) {
  if (static_cast<int>(surviving.size()) != game.NumPlayers()) {
    throw UsageError("surviving sets must have one entry per player");
  }
  for (int n = 0; n < game.NumPlayers(); ++n) {
    if (surviving[n].empty()) {
      throw UsageError("player " + std::to_string(n) + " has no actions left");
    }
    for (int a : surviving[n]) {
      if (a < 0 || a >= game.NumActions(n)) {
        throw UsageError("surviving action out of range");
      }
    }
  }
}

PayoffMatrix BuildPayoffMatrix(const Game& game, int player,
                               const SurvivingSets& surviving,
                               std::int64_t limit) {
  if (game.IsStochastic()) {
    throw CapabilityError("dominance needs deterministic payoffs");
  }
  CheckSurviving(game, surviving);
  PayoffMatrix m;
  m.rows = surviving[player];
  m.cols = 1;
  for (int n = 0; n < game.NumPlayers(); ++n) {
    if (n == player) continue;
    m.cols *= static_cast<std::int64_t>(surviving[n].size());
    if (m.cols > limit) {
      throw LimitError("more than " + std::to_string(limit) +
                       " surviving opponent profiles");
    }
  }
  const int num_rows = static_cast<int>(m.rows.size());
  m.values.assign(num_rows * m.cols, 0.0);
  const int num_players = game.NumPlayers();
  std::vector<int> pos(num_players, 0);
  ActionProfile profile(num_players);
  for (std::int64_t c = 0; c < m.cols; ++c) {
    for (int n = 0; n < num_players; ++n) {
      if (n != player) profile[n] = surviving[n][pos[n]];
    }
    for (int r = 0; r < num_rows; ++r) {
      profile[player] = m.rows[r];
      m.values[r * m.cols + c] = game.Payoff(player, profile);
    }
    for (int n = num_players - 1; n >= 0; --n) {
      if (n == player) continue;
      if (++pos[n] < static_cast<int>(surviving[n].size())) break;
      pos[n] = 0;
    }
  }
  return m;
}

int RowOf(const PayoffMatrix& m, int action) {
  auto it = std::find(m.rows.begin(), m.rows.end(), action);
  if (it == m.rows.end()) {
    throw UsageError("action " + std::to_string(action) +
                     " is not in the surviving set");
  }
  return static_cast<int>(it - m.rows.begin());
}

std::optional<DominanceCertificate> MixedDominator(const Game& game,
                                                   int player, int action,
                                                   const PayoffMatrix& m,
                                                   double strictness) {
  const int target = RowOf(m, action);
  const int num_rows = static_cast<int>(m.rows.size());
  if (num_rows == 1) return std::nullopt;
  std::vector<double> diff(num_rows * m.cols);
  for (int r = 0; r < num_rows; ++r) {
    for (std::int64_t c = 0; c < m.cols; ++c) {
      diff[r * m.cols + c] = m.At(r, c) - m.At(target, c);
    }
  }
  const MaxMinResult lp =
      SolveMaxMin(diff, num_rows, static_cast<int>(m.cols));
  if (!(lp.value > strictness)) return std::nullopt;
  DominanceCertificate cert;
  cert.player = player;
  cert.dominated_action = action;
  cert.dominator.assign(game.NumActions(player), 0.0);
  for (int r = 0; r < num_rows; ++r) cert.dominator[m.rows[r]] = lp.mixture[r];
  cert.margin = lp.value;
  return cert;
}

}  // namespace

SurvivingSets AllActions(const Game& game) {
  SurvivingSets s(game.NumPlayers());
  for (int n = 0; n < game.NumPlayers(); ++n) {
    s[n].resize(game.NumActions(n));
    for (int a = 0; a < game.NumActions(n); ++a) s[n][a] = a;
  }
  return s;
}

std::vector<EliminatedAction> EliminationPath::Set(int l) const {
  if (l < 0 || l > Length()) throw UsageError("iteration index out of range");
  std::vector<EliminatedAction> out;
  for (int i = 0; i < l; ++i) {
    out.insert(out.end(), iterations[i].begin(), iterations[i].end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.player, x.action) < std::tie(y.player, y.action);
  });
  return out;
}

std::optional<ActionProfile> EliminationPath::UniqueSurvivor() const {
  ActionProfile profile;
  for (const auto& s : survivors) {
    if (s.size() != 1) return std::nullopt;
    profile.push_back(s.front());
  }
  return profile;
}

std::optional<DominanceCertificate> FindDominator(
    const Game& game, int player, int action, const SurvivingSets& surviving,
    const IesdsOptions& options) {
  game.CheckPlayer(player);
  const PayoffMatrix m =
      BuildPayoffMatrix(game, player, surviving, options.enumeration_limit);
  return MixedDominator(game, player, action, m, options.strictness);
}

std::optional<DominanceCertificate> FindPureDominator(
    const Game& game, int player, int action, const SurvivingSets& surviving,
    const IesdsOptions& options) {
  game.CheckPlayer(player);
  const PayoffMatrix m =
      BuildPayoffMatrix(game, player, surviving, options.enumeration_limit);
  const int target = RowOf(m, action);
  std::optional<DominanceCertificate> best;
  for (int r = 0; r < static_cast<int>(m.rows.size()); ++r) {
    if (r == target) continue;
    double margin = std::numeric_limits<double>::infinity();
    for (std::int64_t c = 0; c < m.cols; ++c) {
      margin = std::min(margin, m.At(r, c) - m.At(target, c));
    }
    if (margin > options.strictness && (!best || margin > best->margin)) {
      best.emplace();
      best->player = player;
      best->dominated_action = action;
      best->dominator.assign(game.NumActions(player), 0.0);
      best->dominator[m.rows[r]] = 1.0;
      best->margin = margin;
    }
  }
  return best;
}

EliminationPath Iesds(const Game& game, const IesdsOptions& options) {
  SurvivingSets surviving = AllActions(game);
  std::vector<std::vector<EliminatedAction>> iterations;
  std::vector<std::vector<DominanceCertificate>> certificates;
  while (true) {
    std::vector<DominanceCertificate> found;
    for (int n = 0; n < game.NumPlayers(); ++n) {
      if (surviving[n].size() < 2) continue;
      const PayoffMatrix m =
          BuildPayoffMatrix(game, n, surviving, options.enumeration_limit);
      for (int a : surviving[n]) {
        if (auto cert = MixedDominator(game, n, a, m, options.strictness)) {
          found.push_back(std::move(*cert));
        }
      }
    }
    if (found.empty()) break;
    std::vector<EliminatedAction> removed;
    for (const auto& cert : found) {
      removed.push_back({cert.player, cert.dominated_action});
      auto& s = surviving[cert.player];
      s.erase(std::find(s.begin(), s.end(), cert.dominated_action));
    }
    iterations.push_back(std::move(removed));
    certificates.push_back(std::move(found));
  }
  return MakeEliminationPath(game.ActionCounts(), std::move(iterations),
                             std::move(certificates));
}

EliminationPath MakeEliminationPath(
    std::vector<int> action_counts,
    std::vector<std::vector<EliminatedAction>> iterations,
    std::vector<std::vector<DominanceCertificate>> certificates) {
  EliminationPath path;
  path.action_counts = std::move(action_counts);
  path.iterations = std::move(iterations);
  path.certificates = std::move(certificates);
  const int num_players = static_cast<int>(path.action_counts.size());
  const int length = path.Length();
  path.distances.resize(num_players);
  for (int n = 0; n < num_players; ++n) {
    path.distances[n].assign(path.action_counts[n], length);
  }
  for (int l = 0; l < length; ++l) {
    for (const auto& e : path.iterations[l]) {
      if (e.player < 0 || e.player >= num_players || e.action < 0 ||
          e.action >= path.action_counts[e.player]) {
        throw UsageError("eliminated action out of range");
      }
      if (path.distances[e.player][e.action] != length) {
        throw UsageError("action eliminated twice");
      }
      path.distances[e.player][e.action] = l;
    }
  }
  path.survivors.resize(num_players);
  for (int n = 0; n < num_players; ++n) {
    for (int a = 0; a < path.action_counts[n]; ++a) {
      if (path.distances[n][a] == length) path.survivors[n].push_back(a);
    }
    if (path.survivors[n].empty()) {
      throw UsageError("elimination path removes every action of a player");
    }
  }
  for (const auto& level : path.certificates) {
    for (const auto& cert : level) {
      path.gap = path.gap ? std::min(*path.gap, cert.margin) : cert.margin;
    }
  }
  return path;
}

int EliminationDistance(const EliminationPath& path, int player, int action) {
  if (player < 0 || player >= static_cast<int>(path.distances.size()) ||
      action < 0 ||
      action >= static_cast<int>(path.distances[player].size())) {
    throw UsageError("elimination distance: index out of range");
  }
  return path.distances[player][action];
}

double CertificateMargin(const Game& game, const DominanceCertificate& cert,
                         const SurvivingSets& surviving, std::int64_t limit) {
  const PayoffMatrix m = BuildPayoffMatrix(game, cert.player, surviving, limit);
  const int target = RowOf(m, cert.dominated_action);
  double margin = std::numeric_limits<double>::infinity();
  for (std::int64_t c = 0; c < m.cols; ++c) {
    double v = -m.At(target, c);
    for (int r = 0; r < static_cast<int>(m.rows.size()); ++r) {
      v += cert.dominator[m.rows[r]] * m.At(r, c);
    }
    margin = std::min(margin, v);
  }
  return margin;
}

nlohmann::json PathToJson(const EliminationPath& path) {
  using nlohmann::json;
  json j;
  j["L0"] = path.Length();
  j["Delta"] = path.gap ? json(*path.gap) : json(nullptr);
  json sets = json::array();
  for (int l = 1; l <= path.Length(); ++l) {
    json set = json::array();
    for (const auto& e : path.Set(l)) {
      set.push_back({{"player", e.player + 1}, {"action", e.action + 1}});
    }
    sets.push_back(std::move(set));
  }
  j["sets"] = std::move(sets);
  json survivors = json::array();
  for (const auto& s : path.survivors) {
    json row = json::array();
    for (int a : s) row.push_back(a + 1);
    survivors.push_back(std::move(row));
  }
  j["survivors"] = std::move(survivors);
  j["distances"] = path.distances;
  json certs = json::array();
  for (int l = 0; l < static_cast<int>(path.certificates.size()); ++l) {
    for (const auto& cert : path.certificates[l]) {
      json support = json::array();
      for (int a = 0; a < static_cast<int>(cert.dominator.size()); ++a) {
        if (cert.dominator[a] > 0.0) {
          support.push_back({{"action", a + 1}, {"p", cert.dominator[a]}});
        }
      }
      certs.push_back({{"iteration", l + 1},
                       {"player", cert.player + 1},
                       {"action", cert.dominated_action + 1},
                       {"dominator", std::move(support)},
                       {"margin", cert.margin}});
    }
  }
  j["certificates"] = std::move(certs);
  if (auto s = path.UniqueSurvivor()) {
    json profile = json::array();
    for (int a : *s) profile.push_back(a + 1);
    j["unique_survivor"] = std::move(profile);
  } else {
    j["unique_survivor"] = nullptr;
  }
  return j;
}

}  // namespace domlab
