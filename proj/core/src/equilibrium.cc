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

#include "domlab/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "domlab/errors.h"

namespace domlab {
namespace {

void RequireDeterministic(const Game& game) {
  if (game.IsStochastic()) {
    throw CapabilityError("equilibrium checks need deterministic payoffs");
  }
}

// log(sum_{i=1}^{k} c^{i-1}) for c > 1, stable for large k.
long double LogGeometricSum(long double c, int k) {
  return k * std::log(c) - std::log(c - 1) + std::log1p(-std::pow(c, -k));
}

}  // namespace

void JointDistribution::Validate(const Game& game) const {
  if (support.empty()) throw UsageError("distribution has empty support");
  std::set<ActionProfile> seen;
  double total = 0.0;
  for (const auto& [profile, p] : support) {
    game.CheckProfile(profile);
    if (!seen.insert(profile).second) {
      throw UsageError("distribution lists a profile twice");
    }
    if (!std::isfinite(p) || p < 0.0) {
      throw UsageError("distribution has a negative or non-finite mass");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw UsageError("distribution mass sums to " + std::to_string(total));
  }
}

double JointDistribution::Mass(const ActionProfile& profile) const {
  for (const auto& [a, p] : support) {
    if (a == profile) return p;
  }
  return 0.0;
}

double EpsilonCeGap(const Game& game, const JointDistribution& pi) {
  RequireDeterministic(game);
  pi.Validate(game);
  double gap = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < game.NumPlayers(); ++n) {
    const int k = game.NumActions(n);
    // benefit[a][a'] accumulates the deviation gain for recommendation a.
    std::map<int, std::vector<double>> benefit;
    std::map<int, double> marginal;
    for (const auto& [profile, p] : pi.support) {
      if (p == 0.0) continue;
      const int rec = profile[n];
      marginal[rec] += p;
      auto& row = benefit[rec];
      row.resize(k, 0.0);
      const double base = game.Payoff(n, profile);
      ActionProfile dev = profile;
      for (int a = 0; a < k; ++a) {
        dev[n] = a;
        row[a] += p * (game.Payoff(n, dev) - base);
      }
    }
    for (const auto& [rec, row] : benefit) {
      if (!(marginal[rec] > 0.0)) continue;
      for (int a = 0; a < k; ++a) {
        if (a != rec) gap = std::max(gap, row[a]);
      }
    }
  }
  // Only single-action players: nobody can deviate.
  return std::isfinite(gap) ? gap : 0.0;
}

double Welfare(const Game& game, const JointDistribution& pi) {
  RequireDeterministic(game);
  pi.Validate(game);
  double total = 0.0;
  for (const auto& [profile, p] : pi.support) {
    for (int n = 0; n < game.NumPlayers(); ++n) {
      total += p * game.Payoff(n, profile);
    }
  }
  return total;
}

DirCeConstruction ConstructDirEpsilonCe(int num_actions, double c,
                                        double eps) {
  if (num_actions < 2) throw UsageError("construct-ce: need K >= 2");
  if (!(c > 1.0) || !std::isfinite(c)) {
    throw UsageError("construct-ce: need c > 1");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw UsageError("construct-ce: need 0 < eps < 1");
  }
  const long double rho = std::max<long double>(num_actions, c);
  const long double lc = c;
  const int max_len = 2 * num_actions - 1;
  const long double log_target =
      -std::log(static_cast<long double>(eps)) + std::log1p(-1e-12L);
  int k = 0;
  for (int cand = 1; cand <= max_len; ++cand) {
    if (std::log(rho) + LogGeometricSum(lc, cand) >= log_target) {
      k = cand;
      break;
    }
  }
  if (k == 0) {
    throw UsageError(
        "construct-ce: 1/eps exceeds rho * sum_{i=1}^{2K-1} c^(i-1)");
  }
  DirCeConstruction out;
  out.staircase_length = k;
  long double used = 0.0L;
  for (int i = 1; i <= k; ++i) {
    long double delta;
    if (i < k) {
      delta = rho * eps * std::pow(lc, i - 1);
      used += delta;
    } else {
      delta = 1.0L - used;
    }
    // Step i sits at (m, m) for odd i = 2m - 1 and (m + 1, m) for even i.
    const int m = (i + 1) / 2;
    ActionProfile profile = (i % 2 == 1) ? ActionProfile{m - 1, m - 1}
                                         : ActionProfile{m, m - 1};
    out.pi.support.emplace_back(std::move(profile),
                                static_cast<double>(delta));
  }
  return out;
}

double DirCeWelfareBound(int num_actions, double c, double eps) {
  const double rho = std::max<double>(num_actions, c);
  const double steps = std::log(1.0 / eps) / std::log(c);
  return (1.0 + std::ceil(steps - 1e-9)) / rho;
}

NeCheck VerifyNe(const Game& game, const ActionProfile& profile) {
  RequireDeterministic(game);
  game.CheckProfile(profile);
  NeCheck out;
  out.is_equilibrium = true;
  for (int n = 0; n < game.NumPlayers(); ++n) {
    const double current = game.Payoff(n, profile);
    double slack = std::numeric_limits<double>::infinity();
    ActionProfile dev = profile;
    for (int a = 0; a < game.NumActions(n); ++a) {
      if (a == profile[n]) continue;
      dev[n] = a;
      slack = std::min(slack, current - game.Payoff(n, dev));
    }
    if (slack < -1e-12) out.is_equilibrium = false;
    out.slack.push_back(slack);
  }
  return out;
}

double VariationalWitness(int num_actions, double c, int action) {
  if (action < 0 || action >= num_actions - 1) {
    throw UsageError("variational witness needs an action below K");
  }
  const Game game = Game::Dir({num_actions, c});
  const int top = num_actions - 1;
  // Player A's payoff vector against e_i, dotted with e_i - e_K, plus the
  // symmetric term for player B.
  const double a_term = game.Payoff(0, ActionProfile{action, action}) -
                        game.Payoff(0, ActionProfile{top, action});
  const double b_term = game.Payoff(1, ActionProfile{action, action}) -
                        game.Payoff(1, ActionProfile{action, top});
  return a_term + b_term;
}

nlohmann::json DistributionToJson(const JointDistribution& pi) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [profile, p] : pi.support) {
    nlohmann::json labels = nlohmann::json::array();
    for (int a : profile) labels.push_back(a + 1);
    support.push_back({{"profile", std::move(labels)}, {"p", p}});
  }
  return {{"support", std::move(support)}};
}

JointDistribution DistributionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array()) {
    throw UsageError("distribution file: expected {\"support\": [...]}");
  }
  JointDistribution pi;
  for (const auto& entry : j["support"]) {
    try {
      ActionProfile profile = entry.at("profile").get<ActionProfile>();
      for (int& a : profile) --a;
      pi.support.emplace_back(std::move(profile), entry.at("p").get<double>());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("distribution file: ") + e.what());
    }
  }
  return pi;
}

}  // namespace domlab
