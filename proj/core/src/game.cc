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

#include "domlab/game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "domlab/errors.h"

namespace domlab {
namespace {

constexpr std::int64_t kMaxTensorEntries = 50'000'000;

std::int64_t ProductOrLimit(std::span<const int> counts, std::int64_t cap,
                            int skip = -1) {
  std::int64_t total = 1;
  for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
    if (n == skip) continue;
    total *= counts[n];
    if (total > cap) return cap + 1;
  }
  return total;
}

bool AllFinite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

double DirPayoff(const DirParams& d, int player, int row, int col) {
  // 1-based action labels i (row player A) and j (column player B).
  const int i = row + 1;
  const int j = col + 1;
  const double rho = d.Rho();
  if (player == 0) return i <= j + 1 ? i / rho : -d.c / rho;
  return j <= i ? j / rho : -d.c / rho;
}

double LemonsBound(const LemonsParams& p) {
  const double q_lo = p.qualities.front();
  const double q_hi = p.qualities.back();
  const double p_lo = p.prices.front();
  const double p_hi = p.prices.back();
  const double c1 = p.listing_cost;
  const double c2 = p.buyer_multiplier;
  const double candidates[] = {
      c2 * q_hi - p_lo, c2 * q_lo - p_hi,      // buyer
      p_lo - q_hi - c1, p_hi - q_lo - c1, c1,  // sellers
  };
  double bound = 0.0;
  for (double v : candidates) bound = std::max(bound, std::abs(v));
  return bound;
}

}  // namespace

std::string PayoffKindName(PayoffKind kind) {
  switch (kind) {
    case PayoffKind::kTensor:
      return "tensor";
    case PayoffKind::kDir:
      return "dir";
    case PayoffKind::kLemons:
      return "lemons";
  }
  return "unknown";
}

double DirParams::Rho() const {
  return std::max(static_cast<double>(num_actions), c);
}

LemonsParams LemonsParams::Standard(int num_sellers, double listing_cost,
                                    double buyer_multiplier,
                                    double quality_noise_std) {
  if (num_sellers < 1) throw UsageError("lemons: need at least one seller");
  LemonsParams p;
  p.num_sellers = num_sellers;
  const int half = num_sellers / 2;
  for (int i = 1; i <= num_sellers; ++i) p.qualities.push_back(half + i);
  for (int v = half; v <= half + num_sellers; ++v) p.prices.push_back(v);
  p.listing_cost = listing_cost;
  p.buyer_multiplier = buyer_multiplier;
  p.quality_noise_std = quality_noise_std;
  p.Validate();
  return p;
}

void LemonsParams::Validate() const {
  if (num_sellers < 1) throw UsageError("lemons: num_sellers must be >= 1");
  if (static_cast<int>(qualities.size()) != num_sellers) {
    throw UsageError("lemons: expected " + std::to_string(num_sellers) +
                     " qualities, got " + std::to_string(qualities.size()));
  }
  if (prices.empty()) throw UsageError("lemons: price set is empty");
  if (!AllFinite(qualities) || !AllFinite(prices)) {
    throw UsageError("lemons: qualities and prices must be finite");
  }
  for (std::size_t i = 1; i < qualities.size(); ++i) {
    if (!(qualities[i] > qualities[i - 1])) {
      throw UsageError("lemons: qualities must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i < prices.size(); ++i) {
    if (!(prices[i] > prices[i - 1])) {
      throw UsageError("lemons: prices must be strictly increasing");
    }
  }
  if (!(listing_cost > 0.0) || !std::isfinite(listing_cost)) {
    throw UsageError("lemons: listing_cost (c1) must be > 0");
  }
  if (!(buyer_multiplier > 1.0) || !std::isfinite(buyer_multiplier)) {
    throw UsageError("lemons: buyer_multiplier (c2) must be > 1");
  }
  if (!(quality_noise_std >= 0.0) || !std::isfinite(quality_noise_std)) {
    throw UsageError("lemons: quality_noise_std must be >= 0");
  }
}

void ValidateMixedStrategy(std::span<const double> probs, int num_actions,
                           double tol) {
  if (static_cast<int>(probs.size()) != num_actions) {
    throw UsageError("mixed strategy has " + std::to_string(probs.size()) +
                     " entries, expected " + std::to_string(num_actions));
  }
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw UsageError("mixed strategy has a negative or non-finite entry");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw UsageError("mixed strategy sums to " + std::to_string(total));
  }
}

Game Game::Tensor(std::vector<int> action_counts,
                  std::vector<double> payoffs) {
  if (action_counts.empty()) throw UsageError("tensor game needs players");
  for (int k : action_counts) {
    if (k < 1) throw UsageError("every player needs at least one action");
  }
  const std::int64_t n = static_cast<std::int64_t>(action_counts.size());
  const std::int64_t profiles =
      ProductOrLimit(action_counts, kMaxTensorEntries / n);
  if (profiles > kMaxTensorEntries / n) {
    throw LimitError("tensor game too large");
  }
  if (static_cast<std::int64_t>(payoffs.size()) != n * profiles) {
    throw UsageError("tensor length " + std::to_string(payoffs.size()) +
                     " != players * profiles = " +
                     std::to_string(n * profiles));
  }
  if (!AllFinite(payoffs)) throw UsageError("tensor payoffs must be finite");
  Game g;
  g.kind_ = PayoffKind::kTensor;
  g.action_counts_ = std::move(action_counts);
  g.tensor_ = std::move(payoffs);
  for (double v : g.tensor_) g.payoff_bound_ = std::max(g.payoff_bound_, std::abs(v));
  return g;
}

Game Game::Dir(const DirParams& params) {
  if (params.num_actions < 2) throw UsageError("DIR: K must be >= 2");
  if (!(params.c > 0.0) || !std::isfinite(params.c)) {
    throw UsageError("DIR: c must be > 0");
  }
  Game g;
  g.kind_ = PayoffKind::kDir;
  g.action_counts_ = {params.num_actions, params.num_actions};
  g.payoff_bound_ = 1.0;
  g.params_ = params;
  return g;
}

Game Game::Lemons(const LemonsParams& params) {
  params.Validate();
  Game g;
  g.kind_ = PayoffKind::kLemons;
  g.action_counts_.push_back(static_cast<int>(params.prices.size()));
  g.action_counts_.insert(g.action_counts_.end(), params.num_sellers, 2);
  g.payoff_bound_ = LemonsBound(params);
  g.params_ = params;
  return g;
}

int Game::NumActions(int player) const {
  CheckPlayer(player);
  return action_counts_[player];
}

int Game::MaxActions() const {
  return *std::max_element(action_counts_.begin(), action_counts_.end());
}

std::int64_t Game::NumProfiles() const {
  return ProductOrLimit(action_counts_, INT64_MAX / 4);
}

bool Game::IsStochastic() const {
  return kind_ == PayoffKind::kLemons &&
         std::get<LemonsParams>(params_).quality_noise_std > 0.0;
}

const DirParams& Game::Dir() const {
  if (kind_ != PayoffKind::kDir) throw UsageError("game is not a DIR game");
  return std::get<DirParams>(params_);
}

const LemonsParams& Game::Lemons() const {
  if (kind_ != PayoffKind::kLemons) throw UsageError("game is not a lemons game");
  return std::get<LemonsParams>(params_);
}

void Game::CheckPlayer(int player) const {
  if (player < 0 || player >= NumPlayers()) {
    throw UsageError("player index " + std::to_string(player) +
                     " out of range");
  }
}

void Game::CheckProfile(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw UsageError("profile has " + std::to_string(profile.size()) +
                     " actions for " + std::to_string(NumPlayers()) +
                     " players");
  }
  for (int n = 0; n < NumPlayers(); ++n) {
    if (profile[n] < 0 || profile[n] >= action_counts_[n]) {
      throw UsageError("action " + std::to_string(profile[n]) +
                       " out of range for player " + std::to_string(n));
    }
  }
}

void Game::Payoffs(std::span<const int> profile, Rng* rng,
                   std::span<double> out) const {
  CheckProfile(profile);
  if (static_cast<int>(out.size()) != NumPlayers()) {
    throw UsageError("payoff output span has wrong size");
  }
  switch (kind_) {
    case PayoffKind::kTensor: {
      const std::int64_t s = static_cast<std::int64_t>(tensor_.size()) /
                             NumPlayers();
      const std::int64_t flat = FlatIndex(action_counts_, profile);
      for (int n = 0; n < NumPlayers(); ++n) out[n] = tensor_[n * s + flat];
      return;
    }
    case PayoffKind::kDir: {
      const DirParams& d = std::get<DirParams>(params_);
      out[0] = DirPayoff(d, 0, profile[0], profile[1]);
      out[1] = DirPayoff(d, 1, profile[0], profile[1]);
      return;
    }
    case PayoffKind::kLemons: {
      const LemonsParams& p = std::get<LemonsParams>(params_);
      const bool noisy = p.quality_noise_std > 0.0;
      if (noisy && rng == nullptr) {
        throw MissingRngError(
            "lemons game with quality noise needs a random stream");
      }
      const double price = p.prices[profile[0]];
      double sold_quality = 0.0;
      int sold = 0;
      std::normal_distribution<double> noise(0.0, p.quality_noise_std);
      for (int i = 0; i < p.num_sellers; ++i) {
        const double q = p.qualities[i];
        if (profile[i + 1] == 0) {
          out[i + 1] = 0.0;
          continue;
        }
        const double reservation = noisy ? q + noise(*rng) : q;
        if (reservation <= price) {
          out[i + 1] = price - q - p.listing_cost;
          sold_quality += q;
          ++sold;
        } else {
          out[i + 1] = -p.listing_cost;
        }
      }
      // No trade leaves the buyer with zero utility.
      out[0] = sold > 0 ? p.buyer_multiplier * (sold_quality / sold) - price
                        : 0.0;
      return;
    }
  }
}

double Game::Payoff(int player, std::span<const int> profile, Rng* rng) const {
  CheckPlayer(player);
  if (kind_ == PayoffKind::kDir) {
    CheckProfile(profile);
    return DirPayoff(std::get<DirParams>(params_), player, profile[0],
                     profile[1]);
  }
  if (kind_ == PayoffKind::kTensor) {
    CheckProfile(profile);
    const std::int64_t s = static_cast<std::int64_t>(tensor_.size()) /
                           NumPlayers();
    return tensor_[player * s + FlatIndex(action_counts_, profile)];
  }
  std::vector<double> all(NumPlayers());
  Payoffs(profile, rng, all);
  return all[player];
}

void Game::RequireExpectation(std::int64_t enumerated,
                              std::int64_t limit) const {
  if (!SupportsExactExpectation()) {
    throw CapabilityError(PayoffKindName(kind_) +
                          " games do not support exact expectations");
  }
  if (enumerated > limit) {
    throw LimitError("exact expectation needs more than " +
                     std::to_string(limit) + " profiles");
  }
}

double Game::ExpectedPayoff(int player, const MixedProfile& profile,
                            std::int64_t limit) const {
  CheckPlayer(player);
  RequireExpectation(ProductOrLimit(action_counts_, limit), limit);
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw UsageError("mixed profile has wrong number of players");
  }
  for (int n = 0; n < NumPlayers(); ++n) {
    ValidateMixedStrategy(profile[n], action_counts_[n]);
  }
  std::vector<int> a(NumPlayers(), 0);
  double total = 0.0;
  do {
    double w = 1.0;
    for (int n = 0; n < NumPlayers() && w != 0.0; ++n) w *= profile[n][a[n]];
    if (w != 0.0) total += w * Payoff(player, a);
  } while (NextProfile(action_counts_, a));
  return total;
}

std::vector<double> Game::ActionPayoffVector(int player,
                                             const MixedProfile& profile,
                                             std::int64_t limit) const {
  CheckPlayer(player);
  RequireExpectation(ProductOrLimit(action_counts_, limit, player), limit);
  if (static_cast<int>(profile.size()) != NumPlayers()) {
    throw UsageError("mixed profile has wrong number of players");
  }
  for (int n = 0; n < NumPlayers(); ++n) {
    if (n != player) ValidateMixedStrategy(profile[n], action_counts_[n]);
  }
  const int k = action_counts_[player];
  std::vector<double> result(k, 0.0);
  std::vector<int> a(NumPlayers(), 0);
  do {
    double w = 1.0;
    for (int n = 0; n < NumPlayers() && w != 0.0; ++n) {
      if (n != player) w *= profile[n][a[n]];
    }
    if (w == 0.0) continue;
    for (int own = 0; own < k; ++own) {
      a[player] = own;
      result[own] += w * Payoff(player, a);
    }
    a[player] = 0;
  } while (NextProfile(action_counts_, a, player));
  return result;
}

Game MakeRandomGame(int num_players, int num_actions, std::uint64_t seed) {
  if (num_players < 1 || num_actions < 1) {
    throw UsageError("random game needs >= 1 player and >= 1 action");
  }
  std::vector<int> counts(num_players, num_actions);
  const std::int64_t profiles =
      ProductOrLimit(counts, kMaxTensorEntries / num_players);
  if (profiles > kMaxTensorEntries / num_players) {
    throw LimitError("random game too large for tensor form");
  }
  Rng rng(seed);
  std::vector<double> payoffs(num_players * profiles);
  for (double& v : payoffs) v = 2.0 * UniformUnit(rng) - 1.0;
  return Game::Tensor(std::move(counts), std::move(payoffs));
}

std::int64_t FlatIndex(std::span<const int> action_counts,
                       std::span<const int> profile) {
  std::int64_t flat = 0;
  for (std::size_t m = 0; m < action_counts.size(); ++m) {
    flat = flat * action_counts[m] + profile[m];
  }
  return flat;
}

bool NextProfile(std::span<const int> action_counts, std::span<int> profile,
                 int fixed) {
  for (int m = static_cast<int>(action_counts.size()) - 1; m >= 0; --m) {
    if (m == fixed) continue;
    if (++profile[m] < action_counts[m]) return true;
    profile[m] = 0;
  }
  return false;
}

}  // namespace domlab
