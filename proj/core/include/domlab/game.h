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

#ifndef DOMLAB_GAME_H_
#define DOMLAB_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "domlab/rng.h"

namespace domlab {

// Actions and players are 0-based everywhere in the library. User-facing
// output (CLI, JSON reports, CSV traces) is 1-based.
using ActionProfile = std::vector<int>;
using MixedStrategy = std::vector<double>;
using MixedProfile = std::vector<MixedStrategy>;

inline constexpr std::int64_t kDefaultEnumerationLimit = 1'000'000;
inline constexpr double kSimplexTolerance = 1e-9;

enum class PayoffKind { kTensor, kDir, kLemons };

std::string PayoffKindName(PayoffKind kind);

// Diamond-in-the-rough game DIR(K, c). Payoffs are normalized by
// rho = max(K, c) so every entry lies in [-1, 1].
struct DirParams {
  int num_actions = 2;
  double c = 1.0;

  double Rho() const;
};

// Market for lemons: player 0 is the buyer choosing a price from
// `prices`; players 1..num_sellers choose 0 (keep the car) or 1 (list it).
struct LemonsParams {
  int num_sellers = 1;
  std::vector<double> qualities;  // strictly increasing
  std::vector<double> prices;     // sorted ascending, nonempty
  double listing_cost = 3.0;      // c_1 > 0
  double buyer_multiplier = 1.5;  // c_2 > 1
  double quality_noise_std = 0.0;

  // Instance used in the experiments: q_i = N/2 + i, prices on the integer
  // grid N/2, ..., 3N/2 (N/2 rounded down).
  static LemonsParams Standard(int num_sellers, double listing_cost,
                               double buyer_multiplier,
                               double quality_noise_std);

  void Validate() const;
  bool operator==(const LemonsParams&) const = default;
};

// Throws UsageError unless `probs` is a distribution within `tol`.
void ValidateMixedStrategy(std::span<const double> probs, int num_actions,
                           double tol = kSimplexTolerance);

// A finite N-player normal-form game exposed as a payoff oracle.
// Immutable after construction; stochastic payoffs draw from a
// caller-supplied stream, so instances can be shared across threads.
class Game {
 public:
  // Explicit payoff tensor laid out as payoffs[n * S + flat] where
  // S = prod_m K_m and the last player's action varies fastest.
  static Game Tensor(std::vector<int> action_counts,
                     std::vector<double> payoffs);
  static Game Dir(const DirParams& params);
  static Game Lemons(const LemonsParams& params);

  int NumPlayers() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& ActionCounts() const { return action_counts_; }
  int NumActions(int player) const;
  int MaxActions() const;
  std::int64_t NumProfiles() const;
  PayoffKind Kind() const { return kind_; }

  // Largest absolute noise-free payoff over all profiles. Lemons draws with
  // quality noise can land outside this envelope.
  double PayoffBound() const { return payoff_bound_; }

  bool IsStochastic() const;
  bool SupportsExactExpectation() const { return kind_ != PayoffKind::kLemons; }

  const std::vector<double>& TensorPayoffs() const { return tensor_; }
  const DirParams& Dir() const;
  const LemonsParams& Lemons() const;

  // Payoff of `player` at a pure profile. `rng` is required only when the
  // game is stochastic.
  double Payoff(int player, std::span<const int> profile,
                Rng* rng = nullptr) const;

  // Payoffs of all players at one profile (a single environment draw).
  void Payoffs(std::span<const int> profile, Rng* rng,
               std::span<double> out) const;

  // Exact expected payoff of `player` under the product distribution.
  double ExpectedPayoff(int player, const MixedProfile& profile,
                        std::int64_t limit = kDefaultEnumerationLimit) const;

  // Entry a is the expected payoff of pure action a for `player` against the
  // other players' mixed strategies in `profile` (profile[player] ignored).
  std::vector<double> ActionPayoffVector(
      int player, const MixedProfile& profile,
      std::int64_t limit = kDefaultEnumerationLimit) const;

  void CheckPlayer(int player) const;
  void CheckProfile(std::span<const int> profile) const;

 private:
  Game() = default;
  void RequireExpectation(std::int64_t enumerated, std::int64_t limit) const;

  PayoffKind kind_ = PayoffKind::kTensor;
  std::vector<int> action_counts_;
  double payoff_bound_ = 0.0;
  std::vector<double> tensor_;
  std::variant<std::monostate, DirParams, LemonsParams> params_;
};

// Uniform i.i.d. payoffs in [-1, 1]; deterministic in `seed`.
Game MakeRandomGame(int num_players, int num_actions, std::uint64_t seed);

// Row-major flat index of a pure profile (last player fastest).
std::int64_t FlatIndex(std::span<const int> action_counts,
                       std::span<const int> profile);

// Advances `profile` to the next pure profile in flat order, skipping the
// coordinate `fixed` (pass -1 to advance all). Returns false after the last.
bool NextProfile(std::span<const int> action_counts, std::span<int> profile,
                 int fixed = -1);

}  // namespace domlab

#endif  // DOMLAB_GAME_H_
