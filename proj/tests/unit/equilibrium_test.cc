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

#include <cmath>
#include <limits>

#include <doctest.h>

#include "domlab/equilibrium.h"
#include "domlab/errors.h"
#include "test_util.h"

namespace domlab {
namespace {

using testing::Near;

// Brute-force deviation gap over every (player, recommendation, deviation).
double GapOracle(const Game& g, const JointDistribution& pi) {
  double best = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < g.NumPlayers(); ++n) {
    for (int rec = 0; rec < g.NumActions(n); ++rec) {
      double mass = 0.0;
      for (const auto& [a, p] : pi.support) mass += a[n] == rec ? p : 0.0;
      if (mass <= 0.0) continue;
      for (int dev = 0; dev < g.NumActions(n); ++dev) {
        if (dev == rec) continue;
        double gain = 0.0;
        for (const auto& [a, p] : pi.support) {
          if (a[n] != rec) continue;
          ActionProfile b = a;
          b[n] = dev;
          gain += p * (g.Payoff(n, b) - g.Payoff(n, a));
        }
        best = std::max(best, gain);
      }
    }
  }
  return best;
}

TEST_SUITE("equilibrium") {

TEST_CASE("gap of point masses and the worked staircase") {
  const Game g = Game::Dir({3, 9.0});
  const JointDistribution top{{{{2, 2}, 1.0}}};
  CHECK(Near(EpsilonCeGap(g, top), -1.0 / 9));
  const JointDistribution stair{{{{0, 0}, 0.1}, {{1, 0}, 0.9}}};
  CHECK(Near(EpsilonCeGap(g, stair), 1.0 / 90));
  CHECK(Near(EpsilonCeGap(g, stair), GapOracle(g, stair)));
  CHECK(Near(Welfare(g, top), 6.0 / 9));
  CHECK(Near(Welfare(g, stair), 2.9 / 9));
}

TEST_CASE("construction reproduces the worked example") {
  const DirCeConstruction ce = ConstructDirEpsilonCe(3, 9.0, 1.0 / 90);
  CHECK(ce.staircase_length == 2);
  REQUIRE(ce.pi.support.size() == 2);
  CHECK(ce.pi.support[0].first == ActionProfile{0, 0});
  CHECK(Near(ce.pi.support[0].second, 0.1));
  CHECK(ce.pi.support[1].first == ActionProfile{1, 0});
  CHECK(Near(ce.pi.support[1].second, 0.9));
  CHECK(ce.pi.Mass({2, 2}) == 0.0);
  CHECK(EpsilonCeGap(Game::Dir({3, 9.0}), ce.pi) <= 1.0 / 90 + 1e-12);
}

TEST_CASE("construction sweep") {
  int checked = 0;
  for (int k = 3; k <= 10; ++k) {
    for (double c : {1.0 * k, 10.0, 3.0 * k * k}) {
      const Game g = Game::Dir({k, c});
      for (double eps : {1e-3, 1e-6, 1e-9}) {
        DirCeConstruction ce;
        try {
          ce = ConstructDirEpsilonCe(k, c, eps);
        } catch (const UsageError&) {
          continue;  // 1/eps beyond the longest staircase
        }
        ++checked;
        ce.pi.Validate(g);
        for (std::size_t i = 0; i < ce.pi.support.size(); ++i) {
          const int m = static_cast<int>(i) / 2;
          const ActionProfile want =
              i % 2 == 0 ? ActionProfile{m, m} : ActionProfile{m + 1, m};
          REQUIRE(ce.pi.support[i].first == want);
        }
        const double gap = EpsilonCeGap(g, ce.pi);
        REQUIRE(gap <= eps + 1e-12);
        REQUIRE(Near(gap, GapOracle(g, ce.pi), 1e-12));
        if (std::log(1.0 / eps) <= (2 * k - 2) * std::log(c)) {
          REQUIRE(ce.pi.Mass({k - 1, k - 1}) == 0.0);
          REQUIRE(Welfare(g, ce.pi) <= DirCeWelfareBound(k, c, eps) + 1e-12);
        }
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("half-welfare instance") {
  const DirCeConstruction ce = ConstructDirEpsilonCe(10, 10.0, 1e-9);
  const Game g = Game::Dir({10, 10.0});
  CHECK(ce.pi.Mass({9, 9}) == 0.0);
  CHECK(Welfare(g, ce.pi) <= 0.5 * (20.0 / 10.0) + 1e-12);
  CHECK(Near(DirCeWelfareBound(10, 10.0, 1e-9), 1.0));
}

TEST_CASE("construction range errors") {
  CHECK_THROWS_AS(ConstructDirEpsilonCe(3, 1.0, 0.1), UsageError);
  CHECK_THROWS_AS(ConstructDirEpsilonCe(3, 2.0, 1e-12), UsageError);
  CHECK_THROWS_AS(ConstructDirEpsilonCe(3, 9.0, 0.0), UsageError);
}

TEST_CASE("welfare is linear in the distribution") {
  const Game g = MakeRandomGame(2, 3, 4);
  const JointDistribution a{{{{0, 1}, 0.3}, {{2, 2}, 0.7}}};
  const JointDistribution b{{{{0, 1}, 0.5}, {{1, 0}, 0.5}}};
  const double w = 0.25;
  JointDistribution mix{{{{0, 1}, w * 0.3 + (1 - w) * 0.5},
                         {{2, 2}, w * 0.7},
                         {{1, 0}, (1 - w) * 0.5}}};
  CHECK(Near(Welfare(g, mix), w * Welfare(g, a) + (1 - w) * Welfare(g, b)));
}

TEST_CASE("point-mass gap mirrors the equilibrium slack") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = MakeRandomGame(2, 3, seed);
    ActionProfile a{static_cast<int>(seed % 3), static_cast<int>(seed / 3 % 3)};
    const NeCheck ne = VerifyNe(g, a);
    const double min_slack = std::min(ne.slack[0], ne.slack[1]);
    CHECK(Near(EpsilonCeGap(g, {{{a, 1.0}}}), -min_slack));
    CHECK(ne.is_equilibrium == (min_slack >= 0.0));
  }
}

TEST_CASE("nash checks") {
  const Game g = Game::Dir({3, 9.0});
  const NeCheck top = VerifyNe(g, {2, 2});
  CHECK(top.is_equilibrium);
  CHECK(Near(std::min(top.slack[0], top.slack[1]), 1.0 / 9));
  CHECK_FALSE(VerifyNe(g, {0, 0}).is_equilibrium);
  // Buyer at the lowest price, nobody listing.
  LemonsParams p;
  p.num_sellers = 2;
  p.qualities = {2, 3};
  p.prices = {1, 2, 3};
  CHECK(VerifyNe(Game::Lemons(p), {0, 0, 0}).is_equilibrium);
}

TEST_CASE("variational witness") {
  CHECK(Near(VariationalWitness(3, 9.0, 0), 20.0 / 9));
  CHECK(VariationalWitness(3, 9.0, 1) > 0.0);
  for (int k = 2; k <= 12; ++k) {
    for (double c : {0.5, 1.0 * k, 3.0 * k * k}) {
      for (int i = 0; i < k - 1; ++i) CHECK(VariationalWitness(k, c, i) > 0.0);
    }
  }
  CHECK_THROWS_AS(VariationalWitness(3, 9.0, 2), UsageError);
}

TEST_CASE("distribution files use 1-based profiles") {
  const JointDistribution pi{{{{0, 0}, 0.25}, {{1, 0}, 0.75}}};
  const auto j = DistributionToJson(pi);
  CHECK(j["support"][1]["profile"] == nlohmann::json::array({2, 1}));
  const JointDistribution back = DistributionFromJson(j);
  CHECK(back.support == pi.support);
  const Game g = Game::Dir({3, 9.0});
  JointDistribution bad{{{{0, 0}, 0.5}, {{0, 0}, 0.5}}};
  CHECK_THROWS_AS(bad.Validate(g), UsageError);
  bad = {{{{0, 0}, 0.5}}};
  CHECK_THROWS_AS(EpsilonCeGap(g, bad), UsageError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace domlab
