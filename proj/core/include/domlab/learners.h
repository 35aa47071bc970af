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

#ifndef DOMLAB_LEARNERS_H_
#define DOMLAB_LEARNERS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domlab/learner.h"
#include "domlab/mirror_map.h"

namespace domlab {

// eta_t = eta0 * (t + 1)^(-exponent) for rounds t = 0, 1, ...
struct LearningRate {
  double eta0 = 1.0;
  double exponent = 0.5;

  double At(std::int64_t t) const;
};

// Dual averaging: y <- y + eta_t * u, p = Q(y). Full-vector feedback.
class DualAveraging : public Learner {
 public:
  DualAveraging(int num_actions, MirrorMapKind map, LearningRate rate);

  FeedbackKind Feedback() const override { return FeedbackKind::kFullVector; }
  std::string Name() const override;
  const std::vector<double>& Scores() const { return scores_; }

 protected:
  MixedStrategy ComputeDistribution() const override;
  void UpdateVector(std::span<const double> payoffs) override;

 private:
  MirrorMapKind map_;
  LearningRate rate_;
  std::vector<double> scores_;
};

// Exp3 with diminishing history. Scores are importance-weighted rewards
// whose past is discounted every round, so the round-tau estimate carries
// weight (tau / t)^beta inside y(t + 1); exploration floor t^(-b) / K.
class Exp3DH : public Learner {
 public:
  Exp3DH(int num_actions, double b, double beta);

  FeedbackKind Feedback() const override { return FeedbackKind::kBandit; }
  std::string Name() const override { return "exp3dh"; }
  const std::vector<double>& Scores() const { return scores_; }

  // epsilon_t = t^(-b), with epsilon_0 = 1.
  static double ExplorationRate(std::int64_t t, double b);
  // Factor applied to y(t) before adding the round-t estimate.
  static double DiscountFactor(std::int64_t t, double beta);
  static MixedStrategy DistributionFor(std::span<const double> y,
                                       std::int64_t t, double b);

 protected:
  MixedStrategy ComputeDistribution() const override;
  void UpdateBandit(int played, double reward) override;

 private:
  double b_;
  double beta_;
  std::vector<double> scores_;
};

// Anytime Exp3: eta_t = sqrt(ln K / (K t)), gamma_t = min(1, sqrt(K ln K / t))
// with t = round + 1.
class Exp3 : public Learner {
 public:
  explicit Exp3(int num_actions);

  FeedbackKind Feedback() const override { return FeedbackKind::kBandit; }
  std::string Name() const override { return "exp3"; }

  double LearningRateAt(std::int64_t t) const;
  double ExplorationAt(std::int64_t t) const;

 protected:
  MixedStrategy ComputeDistribution() const override;
  void UpdateBandit(int played, double reward) override;
  // Scores that enter the softmax for the current round.
  virtual std::vector<double> EffectiveScores() const { return scores_; }

  std::vector<double> scores_;
};

// Exp3 with recency bias: the latest estimate is counted twice.
class Exp3Rvu : public Exp3 {
 public:
  explicit Exp3Rvu(int num_actions);
  std::string Name() const override { return "exp3rvu"; }

 protected:
  void UpdateBandit(int played, double reward) override;
  std::vector<double> EffectiveScores() const override;

 private:
  std::vector<double> last_estimate_;
};

// Exp3.P for a known horizon with high-probability confidence bonus.
class Exp3P : public Learner {
 public:
  Exp3P(int num_actions, std::int64_t horizon, double delta = 0.01);

  FeedbackKind Feedback() const override { return FeedbackKind::kBandit; }
  std::string Name() const override { return "exp3p"; }

  double Bonus() const { return bonus_; }
  double Eta() const { return eta_; }
  double Gamma() const { return gamma_; }

 protected:
  MixedStrategy ComputeDistribution() const override;
  void UpdateBandit(int played, double reward) override;

 private:
  double bonus_;
  double eta_;
  double gamma_;
  std::vector<double> scores_;
};

// Stationary distribution p = p M of a row-stochastic K x K matrix by power
// iteration from `start` (uniform when empty). Returns nullopt when the L1
// change does not fall below `tolerance` within `max_iterations`.
std::optional<MixedStrategy> PowerIteration(const std::vector<double>& m,
                                            int k, MixedStrategy start = {},
                                            double tolerance = 1e-12,
                                            int max_iterations = 10000);

// Same, retrying once on a matrix mixed with 1e-6 uniform noise; throws
// NumericalError if both attempts fail.
MixedStrategy StationaryDistribution(const std::vector<double>& m, int k,
                                     MixedStrategy start = {});

// External-to-swap regret reduction: K copies of a base learner, one per
// action, combined through the stationary distribution of their rows.
class SwapRegret : public Learner {
 public:
  using Factory = std::function<std::unique_ptr<Learner>()>;
  SwapRegret(int num_actions, const Factory& factory, std::string name);

  FeedbackKind Feedback() const override { return FeedbackKind::kBandit; }
  std::string Name() const override { return name_; }

 protected:
  MixedStrategy ComputeDistribution() const override;
  void UpdateBandit(int played, double reward) override;

 private:
  std::vector<std::unique_ptr<Learner>> bases_;
  std::string name_;
  // Previous stationary distribution, used to warm-start power iteration.
  mutable MixedStrategy warm_start_;
};

// Online mirror descent with a log-barrier regularizer and per-coordinate
// increasing learning rates.
class OmdLogBarrier : public Learner {
 public:
  OmdLogBarrier(int num_actions, std::int64_t horizon,
                std::optional<double> eta = std::nullopt);

  FeedbackKind Feedback() const override { return FeedbackKind::kBandit; }
  std::string Name() const override { return "omdlb"; }

  const std::vector<double>& Rates() const { return eta_; }

  // One mirror step from x with reward estimates u and rates eta; returns
  // the normalized next iterate.
  static MixedStrategy Step(std::span<const double> x,
                            std::span<const double> u,
                            std::span<const double> eta);

 protected:
  MixedStrategy ComputeDistribution() const override { return x_; }
  void UpdateBandit(int played, double reward) override;

 private:
  double kappa_;
  std::vector<double> x_;
  std::vector<double> eta_;
  std::vector<double> threshold_;
};

}  // namespace domlab

#endif  // DOMLAB_LEARNERS_H_
