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

#include <algorithm>
#include <cmath>
#include <string>

#include "domlab/errors.h"
#include "domlab/iesds.h"

namespace domlab {

int LemonsSpacing(const LemonsParams& params) {
  params.Validate();
  const int n = params.num_sellers;
  const auto& q = params.qualities;  // q[i - 1] is seller i's quality
  const double c1 = params.listing_cost;
  int k = n;
  for (int cand = 1; cand <= n; ++cand) {
    bool ok = true;
    for (int i = cand + 1; i <= n && ok; ++i) ok = q[i - 1] - q[i - cand - 1] >= c1;
    if (ok) {
      k = cand;
      break;
    }
  }
  for (int i = k; i <= n; ++i) {
    if (!(q[i - 1] - q[i - k] < c1)) {
      throw AnalyticPathUnavailable(
          "quality spacing is not uniform enough for a closed-form path (k=" +
          std::to_string(k) + ")");
    }
  }
  return k;
}

EliminationPath LemonsAnalyticPath(const LemonsParams& params) {
  params.Validate();
  if (params.quality_noise_std != 0.0) {
    throw AnalyticPathUnavailable("closed-form path needs zero quality noise");
  }
  const int n = params.num_sellers;
  const auto& q = params.qualities;
  const auto& prices = params.prices;
  for (double qi : q) {
    if (std::find(prices.begin(), prices.end(), qi) == prices.end()) {
      throw AnalyticPathUnavailable("price set must contain every quality");
    }
  }
  if (prices.back() != q.back()) {
    throw AnalyticPathUnavailable("highest price must equal highest quality");
  }
  const int k = LemonsSpacing(params);
  const int rounds = (n + k - 1) / k;  // ceil(N / k)

  auto sellers_in = [&](int lo_exclusive, int hi_inclusive) {
    std::vector<EliminatedAction> out;
    for (int i = std::max(lo_exclusive + 1, 1); i <= hi_inclusive; ++i) {
      out.push_back({i, 1});
    }
    return out;
  };
  std::vector<std::vector<EliminatedAction>> iterations;
  iterations.push_back(sellers_in(n - k, n));
  for (int j = 1; j < rounds; ++j) {
    // Buyer drops every price above the best remaining quality.
    const double lo = q[n - j * k - 1];
    const double hi = q[n - (j - 1) * k - 1];
    std::vector<EliminatedAction> cut;
    for (int p = 0; p < static_cast<int>(prices.size()); ++p) {
      if (prices[p] > lo && prices[p] <= hi) cut.push_back({0, p});
    }
    iterations.push_back(std::move(cut));
    iterations.push_back(sellers_in(n - (j + 1) * k, n - j * k));
  }
  std::vector<int> counts{static_cast<int>(prices.size())};
  counts.insert(counts.end(), n, 2);
  return MakeEliminationPath(std::move(counts), std::move(iterations), {});
}

}  // namespace domlab
