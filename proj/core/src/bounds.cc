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

#include "domlab/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "domlab/errors.h"

namespace domlab {
namespace {

constexpr long double kMaxBound = 9e18L;

struct Exponent {
  long double a;  // coefficient of t^((1+b)/2)
  long double c;  // coefficient of t
};

Exponent ExponentOf(const T1Params& p) {
  const long double k = p.num_actions;
  const long double e = std::exp(1.0L);
  const long double a =
      4.0L *
      std::sqrt(e * k * (1.0L + p.sigma * p.sigma) /
                (1.0L + 2.0L * p.beta + p.b)) *
      std::sqrt(std::log(2.0L * k / p.delta));
  const long double c = p.gap / (16.0L * (1.0L + p.beta));
  return {a, c};
}

void RequireRange(bool ok, const std::string& what) {
  if (!ok) throw UsageError("bounds: " + what);
}

}  // namespace

void T1Params::Validate() const {
  RequireRange(num_actions >= 1, "K must be >= 1");
  RequireRange(num_players >= 1, "N must be >= 1");
  RequireRange(sigma >= 0.0 && std::isfinite(sigma), "sigma must be >= 0");
  RequireRange(beta > 0.0 && std::isfinite(beta), "beta must be > 0");
  RequireRange(b > 0.0 && b < 1.0, "b must lie in (0, 1)");
  RequireRange(gap > 0.0 && std::isfinite(gap), "Delta must be > 0");
  RequireRange(eps > 0.0 && eps <= 0.5, "eps must lie in (0, 1/2]");
  RequireRange(delta > 0.0 && delta < 0.5, "delta must lie in (0, 1/2)");
}

long double T1LeftSide(const T1Params& p, long double t) {
  const Exponent x = ExponentOf(p);
  return std::pow(t, -static_cast<long double>(p.b)) / p.num_actions +
         std::exp(x.a * std::pow(t, (1.0L + p.b) / 2.0L) - x.c * t);
}

long double T1RightSide(const T1Params& p) {
  return std::min<long double>(p.eps, p.gap / 2.0L) /
         (4.0L * p.num_actions * p.num_players);
}

std::int64_t T1Bound(const T1Params& p) {
  p.Validate();
  const Exponent x = ExponentOf(p);
  const long double rhs = T1RightSide(p);
  auto below = [&](long double t) { return T1LeftSide(p, t) < rhs; };
  // Past the peak of the exponential term both summands decrease, so the
  // condition is monotone there.
  const long double peak = std::max(
      1.0L, std::pow(x.a * (1.0L + p.b) / (2.0L * x.c), 2.0L / (1.0L - p.b)));
  long double lo;  // violates
  long double hi;  // satisfies, and so does everything beyond
  if (!below(std::floor(peak))) {
    lo = std::floor(peak);
    hi = std::max(2.0L * lo, 2.0L);
    while (!below(hi)) {
      lo = hi;
      hi *= 2.0L;
      if (hi > kMaxBound) throw LimitError("T1 exceeds 9e18");
    }
  } else {
    // Before the peak the second term grows while the first shrinks, so
    // scan a log-spaced grid downward for the last violation.
    if (below(1.0L)) return 1;
    constexpr int kGrid = 10000;
    const long double top = std::floor(peak);
    const long double ratio = std::pow(top, 1.0L / kGrid);
    hi = top;
    lo = 1.0L;
    for (int i = kGrid - 1; i >= 0; --i) {
      const long double probe = std::floor(std::pow(ratio, i));
      if (!below(probe)) {
        lo = probe;
        break;
      }
      hi = probe;
    }
  }
  while (hi - lo > 1.0L) {
    const long double mid = std::floor((lo + hi) / 2.0L);
    if (below(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (hi > kMaxBound) throw LimitError("T1 exceeds 9e18");
  return static_cast<std::int64_t>(hi);
}

std::int64_t NextTBound(std::int64_t t_prev, double gap, double beta,
                        double delta) {
  RequireRange(t_prev >= 1, "T_l must be >= 1");
  RequireRange(gap > 0.0 && std::isfinite(gap), "Delta must be > 0");
  RequireRange(beta > 0.0 && std::isfinite(beta), "beta must be > 0");
  RequireRange(delta > 0.0 && delta < 0.5, "delta must lie in (0, 1/2)");
  const long double t = t_prev;
  const long double d = gap;
  const long double bt = beta;
  const long double growth = std::pow(1.0L + 8.0L / d, 1.0L / (1.0L + bt)) * t;
  const long double additive =
      t + (1.0L + bt) * (1.0L + bt) * (4.0L + d) * (4.0L + d) * (8.0L + d) *
              (8.0L + d) / (4.0L * (1.0L + 2.0L * bt) * d * d) *
              std::log(1.0L / delta);
  const long double next = std::ceil(std::max(growth, additive));
  if (next > kMaxBound) throw LimitError("T_l exceeds 9e18");
  return static_cast<std::int64_t>(next);
}

std::vector<std::int64_t> HorizonSchedule(const T1Params& p, int length) {
  RequireRange(length >= 1, "L0 must be >= 1");
  std::vector<std::int64_t> out{T1Bound(p)};
  while (static_cast<int>(out.size()) < length) {
    out.push_back(NextTBound(out.back(), p.gap, p.beta, p.delta));
  }
  return out;
}

}  // namespace domlab
