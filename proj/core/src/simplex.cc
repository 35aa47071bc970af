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

#include "domlab/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domlab/errors.h"

namespace domlab {
namespace {

constexpr double kPivotTolerance = 1e-12;

}  // namespace

PackingLpResult SolvePackingLp(const std::vector<double>& a, int rows,
                               int cols) {
  if (rows < 1 || cols < 1 ||
      static_cast<std::size_t>(rows) * cols != a.size()) {
    throw UsageError("packing LP: matrix shape mismatch");
  }
  // Tableau columns: [w_0..w_{cols-1}, s_0..s_{rows-1}, rhs]. The last row
  // holds reduced costs (objective coefficients minus z_j) negated so that
  // a positive entry means the column improves the objective.
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  std::vector<double> t(static_cast<std::size_t>(rows + 1) * width, 0.0);
  auto at = [&](int r, int c) -> double& {
    return t[static_cast<std::size_t>(r) * width + c];
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) at(r, c) = a[r * cols + c];
    at(r, cols + r) = 1.0;
    at(r, rhs) = 1.0;
  }
  for (int c = 0; c < cols; ++c) at(rows, c) = 1.0;
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;

  const long max_pivots = 50L * (rows + cols) + 1000;
  for (long pivots = 0;; ++pivots) {
    if (pivots > max_pivots) throw NumericalError("simplex: pivot limit hit");
    int enter = -1;
    for (int c = 0; c < rhs; ++c) {
      if (at(rows, c) > kPivotTolerance) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kPivotTolerance) continue;
      const double ratio = at(r, rhs) / coef;
      const bool tie = leave >= 0 && std::abs(ratio - best) <= kPivotTolerance;
      if (ratio < best - kPivotTolerance || (tie && basis[r] < basis[leave])) {
        best = std::min(best, ratio);
        leave = r;
      }
    }
    if (leave < 0) throw NumericalError("simplex: unbounded packing LP");
    const double pivot = at(leave, enter);
    for (int c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      for (int c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
    }
    basis[leave] = enter;
  }

  PackingLpResult result;
  result.primal.assign(cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) result.primal[basis[r]] = at(r, rhs);
  }
  result.dual.resize(rows);
  for (int r = 0; r < rows; ++r) {
    result.dual[r] = std::max(0.0, -at(rows, cols + r));
  }
  result.objective = -at(rows, rhs);
  return result;
}

MaxMinResult SolveMaxMin(const std::vector<double>& m, int rows, int cols) {
  if (rows < 1 || cols < 1 ||
      static_cast<std::size_t>(rows) * cols != m.size()) {
    throw UsageError("max-min LP: matrix shape mismatch");
  }
  const double lo = *std::min_element(m.begin(), m.end());
  const double shift = 1.0 - lo;
  // The packing LP over M' = M + shift is the dual of
  //   min sum(z)  s.t.  M'^T z >= 1, z >= 0,
  // whose solution scaled to the simplex is the optimal mixture.
  std::vector<double> shifted(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      shifted[static_cast<std::size_t>(r) * cols + c] =
          m[static_cast<std::size_t>(r) * cols + c] + shift;
    }
  }
  const PackingLpResult lp = SolvePackingLp(shifted, rows, cols);
  MaxMinResult result;
  result.mixture = lp.dual;
  double total = 0.0;
  for (double z : result.mixture) total += z;
  if (!(total > 0.0)) throw NumericalError("max-min LP: degenerate dual");
  for (double& z : result.mixture) z /= total;
  result.value = std::numeric_limits<double>::infinity();
  for (int c = 0; c < cols; ++c) {
    double v = 0.0;
    for (int r = 0; r < rows; ++r) {
      v += result.mixture[r] * m[static_cast<std::size_t>(r) * cols + c];
    }
    result.value = std::min(result.value, v);
  }
  return result;
}

}  // namespace domlab
