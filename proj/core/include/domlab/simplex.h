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

#ifndef DOMLAB_SIMPLEX_H_
#define DOMLAB_SIMPLEX_H_

#include <vector>

namespace domlab {

// Solves  max sum(w)  s.t.  A w <= 1, w >= 0  for a dense row-major
// matrix A (rows x cols) with strictly positive entries, so the slack basis
// is feasible and the optimum is finite. Tableau simplex with Bland's rule.
struct PackingLpResult {
  double objective = 0.0;
  std::vector<double> primal;  // w, length cols
  std::vector<double> dual;    // shadow prices of the row constraints
};

PackingLpResult SolvePackingLp(const std::vector<double>& a, int rows,
                               int cols);

// Max-min mixture over the rows of M (rows x cols, row-major):
//   maximize v  s.t.  sum_r x_r M[r][c] >= v for all c,  x in the simplex.
// Reduces to the packing LP above after shifting M to positive entries.
struct MaxMinResult {
  std::vector<double> mixture;
  double value = 0.0;  // min_c (x^T M)_c recomputed from the mixture
};

MaxMinResult SolveMaxMin(const std::vector<double>& m, int rows, int cols);

}  // namespace domlab

#endif  // DOMLAB_SIMPLEX_H_
