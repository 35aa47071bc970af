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

#ifndef DOMLAB_SVG_PLOT_H_
#define DOMLAB_SVG_PLOT_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace domlab {

// One curve: several runs (seeds) of (t, value) samples.
struct PlotSeries {
  std::string label;
  std::vector<std::vector<std::pair<std::int64_t, double>>> runs;
};

struct SeriesSummary {
  std::vector<std::int64_t> t;
  std::vector<double> mean;
  std::vector<double> stddev;  // sample standard deviation; 0 for one run
};

// Mean and spread at every t > 0 present in all runs.
SeriesSummary Summarize(const PlotSeries& series);

// Self-contained SVG: x = log10 t with ticks at powers of ten, y in [0, 1],
// one line per series with a shaded +-1 standard deviation band.
std::string RenderSvg(const std::vector<PlotSeries>& series,
                      const std::string& title, const std::string& y_label);

}  // namespace domlab

#endif  // DOMLAB_SVG_PLOT_H_
