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

#include "domlab/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "domlab/errors.h"

namespace domlab {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 70;
constexpr double kRight = 210;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                "#bcbd22", "#17becf"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

SeriesSummary Summarize(const PlotSeries& series) {
  SeriesSummary out;
  if (series.runs.empty()) return out;
  std::map<std::int64_t, std::vector<double>> by_t;
  for (const auto& run : series.runs) {
    for (const auto& [t, v] : run) {
      if (t > 0) by_t[t].push_back(v);
    }
  }
  const std::size_t runs = series.runs.size();
  for (const auto& [t, values] : by_t) {
    if (values.size() != runs) continue;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(runs);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    out.t.push_back(t);
    out.mean.push_back(mean);
    out.stddev.push_back(runs > 1 ? std::sqrt(var / (runs - 1)) : 0.0);
  }
  return out;
}

std::string RenderSvg(const std::vector<PlotSeries>& series,
                      const std::string& title, const std::string& y_label) {
  if (series.empty()) throw UsageError("plot: no series");
  std::vector<SeriesSummary> summaries;
  std::int64_t t_max = 1;
  for (const auto& s : series) {
    summaries.push_back(Summarize(s));
    if (!summaries.back().t.empty()) {
      t_max = std::max(t_max, summaries.back().t.back());
    }
  }
  const int decades = std::max(1, static_cast<int>(std::ceil(std::log10(static_cast<double>(t_max)) - 1e-12)));
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](double t) { return kLeft + plot_w * std::log10(t) / decades; };
  auto y_of = [&](double v) {
    return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0));
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
         "\" height=\"" + Num(kHeight) + "\" viewBox=\"0 0 " + Num(kWidth) +
         " " + Num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + Num(kLeft + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         Escape(title) + "</text>\n";
  // Grid and ticks.
  for (int d = 0; d <= decades; ++d) {
    const double x = kLeft + plot_w * d / decades;
    svg += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(kTop) + "\" x2=\"" + Num(x) +
           "\" y2=\"" + Num(kTop + plot_h) + "\" stroke=\"#e0e0e0\"/>\n";
    svg += "<text x=\"" + Num(x) + "\" y=\"" + Num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">10<tspan dy=\"-6\" font-size=\"9\">" +
           std::to_string(d) + "</tspan></text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    const double y = y_of(v);
    svg += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(y) + "\" x2=\"" +
           Num(kLeft + plot_w) + "\" y2=\"" + Num(y) + "\" stroke=\"#e0e0e0\"/>\n";
    svg += "<text x=\"" + Num(kLeft - 8) + "\" y=\"" + Num(y + 4) +
           "\" text-anchor=\"end\">" + Num(v).substr(0, 3) + "</text>\n";
  }
  svg += "<rect x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop) + "\" width=\"" +
         Num(plot_w) + "\" height=\"" + Num(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + Num(kLeft + plot_w / 2) + "\" y=\"" + Num(kHeight - 15) +
         "\" text-anchor=\"middle\">round t (log scale)</text>\n";
  svg += "<text transform=\"translate(20," + Num(kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + Escape(y_label) + "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& sum = summaries[s];
    const std::string color = kPalette[s % std::size(kPalette)];
    if (sum.t.empty()) continue;
    const bool band = std::any_of(sum.stddev.begin(), sum.stddev.end(),
                                  [](double v) { return v > 0.0; }) ||
                      series[s].runs.size() > 1;
    if (band) {
      std::string pts;
      for (std::size_t i = 0; i < sum.t.size(); ++i) {
        pts += Num(x_of(sum.t[i])) + "," + Num(y_of(sum.mean[i] + sum.stddev[i])) + " ";
      }
      for (std::size_t i = sum.t.size(); i-- > 0;) {
        pts += Num(x_of(sum.t[i])) + "," + Num(y_of(sum.mean[i] - sum.stddev[i])) + " ";
      }
      svg += "<polygon points=\"" + pts + "\" fill=\"" + color +
             "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
    }
    std::string pts;
    for (std::size_t i = 0; i < sum.t.size(); ++i) {
      pts += Num(x_of(sum.t[i])) + "," + Num(y_of(sum.mean[i])) + " ";
    }
    svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    const double ly = kTop + 10 + 20 * static_cast<double>(s);
    const double lx = kLeft + plot_w + 15;
    svg += "<line x1=\"" + Num(lx) + "\" y1=\"" + Num(ly) + "\" x2=\"" + Num(lx + 25) +
           "\" y2=\"" + Num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + Num(lx + 32) + "\" y=\"" + Num(ly + 4) + "\">" +
           Escape(series[s].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace domlab
