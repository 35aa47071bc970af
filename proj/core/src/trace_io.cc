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

#include "domlab/trace_io.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "domlab/errors.h"

namespace domlab {
namespace {

void AppendRow(std::string& out, std::int64_t t, std::uint64_t seed,
               int agent, const std::string& metric, double value) {
  out += std::to_string(t);
  out += ',';
  out += std::to_string(seed);
  out += ',';
  out += std::to_string(agent);
  out += ',';
  out += metric;
  out += ',';
  out += FormatDouble(value);
  out += '\n';
}

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string TraceToCsv(const Trace& trace, bool dump_dists) {
  std::string out = std::string(kTraceHeader) + "\n";
  for (const auto& c : trace.checkpoints) {
    if (c.poe) AppendRow(out, c.t, trace.seed, -1, "poe", *c.poe);
    if (c.ne_mass) AppendRow(out, c.t, trace.seed, -1, "ne_mass", *c.ne_mass);
    AppendRow(out, c.t, trace.seed, -1, "max_dom_prob", c.max_dom_prob);
    if (!dump_dists) continue;
    for (std::size_t n = 0; n < c.distributions.size(); ++n) {
      for (std::size_t a = 0; a < c.distributions[n].size(); ++a) {
        AppendRow(out, c.t, trace.seed, static_cast<int>(n) + 1,
                  "p_" + std::to_string(a + 1), c.distributions[n][a]);
      }
    }
  }
  return out;
}

std::vector<TraceRow> ParseTraceCsv(const std::string& text,
                                    const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    return Error(source + ":" + std::to_string(line_no) + ": " + why +
                 " in row \"" + line + "\"");
  };
  if (!std::getline(in, line)) {
    throw Error(source + ": empty trace file");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) throw fail("unexpected header");
  std::vector<TraceRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitCommas(line);
    if (fields.size() != 5) throw fail("expected 5 fields");
    TraceRow row;
    char* end = nullptr;
    errno = 0;
    row.t = std::strtoll(fields[0].c_str(), &end, 10);
    if (fields[0].empty() || *end || errno) throw fail("bad t");
    row.seed = std::strtoull(fields[1].c_str(), &end, 10);
    if (fields[1].empty() || *end || errno) throw fail("bad seed");
    row.agent = static_cast<int>(std::strtol(fields[2].c_str(), &end, 10));
    if (fields[2].empty() || *end || errno) throw fail("bad agent");
    row.metric = fields[3];
    if (row.metric.empty()) throw fail("empty metric");
    row.value = std::strtod(fields[4].c_str(), &end);
    if (fields[4].empty() || *end || errno) throw fail("bad value");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string TraceFileName(const std::string& algo_slug, std::uint64_t seed) {
  return algo_slug + "__seed" + std::to_string(seed) + ".csv";
}

}  // namespace domlab
