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

#ifndef DOMLAB_TRACE_IO_H_
#define DOMLAB_TRACE_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "domlab/simulate.h"

namespace domlab {

inline constexpr char kTraceHeader[] = "t,seed,agent,metric,value";

// %.17g formatting used by every numeric output.
std::string FormatDouble(double v);

// Long-format CSV: poe, ne_mass, max_dom_prob rows with agent -1, plus
// p_<action> rows (1-based agent and action) when `dump_dists` is set.
std::string TraceToCsv(const Trace& trace, bool dump_dists);

struct TraceRow {
  std::int64_t t = 0;
  std::uint64_t seed = 0;
  int agent = -1;
  std::string metric;
  double value = 0.0;
};

// Throws Error naming the offending line on malformed input.
std::vector<TraceRow> ParseTraceCsv(const std::string& text,
                                    const std::string& source);

// "<algo slug>__seed<k>.csv"
std::string TraceFileName(const std::string& algo_slug, std::uint64_t seed);

}  // namespace domlab

#endif  // DOMLAB_TRACE_IO_H_
