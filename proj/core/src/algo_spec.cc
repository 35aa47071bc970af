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

#include "domlab/algo_spec.h"

#include <cmath>
#include <cctype>
#include <cstdlib>
#include <set>
#include <vector>

#include "domlab/errors.h"
#include "domlab/learners.h"

namespace domlab {
namespace {

struct AlgoInfo {
  std::set<std::string> keys;
  std::set<std::string> required;
};

const std::map<std::string, AlgoInfo>& Registry() {
  static const auto* registry = new std::map<std::string, AlgoInfo>{
      {"exp3dh", {{"b", "beta"}, {"b", "beta"}}},
      {"exp3", {{}, {}}},
      {"exp3rvu", {{}, {}}},
      {"exp3p", {{"T", "delta"}, {"T"}}},
      {"exp3pswap", {{"T", "delta"}, {"T"}}},
      {"omdlb", {{"T", "eta"}, {"T"}}},
      {"ew", {{"eta0", "b"}, {}}},
      {"lgd", {{"eta0", "b"}, {}}},
      {"fp", {{"eta0", "b"}, {}}},
  };
  return *registry;
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double Get(const AlgoSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::int64_t Horizon(const AlgoSpec& spec) {
  const double t = spec.params.at("T");
  if (!(t >= 1.0) || t != std::floor(t) || t > 9e15) {
    throw UsageError(spec.name + ": T must be a positive integer");
  }
  return static_cast<std::int64_t>(t);
}

}  // namespace

AlgoSpec ParseAlgoSpec(const std::string& text) {
  AlgoSpec spec;
  spec.text = Trim(text);
  const auto colon = spec.text.find(':');
  spec.name = Trim(spec.text.substr(0, colon));
  auto info = Registry().find(spec.name);
  if (info == Registry().end()) {
    throw UsageError("unknown algorithm \"" + spec.name + "\"");
  }
  if (colon != std::string::npos) {
    std::string rest = spec.text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item = Trim(rest.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start));
      start = comma == std::string::npos ? rest.size() + 1 : comma + 1;
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw UsageError("algorithm parameter \"" + item + "\" needs key=value");
      }
      const std::string key = Trim(item.substr(0, eq));
      const std::string value = Trim(item.substr(eq + 1));
      if (!info->second.keys.count(key)) {
        throw UsageError("unknown parameter \"" + key + "\" for " + spec.name);
      }
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (value.empty() || *end != '\0' || !std::isfinite(v)) {
        throw UsageError("parameter " + key + " has invalid value \"" +
                         value + "\"");
      }
      if (!spec.params.emplace(key, v).second) {
        throw UsageError("parameter " + key + " given twice");
      }
    }
  }
  for (const auto& key : info->second.required) {
    if (!spec.params.count(key)) {
      throw UsageError(spec.name + " requires parameter " + key);
    }
  }
  return spec;
}

std::unique_ptr<Learner> MakeLearner(const AlgoSpec& spec, int num_actions) {
  const std::string& n = spec.name;
  if (n == "exp3dh") {
    return std::make_unique<Exp3DH>(num_actions, spec.params.at("b"),
                                    spec.params.at("beta"));
  }
  if (n == "exp3") return std::make_unique<Exp3>(num_actions);
  if (n == "exp3rvu") return std::make_unique<Exp3Rvu>(num_actions);
  if (n == "exp3p") {
    return std::make_unique<Exp3P>(num_actions, Horizon(spec),
                                   Get(spec, "delta", 0.01));
  }
  if (n == "exp3pswap") {
    const std::int64_t horizon = Horizon(spec);
    const double delta = Get(spec, "delta", 0.01);
    return std::make_unique<SwapRegret>(
        num_actions,
        [=] { return std::make_unique<Exp3P>(num_actions, horizon, delta); },
        "exp3pswap");
  }
  if (n == "omdlb") {
    std::optional<double> eta;
    if (spec.params.count("eta")) eta = spec.params.at("eta");
    return std::make_unique<OmdLogBarrier>(num_actions, Horizon(spec), eta);
  }
  if (n == "ew" || n == "lgd" || n == "fp") {
    const MirrorMapKind map = n == "ew"    ? MirrorMapKind::kEntropic
                              : n == "lgd" ? MirrorMapKind::kEuclidean
                                           : MirrorMapKind::kBestResponse;
    // Fictitious play defaults to plain score sums.
    LearningRate rate{Get(spec, "eta0", 1.0), Get(spec, "b", n == "fp" ? 0.0 : 0.5)};
    return std::make_unique<DualAveraging>(num_actions, map, rate);
  }
  throw UsageError("unknown algorithm \"" + n + "\"");
}

std::string AlgoSlug(const AlgoSpec& spec) {
  std::string out;
  for (char ch : spec.text) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-') {
      out += ch;
    } else if (ch == ':' || ch == ',' || ch == '=') {
      out += ch == '=' ? '-' : '_';
    }
  }
  return out;
}

}  // namespace domlab
