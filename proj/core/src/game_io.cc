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

#include "domlab/game_io.h"

#include <fstream>
#include <sstream>

#include "domlab/errors.h"

namespace domlab {
namespace {

using nlohmann::json;

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw UsageError(std::string("game file: missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("game file: field \"") + key +
                     "\" has the wrong type");
  }
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

json GameToJson(const Game& game) {
  json j;
  switch (game.Kind()) {
    case PayoffKind::kTensor:
      j["kind"] = "tensor";
      j["players"] = game.NumPlayers();
      j["actions"] = game.ActionCounts();
      j["payoffs"] = game.TensorPayoffs();
      break;
    case PayoffKind::kDir:
      j["kind"] = "dir";
      j["K"] = game.Dir().num_actions;
      j["c"] = game.Dir().c;
      break;
    case PayoffKind::kLemons: {
      const LemonsParams& p = game.Lemons();
      j["kind"] = "lemons";
      j["num_sellers"] = p.num_sellers;
      j["qualities"] = p.qualities;
      j["price_set"] = p.prices;
      j["listing_cost"] = p.listing_cost;
      j["buyer_multiplier"] = p.buyer_multiplier;
      j["quality_noise_std"] = p.quality_noise_std;
      break;
    }
  }
  return j;
}

Game GameFromJson(const json& j) {
  if (!j.is_object()) throw UsageError("game file: expected a JSON object");
  const std::string kind = Field<std::string>(j, "kind");
  if (kind == "tensor") {
    const int players = Field<int>(j, "players");
    auto actions = Field<std::vector<int>>(j, "actions");
    if (static_cast<int>(actions.size()) != players) {
      throw UsageError("game file: \"actions\" must have one entry per player");
    }
    return Game::Tensor(std::move(actions),
                        Field<std::vector<double>>(j, "payoffs"));
  }
  if (kind == "dir") {
    DirParams d;
    d.num_actions = Field<int>(j, "K");
    d.c = Field<double>(j, "c");
    return Game::Dir(d);
  }
  if (kind == "lemons") {
    LemonsParams p;
    p.num_sellers = Field<int>(j, "num_sellers");
    p.qualities = Field<std::vector<double>>(j, "qualities");
    p.prices = Field<std::vector<double>>(j, "price_set");
    p.listing_cost = Field<double>(j, "listing_cost");
    p.buyer_multiplier = Field<double>(j, "buyer_multiplier");
    p.quality_noise_std = j.value("quality_noise_std", 0.0);
    return Game::Lemons(p);
  }
  throw UsageError("game file: unknown kind \"" + kind + "\"");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("write failed for " + path);
}

Game LoadGame(const std::string& path) {
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  return GameFromJson(j);
}

void SaveGame(const Game& game, const std::string& path) {
  WriteFile(path, GameToJson(game).dump(2) + "\n");
}

std::string GameSlug(const Game& game) {
  switch (game.Kind()) {
    case PayoffKind::kDir:
      return "dir_K" + std::to_string(game.Dir().num_actions) + "_c" +
             FormatNumber(game.Dir().c);
    case PayoffKind::kLemons:
      return "lemons_N" + std::to_string(game.Lemons().num_sellers);
    case PayoffKind::kTensor: {
      std::string s = "tensor";
      for (int k : game.ActionCounts()) s += "_" + std::to_string(k);
      return s;
    }
  }
  return "game";
}

}  // namespace domlab
