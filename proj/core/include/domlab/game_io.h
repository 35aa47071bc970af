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

#ifndef DOMLAB_GAME_IO_H_
#define DOMLAB_GAME_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "domlab/game.h"

namespace domlab {

// Game files are JSON objects with a "kind" field:
//   {"kind":"tensor","players":N,"actions":[K_1,...],"payoffs":[...]}
//   {"kind":"dir","K":10,"c":20.0}
//   {"kind":"lemons","num_sellers":..,"qualities":[..],"price_set":[..],
//    "listing_cost":..,"buyer_multiplier":..,"quality_noise_std":..}
// Generator forms are stored by parameters and round-trip exactly.
nlohmann::json GameToJson(const Game& game);
Game GameFromJson(const nlohmann::json& j);

Game LoadGame(const std::string& path);
void SaveGame(const Game& game, const std::string& path);

// Short human-readable identifier, e.g. "dir_K10_c20".
std::string GameSlug(const Game& game);

// Reads a whole file; throws Error if it cannot be opened.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace domlab

#endif  // DOMLAB_GAME_IO_H_
