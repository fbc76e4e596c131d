// Copyright 2026 The Dyncong Authors
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

#ifndef DYNCONG_IO_H_
#define DYNCONG_IO_H_

#include <string>

#include "json.hpp"

#include "dyncong/arena.h"
#include "dyncong/dynamics.h"
#include "dyncong/graphs.h"
#include "dyncong/spe.h"

namespace dyncong {

// {"start": [...], "steps": [{"moves": [["a","b"], ...], "weights": [...],
// "config": [...]}, ...]}.
nlohmann::json OutcomeToJson(const Arena& arena, const OutcomePath& path);
// "start" defaults to the source configuration; "weights" and "config" are
// optional but checked when present.
OutcomePath OutcomeFromJson(const Game& game, const nlohmann::json& j);

// {"profile": [[["src","v1"], ["v1","v3"], ...], ...]}, one edge list per
// player.
nlohmann::json ProfileToJson(const Arena& arena, const BlindProfile& profile);
BlindProfile ProfileFromJson(const Game& game, const nlohmann::json& j);

nlohmann::json ExtNatToJson(const ExtNat& v);

// One entry per transition of the configuration graph with per-player
// labels; infinite labels are written as "-inf" / "+inf".
nlohmann::json LabelsToJson(const Arena& arena, const ConfigGraph& graph, const LabelTable& labels);

nlohmann::json ReadJsonFile(const std::string& path);

}  // namespace dyncong

#endif  // DYNCONG_IO_H_
