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

#include "dyncong/io.h"

#include <fstream>
#include <sstream>

namespace dyncong {

using nlohmann::json;

namespace {

json ConfigToJson(const Arena& arena, const Configuration& c) {
  json out = json::array();
  for (StateId s : c) out.push_back(arena.state_name(s));
  return out;
}

Configuration ConfigFromJson(const Arena& arena, const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("configuration must list one state per player");
  Configuration c;
  for (const json& s : j) {
    if (!s.is_string()) throw InputError("state names must be strings");
    c.push_back(arena.state_id(s.get<std::string>()));
  }
  return c;
}

json EdgeToJson(const Arena& arena, EdgeId e) {
  return json::array({arena.state_name(arena.edge(e).from), arena.state_name(arena.edge(e).to)});
}

EdgeId EdgeFromJson(const Arena& arena, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw InputError("an edge is written as [from, to]");
  }
  auto e = arena.FindEdge(arena.state_id(j[0].get<std::string>()),
                          arena.state_id(j[1].get<std::string>()));
  if (!e) throw InputError("no edge " + j.dump());
  return *e;
}

void RejectUnknownKeys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError(std::string("unknown key '") + key + "' in " + what);
  }
}

}  // namespace

json OutcomeToJson(const Arena& arena, const OutcomePath& path) {
  json steps = json::array();
  for (const OutcomeStep& s : path.steps) {
    json moves = json::array();
    for (EdgeId e : s.moves) moves.push_back(EdgeToJson(arena, e));
    steps.push_back({{"moves", moves}, {"weights", s.weights}, {"config", ConfigToJson(arena, s.next)}});
  }
  return {{"start", ConfigToJson(arena, path.start)}, {"steps", steps}};
}

OutcomePath OutcomeFromJson(const Game& game, const json& j) {
  try {
    const Arena& arena = game.arena();
    const std::size_t n = game.num_players();
    RejectUnknownKeys(j, {"start", "steps"}, "outcome");
    OutcomePath path;
    path.start = j.contains("start") ? ConfigFromJson(arena, j.at("start"), n)
                                     : SourceConfiguration(game);
    if (!j.contains("steps") || !j.at("steps").is_array()) {
      throw InputError("outcome needs a \"steps\" array");
    }
    Configuration current = path.start;
    for (const json& step : j.at("steps")) {
      RejectUnknownKeys(step, {"moves", "weights", "config"}, "outcome step");
      const json& mv = step.at("moves");
      if (!mv.is_array() || mv.size() != n) throw InputError("each step lists one move per player");
      MoveVector moves;
      for (const json& e : mv) moves.push_back(EdgeFromJson(arena, e));
      StepResult r = Step(game, current, moves);
      if (step.contains("weights") && step.at("weights").get<std::vector<Natural>>() != r.weights) {
        throw InputError("step weights disagree with the arena: " + step.at("weights").dump());
      }
      if (step.contains("config") && ConfigFromJson(arena, step.at("config"), n) != r.next) {
        throw InputError("step configuration disagrees with its moves");
      }
      current = r.next;
      path.steps.push_back(OutcomeStep{std::move(moves), std::move(r.weights), std::move(r.next)});
    }
    return path;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed outcome: ") + e.what());
  }
}

json ProfileToJson(const Arena& arena, const BlindProfile& profile) {
  json out = json::array();
  for (const BlindStrategy& s : profile) {
    json edges = json::array();
    for (EdgeId e : s.edges) edges.push_back(EdgeToJson(arena, e));
    out.push_back(edges);
  }
  return out;
}

BlindProfile ProfileFromJson(const Game& game, const json& j) {
  try {
    RejectUnknownKeys(j, {"profile"}, "profile file");
    const json& list = j.at("profile");
    if (!list.is_array()) throw InputError("\"profile\" must be an array");
    BlindProfile profile;
    for (const json& strategy : list) {
      if (!strategy.is_array()) throw InputError("a strategy is an array of edges");
      BlindStrategy s;
      for (const json& e : strategy) s.edges.push_back(EdgeFromJson(game.arena(), e));
      profile.push_back(std::move(s));
    }
    ValidateBlindProfile(game, profile);
    return profile;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profile: ") + e.what());
  }
}

json ExtNatToJson(const ExtNat& v) {
  if (v.is_finite()) return v.value();
  return v.ToString();
}

json LabelsToJson(const Arena& arena, const ConfigGraph& graph, const LabelTable& labels) {
  json out = json::array();
  for (std::size_t t = 0; t < graph.num_transitions(); ++t) {
    const auto& tr = graph.transition(t);
    json values = json::array();
    for (ExtNat v : labels.of(t)) values.push_back(ExtNatToJson(v));
    out.push_back({{"from", ConfigToJson(arena, graph.config(graph.source_of(t)))},
                   {"weights", tr.weights},
                   {"to", ConfigToJson(arena, graph.config(tr.to))},
                   {"labels", values}});
  }
  return out;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace dyncong
