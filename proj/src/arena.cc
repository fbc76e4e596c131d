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

#include "dyncong/arena.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dyncong {
namespace {

using nlohmann::json;

std::uint64_t EdgeKey(StateId from, StateId to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

void RejectUnknownKeys(const json& object, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  if (!object.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; })) {
      throw InputError("unknown key '" + key + "' in " + where);
    }
  }
}

const json& Require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

std::string RequireString(const json& object, const char* key, const std::string& where) {
  const json& v = Require(object, key, where);
  if (!v.is_string()) throw InputError("'" + std::string(key) + "' in " + where + " must be a string");
  return v.get<std::string>();
}

std::int64_t RequireInteger(const json& object, const char* key, const std::string& where) {
  const json& v = Require(object, key, where);
  if (!v.is_number_integer()) {
    throw InputError("'" + std::string(key) + "' in " + where + " must be an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InputError("'" + std::string(key) + "' in " + where + " is out of range");
  }
  return v.get<std::int64_t>();
}

}  // namespace

Arena Arena::Create(std::vector<std::string> states, const std::string& source,
                    const std::string& target, const std::vector<EdgeSpec>& edges) {
  Arena arena;
  if (states.empty()) throw InputError("arena has no states");
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (!arena.index_.emplace(states[s], static_cast<StateId>(s)).second) {
      throw InputError("duplicate state '" + states[s] + "'");
    }
  }
  arena.states_ = std::move(states);
  arena.source_ = arena.state_id(source);
  arena.target_ = arena.state_id(target);
  arena.out_edges_.resize(arena.states_.size());
  auto add = [&](StateId from, StateId to, CostFunction cost) {
    if (!arena.edge_index_.emplace(EdgeKey(from, to), arena.edges_.size()).second) {
      throw InputError("duplicate edge " + arena.states_[from] + "->" + arena.states_[to]);
    }
    arena.out_edges_[from].push_back(static_cast<EdgeId>(arena.edges_.size()));
    arena.edges_.push_back(Edge{from, to, std::move(cost)});
  };
  for (const EdgeSpec& e : edges) {
    StateId from = arena.state_id(e.from);
    StateId to = arena.state_id(e.to);
    if (from == arena.target_ && to == arena.target_ && !e.cost.IsZero()) {
      throw InputError("the target self-loop must have the constant-zero cost function");
    }
    add(from, to, e.cost);
  }
  if (!arena.FindEdge(arena.target_, arena.target_)) {
    add(arena.target_, arena.target_, CostFunction::Constant(0));
  }
  return arena;
}

StateId Arena::state_id(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown state '" + std::string(name) + "'");
  return it->second;
}

std::optional<EdgeId> Arena::FindEdge(StateId from, StateId to) const {
  auto it = edge_index_.find(EdgeKey(from, to));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string Arena::EdgeName(EdgeId e) const {
  return states_[edges_[e].from] + "->" + states_[edges_[e].to];
}

std::vector<std::size_t> Arena::HopsToTarget() const {
  const std::size_t unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> hops(states_.size(), unreachable);
  std::vector<std::vector<StateId>> preds(states_.size());
  for (const Edge& e : edges_) preds[e.to].push_back(e.from);
  std::deque<StateId> queue{target_};
  hops[target_] = 0;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (StateId p : preds[s]) {
      if (hops[p] == unreachable) {
        hops[p] = hops[s] + 1;
        queue.push_back(p);
      }
    }
  }
  return hops;
}

bool operator==(const Arena& a, const Arena& b) {
  if (a.states_ != b.states_ || a.source_ != b.source_ || a.target_ != b.target_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (const Edge& e : a.edges_) {
    auto other = b.FindEdge(e.from, e.to);
    if (!other || !(b.edges_[*other].cost == e.cost)) return false;
  }
  return true;
}

std::vector<std::string> ValidateArena(const Arena& arena) {
  std::vector<std::string> violations;
  for (EdgeId e : arena.out_edges(arena.target())) {
    if (arena.edge(e).to != arena.target()) {
      violations.push_back("tgt out-degree violation: target has outgoing edge " +
                           arena.EdgeName(e));
    }
  }
  EdgeId loop = arena.target_loop();
  if (!arena.edge(loop).cost.IsZero()) {
    violations.push_back("target self-loop must have the constant-zero cost function");
  }
  std::vector<std::size_t> hops = arena.HopsToTarget();
  for (StateId s = 0; s < arena.num_states(); ++s) {
    if (hops[s] == std::numeric_limits<std::size_t>::max()) {
      violations.push_back("tgt unreachable from " + arena.state_name(s));
    }
  }
  return violations;
}

Arena ParseArena(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("arena syntax error: ") + e.what());
  }
  RejectUnknownKeys(doc, {"states", "source", "target", "edges"}, "arena");
  const json& states_json = Require(doc, "states", "arena");
  if (!states_json.is_array()) throw InputError("'states' must be an array");
  std::vector<std::string> states;
  for (const json& s : states_json) {
    if (!s.is_string()) throw InputError("state identifiers must be strings");
    states.push_back(s.get<std::string>());
  }
  std::string source = RequireString(doc, "source", "arena");
  std::string target = RequireString(doc, "target", "arena");
  const json& edges_json = Require(doc, "edges", "arena");
  if (!edges_json.is_array()) throw InputError("'edges' must be an array");
  std::vector<EdgeSpec> edges;
  for (const json& e : edges_json) {
    RejectUnknownKeys(e, {"from", "to", "cost"}, "edge");
    EdgeSpec spec;
    spec.from = RequireString(e, "from", "edge");
    spec.to = RequireString(e, "to", "edge");
    std::string where = "cost of edge " + spec.from + "->" + spec.to;
    const json& cost = Require(e, "cost", "edge");
    RejectUnknownKeys(cost, {"pieces"}, where);
    const json& pieces_json = Require(cost, "pieces", where);
    if (!pieces_json.is_array()) throw InputError("'pieces' must be an array in " + where);
    std::vector<PieceSpec> pieces;
    for (const json& p : pieces_json) {
      RejectUnknownKeys(p, {"from_load", "slope", "intercept"}, "piece of " + where);
      pieces.push_back(PieceSpec{RequireInteger(p, "from_load", where),
                                 RequireInteger(p, "slope", where),
                                 RequireInteger(p, "intercept", where)});
    }
    std::string problem = ValidateCostFunction(pieces);
    if (!problem.empty()) throw InputError("invalid " + where + ": " + problem);
    spec.cost = CostFunction::Create(pieces);
    edges.push_back(std::move(spec));
  }
  Arena arena = Arena::Create(std::move(states), source, target, edges);
  std::vector<std::string> violations = ValidateArena(arena);
  if (!violations.empty()) {
    std::string message = "invalid arena:";
    for (const std::string& v : violations) message += "\n  " + v;
    throw InputError(message);
  }
  return arena;
}

Arena LoadArenaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open arena file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseArena(buffer.str());
}

std::string SerializeArena(const Arena& arena) {
  json doc;
  doc["states"] = arena.state_names();
  doc["source"] = arena.state_name(arena.source());
  doc["target"] = arena.state_name(arena.target());
  json edges = json::array();
  for (EdgeId e = 0; e < arena.num_edges(); ++e) {
    const Edge& edge = arena.edge(e);
    if (e == arena.target_loop()) continue;
    json pieces = json::array();
    for (const Piece& p : edge.cost.pieces()) {
      pieces.push_back({{"from_load", p.from_load}, {"slope", p.slope}, {"intercept", p.intercept}});
    }
    edges.push_back({{"from", arena.state_name(edge.from)},
                     {"to", arena.state_name(edge.to)},
                     {"cost", {{"pieces", pieces}}}});
  }
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

Natural Kappa(const Arena& arena, std::size_t num_players) {
  Natural kappa = 0;
  for (const Edge& e : arena.edges()) kappa = std::max(kappa, e.cost.Eval(num_players));
  return kappa;
}

Game::Game(Arena arena, std::size_t num_players)
    : arena_(std::move(arena)), num_players_(num_players) {
  if (num_players_ == 0) throw InputError("a game needs at least one player");
  std::vector<std::string> violations = ValidateArena(arena_);
  if (!violations.empty()) throw InputError("invalid arena: " + violations.front());
  kappa_ = Kappa(arena_, num_players_);
  cost_ceiling_ = CheckedMul(arena_.num_states(), kappa_);
}

}  // namespace dyncong
