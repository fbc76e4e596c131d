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

#ifndef DYNCONG_ARENA_H_
#define DYNCONG_ARENA_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dyncong/common.h"
#include "dyncong/cost_function.h"

namespace dyncong {

struct Edge {
  StateId from = 0;
  StateId to = 0;
  CostFunction cost = CostFunction::Constant(0);
};

struct EdgeSpec {
  std::string from;
  std::string to;
  CostFunction cost = CostFunction::Constant(0);
};

// Weighted directed graph <V, E, src, tgt>. E is a partial function on
// V x V, so an edge is identified by its endpoints. Edge ids follow
// declaration order; the implicit target loop is appended last.
class Arena {
 public:
  // Resolves names and inserts the target self-loop when absent. Throws
  // InputError on duplicate states or edges, unknown states, and an
  // explicit target loop with a non-zero cost. Reachability and the target
  // out-degree are left to ValidateArena.
  static Arena Create(std::vector<std::string> states, const std::string& source,
                      const std::string& target, const std::vector<EdgeSpec>& edges);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  StateId source() const { return source_; }
  StateId target() const { return target_; }
  const std::string& state_name(StateId s) const { return states_[s]; }
  const std::vector<std::string>& state_names() const { return states_; }
  // Throws InputError for unknown names.
  StateId state_id(std::string_view name) const;
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Outgoing edge ids of `s`, in edge-id order.
  const std::vector<EdgeId>& out_edges(StateId s) const { return out_edges_[s]; }
  std::optional<EdgeId> FindEdge(StateId from, StateId to) const;
  EdgeId target_loop() const { return *FindEdge(target_, target_); }
  std::string EdgeName(EdgeId e) const;

  // Fewest edges from each state to the target (single player).
  std::vector<std::size_t> HopsToTarget() const;

  friend bool operator==(const Arena& a, const Arena& b);

 private:
  Arena() = default;

  std::vector<std::string> states_;
  std::unordered_map<std::string, StateId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  StateId source_ = 0;
  StateId target_ = 0;
};

// Empty when the arena satisfies every invariant; otherwise one message per
// violation naming the state or edge at fault.
std::vector<std::string> ValidateArena(const Arena& arena);

// JSON arena file: {"states", "source", "target", "edges"}; unknown keys are
// rejected. Throws InputError on any syntax or validation problem.
Arena ParseArena(std::string_view text);
Arena LoadArenaFile(const std::string& path);
// Canonical text; the implicit target loop is omitted.
std::string SerializeArena(const Arena& arena);

// A dynamic congestion game: an arena played by n >= 1 players.
class Game {
 public:
  // Throws InputError if the arena is invalid or n == 0.
  Game(Arena arena, std::size_t num_players);

  const Arena& arena() const { return arena_; }
  std::size_t num_players() const { return num_players_; }
  // Largest one-step cost: max over edges of d_e(n).
  Natural kappa() const { return kappa_; }
  // Ceiling |V| * kappa on what any player needs to pay.
  Natural cost_ceiling() const { return cost_ceiling_; }

 private:
  Arena arena_;
  std::size_t num_players_;
  Natural kappa_ = 0;
  Natural cost_ceiling_ = 0;
};

Natural Kappa(const Arena& arena, std::size_t num_players);

}  // namespace dyncong

#endif  // DYNCONG_ARENA_H_
