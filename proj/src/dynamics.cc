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

#include "dyncong/dynamics.h"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

namespace dyncong {

void ValidateBlindProfile(const Game& game, const BlindProfile& profile) {
  const Arena& arena = game.arena();
  if (profile.size() != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.size()) + " strategies for " +
                     std::to_string(game.num_players()) + " players");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    StateId at = arena.source();
    for (EdgeId e : profile[i].edges) {
      if (e >= arena.num_edges() || arena.edge(e).from != at) {
        throw InputError("strategy of player " + std::to_string(i + 1) + " does not chain");
      }
      if (at == arena.target()) {
        throw InputError("strategy of player " + std::to_string(i + 1) +
                         " continues past the target");
      }
      at = arena.edge(e).to;
    }
    if (at != arena.target()) {
      throw InputError("strategy of player " + std::to_string(i + 1) + " does not reach the target");
    }
  }
}

std::size_t ProfileLength(const BlindProfile& profile) {
  std::size_t len = 0;
  for (const BlindStrategy& s : profile) len = std::max(len, s.edges.size());
  return len;
}

EdgeId EdgeAtStep(const Arena& arena, const BlindStrategy& strategy, std::size_t k) {
  return k < strategy.edges.size() ? strategy.edges[k] : arena.target_loop();
}

std::vector<MoveVector> ProfileMoves(const Game& game, const BlindProfile& profile) {
  ValidateBlindProfile(game, profile);
  const std::size_t len = ProfileLength(profile);
  std::vector<MoveVector> moves(len, MoveVector(profile.size()));
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
      moves[k][i] = EdgeAtStep(game.arena(), profile[i], k);
    }
  }
  return moves;
}

PathEvaluation EvalBlindProfile(const Game& game, const BlindProfile& profile) {
  return EvalPath(game, ProfileMoves(game, profile));
}

Natural Potential(const Game& game, const BlindProfile& profile) {
  const Arena& arena = game.arena();
  Natural total = 0;
  for (const MoveVector& moves : ProfileMoves(game, profile)) {
    std::vector<Natural> load(arena.num_edges(), 0);
    for (EdgeId e : moves) ++load[e];
    for (EdgeId e = 0; e < arena.num_edges(); ++e) {
      for (Natural l = 1; l <= load[e]; ++l) total = CheckedAdd(total, arena.edge(e).cost.Eval(l));
    }
  }
  return total;
}

namespace {

struct PathKey {
  Natural cost = 0;
  std::vector<EdgeId> edges;
};

// (cost, number of edges, edge sequence) ordering.
bool KeyLess(const PathKey& a, const PathKey& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

// Dijkstra over (state, layer) where layers 0..last-1 use `layer_cost` and
// the last layer repeats with `final_cost`. Target loops are free and not
// recorded.
template <typename LayerCost, typename FinalCost>
PathKey LayeredShortestPath(const Arena& arena, std::size_t last, LayerCost layer_cost,
                            FinalCost final_cost) {
  const std::size_t num_layers = last + 1;
  const std::size_t size = arena.num_states() * num_layers;
  std::vector<std::optional<PathKey>> best(size);
  std::vector<char> settled(size, 0);
  auto node = [&](StateId s, std::size_t layer) { return layer * arena.num_states() + s; };
  auto cmp = [](const std::pair<PathKey, std::size_t>& a, const std::pair<PathKey, std::size_t>& b) {
    return KeyLess(b.first, a.first);
  };
  std::priority_queue<std::pair<PathKey, std::size_t>, std::vector<std::pair<PathKey, std::size_t>>,
                      decltype(cmp)>
      queue(cmp);
  best[node(arena.source(), 0)] = PathKey{};
  queue.emplace(PathKey{}, node(arena.source(), 0));
  while (!queue.empty()) {
    auto [key, u] = queue.top();
    queue.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    const StateId s = static_cast<StateId>(u % arena.num_states());
    const std::size_t layer = u / arena.num_states();
    if (s == arena.target()) return key;
    for (EdgeId e : arena.out_edges(s)) {
      const std::size_t next_layer = std::min(layer + 1, last);
      const Natural w = layer < last ? layer_cost(e, layer) : final_cost(e);
      PathKey cand{CheckedAdd(key.cost, w), key.edges};
      cand.edges.push_back(e);
      const std::size_t v = node(arena.edge(e).to, next_layer);
      if (settled[v]) continue;
      if (!best[v] || KeyLess(cand, *best[v])) {
        best[v] = cand;
        queue.emplace(std::move(cand), v);
      }
    }
  }
  throw InternalError("target unreachable in layered graph");
}

}  // namespace

BestResponse ComputeBestResponse(const Game& game, const BlindProfile& profile, PlayerId player) {
  ValidateBlindProfile(game, profile);
  const Arena& arena = game.arena();
  const std::size_t horizon = ProfileLength(profile);
  std::vector<std::vector<Natural>> others_load(horizon, std::vector<Natural>(arena.num_edges(), 0));
  for (std::size_t k = 0; k < horizon; ++k) {
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (j != player) ++others_load[k][EdgeAtStep(arena, profile[j], k)];
    }
  }
  PathKey key = LayeredShortestPath(
      arena, horizon,
      [&](EdgeId e, std::size_t k) { return arena.edge(e).cost.Eval(others_load[k][e] + 1); },
      [&](EdgeId e) { return arena.edge(e).cost.Eval(1); });
  if (key.edges.size() > horizon + arena.num_states()) {
    throw InternalError("best response longer than N + |V|");
  }
  return BestResponse{BlindStrategy{std::move(key.edges)}, key.cost};
}

BlindStrategy ShortestSoloPath(const Arena& arena) {
  PathKey key = LayeredShortestPath(
      arena, 0, [](EdgeId, std::size_t) -> Natural { return 0; },
      [&](EdgeId e) { return arena.edge(e).cost.Eval(1); });
  return BlindStrategy{std::move(key.edges)};
}

BlindNeResult ComputeBlindNe(const Game& game, std::optional<BlindProfile> initial) {
  BlindNeResult result;
  result.profile = initial ? std::move(*initial)
                           : BlindProfile(game.num_players(), ShortestSoloPath(game.arena()));
  ValidateBlindProfile(game, result.profile);
  result.initial_potential = Potential(game, result.profile);
  while (true) {
    PathEvaluation eval = EvalBlindProfile(game, result.profile);
    bool improved = false;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      BestResponse br = ComputeBestResponse(game, result.profile, i);
      if (br.cost < eval.costs[i]) {
        result.profile[i] = std::move(br.strategy);
        ++result.improvements;
        improved = true;
        break;
      }
    }
    if (!improved) return result;
    if (result.improvements > result.initial_potential) {
      throw InternalError("best-response dynamics exceeded the potential bound");
    }
  }
}

bool IsBlindNe(const Game& game, const BlindProfile& profile) {
  PathEvaluation eval = EvalBlindProfile(game, profile);
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    if (ComputeBestResponse(game, profile, i).cost < eval.costs[i]) return false;
  }
  return true;
}

}  // namespace dyncong
