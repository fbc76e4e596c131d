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

#include "dyncong/social_optimum.h"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

namespace dyncong {

namespace {

struct Label {
  Natural cost = 0;
  std::size_t hops = 0;
  std::size_t parent = SIZE_MAX;
  EdgeDistribution via;
  bool reached = false;
  bool settled = false;
};

std::optional<SocialOptimum> Search(const Game& game, std::optional<Natural> cutoff) {
  const Arena& arena = game.arena();
  const std::size_t n = game.num_players();
  const AbstractConfiguration start = Parikh(arena, SourceConfiguration(game));
  const AbstractConfiguration goal = Parikh(arena, TargetConfiguration(game));

  std::vector<AbstractConfiguration> nodes;
  std::vector<Label> labels;
  std::unordered_map<AbstractConfiguration, std::size_t, VectorHash> index;
  using Entry = std::tuple<Natural, std::size_t, std::size_t>;  // cost, hops, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  auto intern = [&](const AbstractConfiguration& a) {
    auto [it, inserted] = index.emplace(a, nodes.size());
    if (inserted) {
      nodes.push_back(a);
      labels.emplace_back();
      ChargeNodes(nodes.size(), "social optimum search");
    }
    return it->second;
  };

  std::size_t s = intern(start);
  labels[s].reached = true;
  queue.emplace(0, 0, s);
  std::optional<std::size_t> found;
  while (!queue.empty()) {
    auto [cost, hops, u] = queue.top();
    queue.pop();
    if (labels[u].settled || cost != labels[u].cost || hops != labels[u].hops) continue;
    if (cutoff && cost > *cutoff) break;
    labels[u].settled = true;
    if (nodes[u] == goal) {
      found = u;
      break;
    }
    for (AbstractSuccessor& succ : CheapestAbstractSuccessors(arena, nodes[u])) {
      Natural c = CheckedAdd(cost, succ.weight);
      std::size_t v = intern(succ.next);
      Label& lv = labels[v];
      if (lv.settled) continue;
      std::size_t h = hops + 1;
      if (!lv.reached || std::tie(c, h) < std::tie(lv.cost, lv.hops)) {
        lv.reached = true;
        lv.cost = c;
        lv.hops = hops + 1;
        lv.parent = u;
        lv.via = std::move(succ.distribution);
        queue.emplace(c, hops + 1, v);
      }
    }
  }
  if (!found) {
    if (cutoff) return std::nullopt;
    throw InternalError("target configuration unreachable in the abstract graph");
  }

  SocialOptimum result;
  result.cost = labels[*found].cost;
  if (labels[*found].hops > n * arena.num_states()) {
    throw InternalError("optimal abstract path has " + std::to_string(labels[*found].hops) +
                        " steps, above the n*|V| bound");
  }
  for (std::size_t v = *found; v != SIZE_MAX; v = labels[v].parent) {
    result.abstract_path.push_back(nodes[v]);
    if (labels[v].parent != SIZE_MAX) result.distributions.push_back(labels[v].via);
  }
  std::reverse(result.abstract_path.begin(), result.abstract_path.end());
  std::reverse(result.distributions.begin(), result.distributions.end());
  result.witness = LiftAbstractPath(game, result.distributions);
  return result;
}

}  // namespace

SocialOptimum ComputeSocialOptimum(const Game& game) { return *Search(game, std::nullopt); }

std::optional<SocialOptimum> ConstrainedSocialOptimum(const Game& game, Natural bound) {
  return Search(game, bound);
}

OutcomePath LiftAbstractPath(const Game& game, const std::vector<EdgeDistribution>& distributions) {
  const Arena& arena = game.arena();
  OutcomePath path;
  path.start = SourceConfiguration(game);
  Configuration current = path.start;
  for (const EdgeDistribution& dist : distributions) {
    EdgeDistribution remaining = dist;
    MoveVector moves(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      bool assigned = false;
      for (EdgeId e : arena.out_edges(current[i])) {
        if (remaining[e] > 0) {
          --remaining[e];
          moves[i] = e;
          assigned = true;
          break;
        }
      }
      if (!assigned) throw InternalError("edge distribution does not match configuration");
    }
    StepResult r = Step(game, current, moves);
    current = r.next;
    path.steps.push_back(OutcomeStep{std::move(moves), std::move(r.weights), std::move(r.next)});
  }
  return path;
}

}  // namespace dyncong
