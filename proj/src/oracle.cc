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

#include "dyncong/oracle.h"

#include <algorithm>
#include <functional>
#include <string>

namespace dyncong::oracle {

namespace {

Natural MaxHops(const std::vector<std::size_t>& hops, const Configuration& c) {
  Natural worst = 0;
  for (StateId s : c) worst = std::max<Natural>(worst, hops[s]);
  return worst;
}

}  // namespace

ExtNat BruteSocialOptimum(const Game& game, std::size_t max_steps) {
  const Arena& arena = game.arena();
  const std::vector<std::size_t> hops = arena.HopsToTarget();
  std::map<std::pair<Configuration, std::size_t>, ExtNat> memo;
  std::function<ExtNat(const Configuration&, std::size_t)> solve =
      [&](const Configuration& c, std::size_t left) -> ExtNat {
    if (AllAtTarget(arena, c)) return 0;
    if (left == 0 || MaxHops(hops, c) > left) return ExtNat::PosInf();
    auto key = std::pair{c, left};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ExtNat best = ExtNat::PosInf();
    for (const MoveVector& moves : EnumerateMoveVectors(arena, c)) {
      StepResult r = Step(game, c, moves);
      Natural w = 0;
      for (Natural x : r.weights) w = CheckedAdd(w, x);
      best = std::min(best, ExtNat(w) + solve(r.next, left - 1));
    }
    memo.emplace(key, best);
    ChargeNodes(memo.size(), "brute social optimum");
    return best;
  };
  return solve(SourceConfiguration(game), max_steps);
}

ExtNat BruteBestResponse(const Game& game, std::span<const std::vector<EdgeId>> paths,
                         PlayerId player, std::size_t max_len) {
  const Arena& arena = game.arena();
  auto others_on = [&](EdgeId e, std::size_t k) {
    Natural load = 0;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (j == player) continue;
      EdgeId used = k < paths[j].size() ? paths[j][k] : arena.target_loop();
      if (used == e) ++load;
    }
    return load;
  };
  ExtNat best = ExtNat::PosInf();
  std::size_t visited = 0;
  std::function<void(StateId, std::size_t, Natural)> dfs = [&](StateId at, std::size_t k,
                                                              Natural cost) {
    ChargeNodes(++visited, "brute best response");
    if (ExtNat(cost) >= best) return;
    if (at == arena.target()) {
      best = cost;
      return;
    }
    if (k == max_len) return;
    for (EdgeId e : arena.out_edges(at)) {
      Natural w = arena.edge(e).cost.Eval(others_on(e, k) + 1);
      dfs(arena.edge(e).to, k + 1, CheckedAdd(cost, w));
    }
  };
  dfs(arena.source(), 0, 0);
  return best;
}

ExtNat BruteValues::Solve(const Configuration& c, PlayerId player, std::size_t steps) {
  const Arena& arena = game_.arena();
  if (c[player] == arena.target()) return 0;
  if (steps == 0) return ExtNat::PosInf();
  auto key = std::tuple{c, player, steps};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::size_t n = c.size();
  MoveVector moves(n);
  std::vector<std::size_t> choice(n, 0);
  for (std::size_t j = 0; j < n; ++j) moves[j] = arena.out_edges(c[j]).front();
  ExtNat worst = 0;
  bool first = true;
  while (true) {
    ExtNat reply = ExtNat::PosInf();
    for (EdgeId e : arena.out_edges(c[player])) {
      moves[player] = e;
      StepResult r = Step(game_, c, moves);
      reply = std::min(reply, ExtNat(r.weights[player]) + Solve(r.next, player, steps - 1));
    }
    if (first || reply > worst) worst = reply;
    first = false;
    // Advance the coalition's joint move.
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (j == player) continue;
      const auto& out = arena.out_edges(c[j]);
      if (++choice[j] < out.size()) {
        moves[j] = out[choice[j]];
        break;
      }
      choice[j] = 0;
      moves[j] = out.front();
    }
    if (j == n) break;
  }
  memo_.emplace(key, worst);
  ChargeNodes(memo_.size(), "brute values");
  return worst;
}

std::vector<OutcomePath> CompletePaths(const Game& game, std::size_t max_steps) {
  const Arena& arena = game.arena();
  const std::vector<std::size_t> hops = arena.HopsToTarget();
  std::vector<OutcomePath> result;
  OutcomePath current;
  current.start = SourceConfiguration(game);
  std::function<void(const Configuration&)> dfs = [&](const Configuration& c) {
    if (AllAtTarget(arena, c)) {
      result.push_back(current);
      ChargeNodes(result.size(), "complete path enumeration");
      return;
    }
    const std::size_t left = max_steps - current.steps.size();
    if (left == 0 || MaxHops(hops, c) > left) return;
    for (const MoveVector& moves : EnumerateMoveVectors(arena, c)) {
      StepResult r = Step(game, c, moves);
      current.steps.push_back(OutcomeStep{moves, r.weights, r.next});
      dfs(r.next);
      current.steps.pop_back();
    }
  };
  dfs(current.start);
  return result;
}

std::vector<OutcomePath> BruteNeOutcomes(const Game& game, std::size_t max_steps) {
  const Arena& arena = game.arena();
  BruteValues values(game, game.cost_ceiling());
  std::vector<OutcomePath> accepted;
  for (const OutcomePath& path : CompletePaths(game, max_steps)) {
    bool stable = true;
    for (std::size_t l = 0; l < path.length() && stable; ++l) {
      const Configuration& c = path.config_at(l);
      const MoveVector& moves = path.steps[l].moves;
      for (PlayerId i = 0; i < c.size() && stable; ++i) {
        Natural suffix = 0;
        for (std::size_t k = l; k < path.length(); ++k) suffix += path.steps[k].weights[i];
        for (EdgeId alt : arena.out_edges(c[i])) {
          if (alt == moves[i]) continue;
          MoveVector deviated = moves;
          deviated[i] = alt;
          StepResult r = Step(game, c, deviated);
          if (ExtNat(suffix) > ExtNat(r.weights[i]) + values.Value(r.next, i)) {
            stable = false;
            break;
          }
        }
      }
    }
    if (stable) accepted.push_back(path);
  }
  return accepted;
}

PartitionInstance GenPartitionArena(std::span<const Natural> family) {
  Natural total = 0;
  for (Natural r : family) total = CheckedAdd(total, r);
  if (total % 2 != 0) throw InputError("family sums to an odd number");
  const Natural half = total / 2;
  const Natural m = family.size();
  const Natural big = CheckedAdd(CheckedAdd(CheckedMul(14, half), CheckedMul(12, m)), 1);

  std::vector<std::string> states{"src"};
  std::vector<EdgeSpec> edges;
  for (Natural i = 1; i <= m; ++i) {
    const std::string s = "s" + std::to_string(i);
    states.push_back(s);
    edges.push_back({"src", s, CostFunction::Threshold(family[i - 1] + 2, 1, big)});
    for (int j = 1; j <= 2; ++j) {
      const std::string a = "a" + std::to_string(i) + "_" + std::to_string(j);
      states.push_back(a);
      edges.push_back({s, a, CostFunction::Threshold(1, 2, 4)});
      edges.push_back({a, "d" + std::to_string(j), CostFunction::Constant(1)});
      edges.push_back({a, "tgt", CostFunction::Threshold(1, 2, big)});
    }
  }
  states.insert(states.end(), {"d1", "d2", "tgt"});
  for (int j = 1; j <= 2; ++j) {
    edges.push_back({"d" + std::to_string(j), "tgt", CostFunction::Threshold(half, 1, big)});
  }
  PartitionInstance inst{Arena::Create(states, "src", "tgt", edges), 0, half, big};
  inst.num_players = CheckedAdd(CheckedMul(2, half), CheckedMul(2, m));
  return inst;
}

}  // namespace dyncong::oracle
