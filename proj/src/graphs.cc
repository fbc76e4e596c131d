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

#include "dyncong/graphs.h"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace dyncong {

Configuration SourceConfiguration(const Game& game) {
  return Configuration(game.num_players(), game.arena().source());
}

Configuration TargetConfiguration(const Game& game) {
  return Configuration(game.num_players(), game.arena().target());
}

bool AllAtTarget(const Arena& arena, const Configuration& c) {
  return std::all_of(c.begin(), c.end(), [&](StateId s) { return s == arena.target(); });
}

StepResult Step(const Game& game, const Configuration& c, const MoveVector& moves) {
  const Arena& arena = game.arena();
  if (moves.size() != c.size()) throw InputError("move vector length differs from player count");
  std::unordered_map<EdgeId, Natural> load;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] >= arena.num_edges() || arena.edge(moves[i]).from != c[i]) {
      throw InputError("move of player " + std::to_string(i + 1) +
                       " does not leave its current state " + arena.state_name(c[i]));
    }
    ++load[moves[i]];
  }
  StepResult result;
  result.weights.reserve(moves.size());
  result.next.reserve(moves.size());
  for (EdgeId e : moves) {
    result.weights.push_back(arena.edge(e).cost.Eval(load[e]));
    result.next.push_back(arena.edge(e).to);
  }
  return result;
}

MoveVector MovesBetween(const Arena& arena, const Configuration& c, const Configuration& next) {
  if (c.size() != next.size()) throw InputError("configurations of different sizes");
  MoveVector moves(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto e = arena.FindEdge(c[i], next[i]);
    if (!e) {
      throw InputError("no edge " + arena.state_name(c[i]) + "->" + arena.state_name(next[i]) +
                       " for player " + std::to_string(i + 1));
    }
    moves[i] = *e;
  }
  return moves;
}

std::vector<MoveVector> EnumerateMoveVectors(const Arena& arena, const Configuration& c) {
  std::vector<MoveVector> result;
  MoveVector current(c.size());
  std::vector<std::size_t> digit(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) current[i] = arena.out_edges(c[i]).front();
  while (true) {
    result.push_back(current);
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      const auto& options = arena.out_edges(c[i]);
      if (++digit[i] < options.size()) {
        current[i] = options[digit[i]];
        break;
      }
      digit[i] = 0;
      current[i] = options.front();
      if (i == 0) return result;
    }
    if (c.empty()) return result;
  }
}

std::vector<Configuration> OutcomePath::Configurations() const {
  std::vector<Configuration> configs{start};
  for (const OutcomeStep& s : steps) configs.push_back(s.next);
  return configs;
}

namespace {

PathEvaluation Summarize(const Game& game, OutcomePath path) {
  const std::size_t n = game.num_players();
  PathEvaluation eval;
  eval.costs.assign(n, ExtNat(0));
  const Configuration& last = path.last();
  Natural social = 0;
  bool social_finite = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (last[i] != game.arena().target()) {
      eval.costs[i] = ExtNat::PosInf();
      social_finite = false;
      continue;
    }
    Natural sum = 0;
    for (const OutcomeStep& s : path.steps) sum = CheckedAdd(sum, s.weights[i]);
    eval.costs[i] = sum;
    social = CheckedAdd(social, sum);
  }
  eval.social = social_finite ? ExtNat(social) : ExtNat::PosInf();
  eval.path = std::move(path);
  return eval;
}

}  // namespace

PathEvaluation EvalPath(const Game& game, std::span<const MoveVector> moves) {
  OutcomePath path;
  path.start = SourceConfiguration(game);
  Configuration current = path.start;
  for (const MoveVector& m : moves) {
    StepResult r = Step(game, current, m);
    current = r.next;
    path.steps.push_back(OutcomeStep{m, std::move(r.weights), std::move(r.next)});
  }
  return Summarize(game, std::move(path));
}

PathEvaluation EvalOutcome(const Game& game, const OutcomePath& path) {
  if (path.start.size() != game.num_players()) {
    throw InputError("outcome start configuration has the wrong number of players");
  }
  Configuration current = path.start;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const OutcomeStep& s = path.steps[k];
    StepResult r = Step(game, current, s.moves);
    if (r.next != s.next) {
      throw InputError("outcome step " + std::to_string(k + 1) + " does not chain");
    }
    if (r.weights != s.weights) {
      throw InputError("outcome step " + std::to_string(k + 1) + " has wrong weights");
    }
    current = r.next;
  }
  return Summarize(game, path);
}

OutcomePath PathThrough(const Game& game, std::span<const Configuration> configs) {
  if (configs.empty()) throw InputError("a path needs at least one configuration");
  OutcomePath path;
  path.start = configs.front();
  for (std::size_t k = 1; k < configs.size(); ++k) {
    MoveVector moves = MovesBetween(game.arena(), configs[k - 1], configs[k]);
    StepResult r = Step(game, configs[k - 1], moves);
    path.steps.push_back(OutcomeStep{std::move(moves), std::move(r.weights), configs[k]});
  }
  return path;
}

Natural SuffixCost(const OutcomePath& path, PlayerId i, std::size_t k) {
  Natural sum = 0;
  for (std::size_t j = k; j < path.steps.size(); ++j) sum = CheckedAdd(sum, path.steps[j].weights[i]);
  return sum;
}

AbstractConfiguration Parikh(const Arena& arena, const Configuration& c) {
  AbstractConfiguration a(arena.num_states(), 0);
  for (StateId s : c) ++a[s];
  return a;
}

namespace {

// Compositions of `total` into `parts` parts, first part largest first.
void Compositions(std::uint32_t total, std::size_t parts,
                  std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> current(parts, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t left) {
    if (k + 1 == parts) {
      current[k] = left;
      out.push_back(current);
      return;
    }
    for (std::uint32_t x = left + 1; x-- > 0;) {
      current[k] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, total);
}

}  // namespace

void ForEachDistribution(const Arena& arena, const AbstractConfiguration& counts,
                         const std::function<void(const EdgeDistribution&)>& visit) {
  std::vector<StateId> occupied;
  std::vector<std::vector<std::vector<std::uint32_t>>> options;
  for (StateId s = 0; s < arena.num_states(); ++s) {
    if (counts[s] == 0) continue;
    occupied.push_back(s);
    options.emplace_back();
    Compositions(counts[s], arena.out_edges(s).size(), options.back());
  }
  EdgeDistribution dist(arena.num_edges(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == occupied.size()) {
      visit(dist);
      return;
    }
    const auto& out = arena.out_edges(occupied[k]);
    for (const auto& composition : options[k]) {
      for (std::size_t j = 0; j < out.size(); ++j) dist[out[j]] = composition[j];
      rec(k + 1);
    }
    for (EdgeId e : out) dist[e] = 0;
  };
  rec(0);
}

std::vector<AbstractSuccessor> AbstractSuccessors(const Arena& arena,
                                                  const AbstractConfiguration& a) {
  std::vector<AbstractSuccessor> result;
  ForEachDistribution(arena, a, [&](const EdgeDistribution& dist) {
    AbstractSuccessor succ;
    succ.next.assign(arena.num_states(), 0);
    for (EdgeId e = 0; e < dist.size(); ++e) {
      if (dist[e] == 0) continue;
      const Edge& edge = arena.edge(e);
      succ.weight = CheckedAdd(succ.weight, CheckedMul(dist[e], edge.cost.Eval(dist[e])));
      succ.next[edge.to] += dist[e];
    }
    succ.distribution = dist;
    result.push_back(std::move(succ));
  });
  return result;
}

std::vector<AbstractSuccessor> CheapestAbstractSuccessors(const Arena& arena,
                                                          const AbstractConfiguration& a) {
  std::vector<AbstractSuccessor> result;
  std::unordered_map<AbstractConfiguration, std::size_t, VectorHash> index;
  for (AbstractSuccessor& s : AbstractSuccessors(arena, a)) {
    auto [it, inserted] = index.emplace(s.next, result.size());
    if (inserted) {
      result.push_back(std::move(s));
    } else if (s.weight < result[it->second].weight) {
      result[it->second] = std::move(s);
    }
  }
  return result;
}

std::vector<Deviation> DevSetForMoves(const Game& game, const Configuration& c,
                                      const MoveVector& moves,
                              PlayerId i) {
  const Arena& arena = game.arena();
  std::vector<Deviation> result;
  for (EdgeId alt : arena.out_edges(c[i])) {
    Natural load = 1;
    for (std::size_t j = 0; j < moves.size(); ++j) {
      if (j != i && moves[j] == alt) ++load;
    }
    Deviation d;
    d.config.reserve(c.size());
    for (std::size_t j = 0; j < moves.size(); ++j) d.config.push_back(arena.edge(moves[j]).to);
    d.config[i] = arena.edge(alt).to;
    d.cost = arena.edge(alt).cost.Eval(load);
    d.edge = alt;
    result.push_back(std::move(d));
  }
  return result;
}

std::vector<Deviation> DevSet(const Game& game, const Configuration& c,
                              const Configuration& next, PlayerId i) {
  return DevSetForMoves(game, c, MovesBetween(game.arena(), c, next), i);
}

}  // namespace dyncong
