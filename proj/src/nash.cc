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

#include "dyncong/nash.h"

#include <algorithm>
#include <string>

#include "dyncong/digraph.h"

namespace dyncong {

namespace {

constexpr Natural kInf = std::numeric_limits<Natural>::max();

std::vector<std::uint32_t> Key(const ValueState& s) {
  std::vector<std::uint32_t> key{s.my_state};
  key.insert(key.end(), s.others.begin(), s.others.end());
  return key;
}

void Compositions(std::uint32_t total, std::size_t parts, std::vector<std::uint32_t>& current,
                  std::size_t k, std::vector<AbstractConfiguration>& out) {
  if (k + 1 == parts) {
    current[k] = total;
    out.push_back(current);
    return;
  }
  for (std::uint32_t x = 0; x <= total; ++x) {
    current[k] = x;
    Compositions(total - x, parts, current, k + 1, out);
  }
}

// Coalition choice at a value state: one candidate per player edge.
struct Option {
  EdgeDistribution distribution;
  std::vector<std::pair<Natural, std::size_t>> replies;  // (step cost, successor)
};

}  // namespace

ValueState ValueStateOf(const Arena& arena, const Configuration& c, PlayerId player) {
  ValueState s{c[player], AbstractConfiguration(arena.num_states(), 0)};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != player) ++s.others[c[j]];
  }
  return s;
}

ValueTable ValueTable::Compute(const Game& game) {
  const Arena& arena = game.arena();
  ValueTable table;
  table.num_states_ = arena.num_states();
  std::vector<AbstractConfiguration> coalitions;
  std::vector<std::uint32_t> scratch(arena.num_states(), 0);
  Compositions(static_cast<std::uint32_t>(game.num_players() - 1), arena.num_states(), scratch, 0,
               coalitions);
  for (StateId v = 0; v < arena.num_states(); ++v) {
    for (const AbstractConfiguration& others : coalitions) {
      ValueState s{v, others};
      table.index_.emplace(Key(s), table.states_.size());
      table.states_.push_back(std::move(s));
    }
  }
  ChargeNodes(table.states_.size(), "value table");

  std::vector<std::vector<Option>> options(table.states_.size());
  std::size_t total_options = 0;
  for (std::size_t k = 0; k < table.states_.size(); ++k) {
    const ValueState& s = table.states_[k];
    if (s.my_state == arena.target()) continue;
    ForEachDistribution(arena, s.others, [&](const EdgeDistribution& m) {
      Option opt{m, {}};
      AbstractConfiguration next(arena.num_states(), 0);
      for (EdgeId e = 0; e < m.size(); ++e) next[arena.edge(e).to] += m[e];
      for (EdgeId e : arena.out_edges(s.my_state)) {
        Natural step = arena.edge(e).cost.Eval(Natural{1} + m[e]);
        std::size_t succ = table.Index(ValueState{arena.edge(e).to, next});
        opt.replies.emplace_back(step, succ);
      }
      options[k].push_back(std::move(opt));
    });
    total_options += options[k].size();
    ChargeNodes(total_options, "value table options");
  }

  const Natural ceiling = game.cost_ceiling();
  const Natural cap =
      SaturatingAdd(arena.num_states(), SaturatingMul(table.states_.size(), ceiling));
  std::vector<Natural> current(table.states_.size(), kInf);
  table.punishments_.assign(table.states_.size(), EdgeDistribution(arena.num_edges(), 0));
  for (std::size_t k = 0; k < table.states_.size(); ++k) {
    if (table.states_[k].my_state == arena.target()) current[k] = 0;
  }
  while (true) {
    if (table.iterations_ > cap) {
      throw InternalError("value iteration did not converge within the iteration cap");
    }
    ++table.iterations_;
    std::vector<Natural> next(current.size());
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (table.states_[k].my_state == arena.target()) {
        next[k] = 0;
        continue;
      }
      Natural worst = 0;
      std::size_t worst_option = 0;
      for (std::size_t o = 0; o < options[k].size(); ++o) {
        Natural reply = kInf;
        for (const auto& [step, succ] : options[k][o].replies) {
          if (current[succ] != kInf) reply = std::min(reply, CheckedAdd(step, current[succ]));
        }
        if (o == 0 || reply > worst) {
          worst = reply;
          worst_option = o;
        }
      }
      next[k] = worst;
      table.punishments_[k] = options[k][worst_option].distribution;
    }
    if (next == current) break;
    current = std::move(next);
  }
  for (std::size_t k = 0; k < current.size(); ++k) {
    if (current[k] == kInf || current[k] > ceiling) {
      throw InternalError("value above the |V|*kappa ceiling");
    }
  }
  table.values_ = std::move(current);
  return table;
}

std::size_t ValueTable::Index(const ValueState& s) const {
  auto it = index_.find(Key(s));
  if (it == index_.end()) throw InternalError("unknown value state");
  return it->second;
}

Natural ValueTable::Value(const ValueState& s) const { return values_[Index(s)]; }

Natural ValueTable::Value(const Configuration& c, PlayerId player) const {
  ValueState s{c[player], AbstractConfiguration(num_states_, 0)};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != player) ++s.others[c[j]];
  }
  return Value(s);
}

const EdgeDistribution& ValueTable::Punishment(const ValueState& s) const {
  return punishments_[Index(s)];
}

namespace {

void RequireCompleteOutcome(const Game& game, const OutcomePath& path) {
  if (path.start != SourceConfiguration(game)) {
    throw InputError("outcome does not start at the source configuration");
  }
  EvalOutcome(game, path);
  if (!AllAtTarget(game.arena(), path.last())) {
    throw InputError("outcome does not end with every player on the target");
  }
}

}  // namespace

bool CheckNeOutcome(const Game& game, const ValueTable& values, const OutcomePath& path) {
  RequireCompleteOutcome(game, path);
  for (std::size_t l = 0; l < path.length(); ++l) {
    const Configuration& c = path.config_at(l);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      const Natural suffix = SuffixCost(path, i, l);
      for (const Deviation& d : DevSetForMoves(game, c, path.steps[l].moves, i)) {
        if (suffix > CheckedAdd(d.cost, values.Value(d.config, i))) return false;
      }
    }
  }
  return true;
}

GammaNe GammaMinNe(const Game& game, const ValueTable& values,
                   std::span<const std::int64_t> gamma) {
  const Arena& arena = game.arena();
  const std::size_t n = game.num_players();
  if (gamma.size() != n) throw InputError("gamma has the wrong length");
  const Natural ceiling = game.cost_ceiling();

  // Node key: configuration followed by residual budgets (kInf = unbounded).
  using NodeKey = std::vector<Natural>;
  std::unordered_map<NodeKey, NodeId, VectorHash> index;
  std::vector<NodeKey> keys;
  Digraph graph;
  std::vector<std::int64_t> arc_weight;
  std::vector<NodeId> targets;
  const Configuration target_config = TargetConfiguration(game);

  auto intern = [&](NodeKey key) {
    auto [it, inserted] = index.emplace(key, 0);
    if (inserted) {
      it->second = graph.AddNode();
      keys.push_back(std::move(key));
      ChargeNodes(keys.size(), "NE graph");
    }
    return std::pair{it->second, inserted};
  };

  const Configuration source = SourceConfiguration(game);
  NodeKey start(source.begin(), source.end());
  start.resize(2 * n, kInf);
  std::vector<NodeId> frontier{intern(start).first};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    const Configuration c(keys[u].begin(), keys[u].begin() + n);
    const std::vector<Natural> budget(keys[u].begin() + n, keys[u].end());
    if (c == target_config) targets.push_back(u);
    for (const MoveVector& moves : EnumerateMoveVectors(arena, c)) {
      StepResult step = Step(game, c, moves);
      NodeKey next(step.next.begin(), step.next.end());
      next.resize(2 * n);
      bool feasible = true;
      for (PlayerId i = 0; i < n && feasible; ++i) {
        const Natural w = step.weights[i];
        Natural bound = budget[i];
        for (const Deviation& d : DevSetForMoves(game, c, moves, i)) {
          bound = std::min(bound, CheckedAdd(d.cost, values.Value(d.config, i)));
        }
        if (bound != kInf && bound < w) {
          feasible = false;
          break;
        }
        Natural residual = bound == kInf ? kInf : bound - w;
        if (residual != kInf && residual > ceiling) {
          throw InternalError("NE graph budget above the |V|*kappa ceiling");
        }
        next[n + i] = step.next[i] == arena.target() ? 0 : residual;
      }
      if (!feasible) continue;
      auto [v, inserted] = intern(std::move(next));
      if (inserted) frontier.push_back(v);
      graph.AddArc(u, v);
      std::int64_t weight = 0;
      for (PlayerId i = 0; i < n; ++i) {
        weight = CheckedAdd(weight, CheckedMul(gamma[i], ToSigned(step.weights[i])));
      }
      arc_weight.push_back(weight);
    }
  }

  ExtremalPathResult best = ExtremalPath(graph, 0, targets, arc_weight, Extremum::kMin);
  if (!best.found) throw InternalError("no Nash equilibrium outcome found");
  std::vector<Configuration> configs;
  for (NodeId v : best.path) configs.emplace_back(keys[v].begin(), keys[v].begin() + n);
  GammaNe result;
  result.cost = best.value;
  result.witness = PathThrough(game, configs);
  result.explored = keys.size();
  return result;
}

std::optional<GammaNe> ConstrainedNe(const Game& game, const ValueTable& values,
                                     std::span<const std::int64_t> gamma, std::int64_t bound) {
  GammaNe best = GammaMinNe(game, values, gamma);
  if (best.cost > bound) return std::nullopt;
  return best;
}

NeProfile SynthesizeNeProfile(const Game& game, const ValueTable& values, const OutcomePath& path) {
  if (!CheckNeOutcome(game, values, path)) {
    throw InputError("outcome is not a Nash equilibrium outcome");
  }
  NeProfile profile;
  profile.main = path;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const ValueState& s = values.state(k);
    if (s.my_state == game.arena().target()) continue;
    std::vector<std::uint32_t> key{s.my_state};
    key.insert(key.end(), s.others.begin(), s.others.end());
    profile.punishment.emplace(std::move(key), values.Punishment(s));
  }
  return profile;
}

Simulation SimulateNeProfile(const Game& game, const NeProfile& profile,
                             std::optional<PlayerId> deviator, const DeviatorStrategy& strategy,
                             std::size_t max_steps) {
  const Arena& arena = game.arena();
  const std::size_t n = game.num_players();
  if (max_steps == 0) {
    max_steps = profile.main.length() +
                SaturatingMul(arena.num_states(), SaturatingAdd(game.cost_ceiling(), 1));
  }
  const std::vector<std::size_t> hops = arena.HopsToTarget();
  Simulation sim;
  sim.path.start = SourceConfiguration(game);
  std::vector<Configuration> history{sim.path.start};
  for (std::size_t k = 0; k < max_steps; ++k) {
    const Configuration c = history.back();
    if (AllAtTarget(arena, c)) break;
    MoveVector intended(n, arena.target_loop());
    if (!sim.punished) {
      if (k < profile.main.length()) intended = profile.main.steps[k].moves;
    } else {
      const PlayerId j = *sim.punished;
      ValueState s = ValueStateOf(arena, c, j);
      std::vector<std::uint32_t> key{s.my_state};
      key.insert(key.end(), s.others.begin(), s.others.end());
      auto it = profile.punishment.find(key);
      if (s.my_state != arena.target()) {
        if (it == profile.punishment.end()) throw InternalError("missing punishment entry");
        EdgeDistribution remaining = it->second;
        for (PlayerId p = 0; p < n; ++p) {
          if (p == j) continue;
          for (EdgeId e : arena.out_edges(c[p])) {
            if (remaining[e] > 0) {
              --remaining[e];
              intended[p] = e;
              break;
            }
          }
        }
      } else {
        // The deviator has arrived; the others just head for the target.
        for (PlayerId p = 0; p < n; ++p) {
          for (EdgeId e : arena.out_edges(c[p])) {
            if (hops[arena.edge(e).to] + 1 == hops[c[p]] || c[p] == arena.target()) {
              intended[p] = e;
              break;
            }
          }
        }
      }
    }
    MoveVector moves = intended;
    if (deviator) moves[*deviator] = strategy(history);
    if (!sim.punished) {
      for (PlayerId p = 0; p < n; ++p) {
        if (moves[p] != intended[p]) {
          sim.punished = p;
          break;
        }
      }
    }
    StepResult r = Step(game, c, moves);
    history.push_back(r.next);
    sim.path.steps.push_back(OutcomeStep{std::move(moves), std::move(r.weights), std::move(r.next)});
  }
  sim.costs = EvalOutcome(game, sim.path).costs;
  return sim;
}

}  // namespace dyncong
