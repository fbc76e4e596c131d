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

#include "dyncong/spe.h"

#include <algorithm>
#include <string>

#include "dyncong/digraph.h"

namespace dyncong {

ConfigGraph ConfigGraph::Build(const Game& game) {
  const Arena& arena = game.arena();
  ConfigGraph g;
  auto intern = [&](const Configuration& c) {
    auto [it, inserted] = g.index_.emplace(c, g.configs_.size());
    if (inserted) {
      g.configs_.push_back(c);
      g.regions_.push_back(static_cast<std::size_t>(
          std::count(c.begin(), c.end(), arena.target())));
      g.out_.emplace_back();
      ChargeNodes(g.configs_.size(), "configuration graph");
    }
    return it->second;
  };
  intern(SourceConfiguration(game));
  for (std::size_t k = 0; k < g.configs_.size(); ++k) {
    const Configuration c = g.configs_[k];
    if (AllAtTarget(arena, c)) g.target_ = k;
    for (MoveVector& moves : EnumerateMoveVectors(arena, c)) {
      StepResult r = Step(game, c, moves);
      std::size_t to = intern(r.next);
      g.out_[k].push_back(g.transitions_.size());
      g.transitions_.push_back(Transition{to, std::move(moves), std::move(r.weights)});
      g.sources_.push_back(k);
    }
  }
  return g;
}

std::optional<std::size_t> ConfigGraph::Find(const Configuration& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ConfigGraph::FindTransition(std::size_t from, std::size_t to) const {
  for (std::size_t t : out_[from]) {
    if (transitions_[t].to == to) return t;
  }
  return std::nullopt;
}

std::vector<Natural> InitialCounters(const Arena& arena, const Configuration& c) {
  std::vector<Natural> counters(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    counters[i] = c[i] == arena.target() ? 0 : kInfiniteCounter;
  }
  return counters;
}

std::optional<std::vector<Natural>> CounterStep(const Arena& arena, const Configuration& from,
                                                std::span<const Natural> counters,
                                                std::span<const Natural> weights,
                                                std::span<const ExtNat> labels) {
  std::vector<Natural> next(counters.size());
  for (std::size_t i = 0; i < counters.size(); ++i) {
    if (labels[i].is_neg_inf()) return std::nullopt;
  }
  for (std::size_t i = 0; i < counters.size(); ++i) {
    if (from[i] == arena.target()) {
      next[i] = 0;
      continue;
    }
    const Natural w = weights[i];
    Natural residual = kInfiniteCounter;
    if (counters[i] != kInfiniteCounter) {
      if (counters[i] < w) return std::nullopt;
      residual = counters[i] - w;
    }
    if (labels[i].is_finite()) {
      if (labels[i].value() < w) return std::nullopt;
      residual = std::min(residual, labels[i].value() - w);
    }
    next[i] = residual;
  }
  return next;
}

namespace {

struct CounterGraph {
  Digraph graph;
  std::vector<std::size_t> config_of;
  std::vector<std::size_t> transition_of;
  std::vector<NodeId> targets;
};

CounterGraph BuildCounterGraph(const Game& game, const ConfigGraph& configs,
                               const LabelTable& labels, std::size_t start) {
  const Arena& arena = game.arena();
  CounterGraph cg;
  std::unordered_map<std::vector<Natural>, NodeId, VectorHash> index;
  std::vector<std::vector<Natural>> counters;
  auto intern = [&](std::size_t config, std::vector<Natural> b) {
    std::vector<Natural> key{config};
    key.insert(key.end(), b.begin(), b.end());
    auto [it, inserted] = index.emplace(std::move(key), 0);
    if (inserted) {
      it->second = cg.graph.AddNode();
      cg.config_of.push_back(config);
      counters.push_back(std::move(b));
      ChargeNodes(counters.size(), "counter graph");
    }
    return std::pair{it->second, inserted};
  };
  intern(start, InitialCounters(arena, configs.config(start)));
  for (NodeId u = 0; u < cg.config_of.size(); ++u) {
    const std::size_t c = cg.config_of[u];
    if (configs.target_config() == c) cg.targets.push_back(u);
    for (std::size_t t : configs.out(c)) {
      const auto& tr = configs.transition(t);
      auto next = CounterStep(arena, configs.config(c), counters[u], tr.weights, labels.of(t));
      if (!next) continue;
      NodeId v = intern(tr.to, std::move(*next)).first;
      cg.graph.AddArc(u, v);
      cg.transition_of.push_back(t);
    }
  }
  return cg;
}

std::vector<std::int64_t> PlayerWeights(const ConfigGraph& configs, const CounterGraph& cg,
                                        PlayerId player) {
  std::vector<std::int64_t> w(cg.transition_of.size());
  for (std::size_t a = 0; a < w.size(); ++a) {
    w[a] = ToSigned(configs.transition(cg.transition_of[a]).weights[player]);
  }
  return w;
}

struct Summary {
  bool nonempty = false;
  std::vector<ExtNat> sup;
  std::size_t states = 0;
};

Summary Summarize(const Game& game, const ConfigGraph& configs, const LabelTable& labels,
                  std::size_t start) {
  CounterGraph cg = BuildCounterGraph(game, configs, labels, start);
  Summary s;
  s.states = cg.graph.num_nodes();
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    ExtremalPathResult r =
        ExtremalPath(cg.graph, 0, cg.targets, PlayerWeights(configs, cg, i), Extremum::kMax);
    if (!r.found) return s;
    s.sup.push_back(r.unbounded ? ExtNat::PosInf() : ExtNat(static_cast<Natural>(r.value)));
  }
  s.nonempty = true;
  return s;
}

std::vector<Configuration> NodeConfigs(const ConfigGraph& configs, const CounterGraph& cg,
                                       std::span<const NodeId> path) {
  std::vector<Configuration> result;
  for (NodeId v : path) result.push_back(configs.config(cg.config_of[v]));
  return result;
}

}  // namespace

std::optional<OutcomePath> LabelConsistentPath(const Game& game, const ConfigGraph& graph,
                                               const LabelTable& labels, std::size_t start) {
  CounterGraph cg = BuildCounterGraph(game, graph, labels, start);
  std::vector<std::int64_t> zero(cg.transition_of.size(), 0);
  ExtremalPathResult r = ExtremalPath(cg.graph, 0, cg.targets, zero, Extremum::kMin);
  if (!r.found) return std::nullopt;
  return PathThrough(game, NodeConfigs(graph, cg, r.path));
}

std::optional<ExtNat> SupCost(const Game& game, const ConfigGraph& graph, const LabelTable& labels,
                              std::size_t start, PlayerId player) {
  CounterGraph cg = BuildCounterGraph(game, graph, labels, start);
  ExtremalPathResult r =
      ExtremalPath(cg.graph, 0, cg.targets, PlayerWeights(graph, cg, player), Extremum::kMax);
  if (!r.found) return std::nullopt;
  return r.unbounded ? ExtNat::PosInf() : ExtNat(static_cast<Natural>(r.value));
}

LambdaResult ComputeLambda(const Game& game, const ConfigGraph& graph) {
  const Arena& arena = game.arena();
  const std::size_t n = game.num_players();
  const Natural num_states = arena.num_states();
  const Natural kappa = game.kappa();
  const Natural ceiling = game.cost_ceiling();

  LambdaResult result;
  LambdaStats& stats = result.stats;
  stats.stabilization_bound = SaturatingMul(
      num_states,
      SaturatingAdd(1, SaturatingMul(SaturatingMul(n, kappa), SaturatingPow(arena.num_edges(), n))));
  const Natural n_configs = SaturatingMul(n, SaturatingPow(num_states, n));
  const Natural lead = SaturatingAdd(n_configs, SaturatingMul(2, num_states));
  // Running sum of (n|C|)^(l-1) * kappa^l for l = 1..k.
  Natural series = 0;
  Natural term = kappa;

  LabelTable& labels = result.labels;
  labels = LabelTable(graph.num_transitions(), n, ExtNat::PosInf());
  std::vector<std::vector<std::size_t>> by_region(n + 1);
  for (std::size_t c = 0; c < graph.num_configs(); ++c) by_region[graph.region(c)].push_back(c);
  std::vector<std::optional<Summary>> final_summaries(graph.num_configs());

  for (std::size_t j = n + 1; j-- > 0;) {
    const std::vector<std::size_t>& region = by_region[j];
    for (std::size_t c : region) {
      for (std::size_t t : graph.out(c)) {
        for (PlayerId i = 0; i < n; ++i) {
          labels.set(t, i, graph.config(c)[i] == arena.target() ? ExtNat(0) : ExtNat::PosInf());
        }
      }
    }
    std::size_t k = 0;
    series = 0;
    term = kappa;
    while (!region.empty()) {
      ++k;
      if (k > stats.stabilization_bound) {
        throw InternalError("label iteration exceeded its stabilization bound");
      }
      series = SaturatingAdd(series, term);
      term = SaturatingMul(term, SaturatingMul(n_configs, kappa));
      const Natural intermediate_bound = SaturatingMul(lead, series);

      std::unordered_map<std::size_t, Summary> local;
      auto summary = [&](std::size_t c) -> const Summary& {
        if (graph.region(c) > j) {
          if (!final_summaries[c]) final_summaries[c] = Summarize(game, graph, labels, c);
          return *final_summaries[c];
        }
        auto it = local.find(c);
        if (it == local.end()) it = local.emplace(c, Summarize(game, graph, labels, c)).first;
        stats.max_counter_states = std::max(stats.max_counter_states, it->second.states);
        return it->second;
      };

      LabelTable next = labels;
      for (std::size_t c : region) {
        const Configuration& config = graph.config(c);
        bool dead = false;
        for (std::size_t t : graph.out(c)) {
          if (!summary(graph.transition(t).to).nonempty) {
            dead = true;
            break;
          }
        }
        for (std::size_t t : graph.out(c)) {
          const auto& tr = graph.transition(t);
          for (PlayerId i = 0; i < n; ++i) {
            ExtNat value;
            if (config[i] == arena.target()) {
              value = 0;
            } else if (dead) {
              value = ExtNat::NegInf();
            } else {
              value = ExtNat::PosInf();
              for (const Deviation& d : DevSetForMoves(game, config, tr.moves, i)) {
                auto target = graph.Find(d.config);
                if (!target) throw InternalError("deviation leaves the configuration graph");
                value = std::min(value, ExtNat(d.cost) + summary(*target).sup[i]);
              }
            }
            const ExtNat previous = labels.get(t, i);
            if (value > previous) stats.monotone = false;
            if (value.is_finite() && value.value() > intermediate_bound) {
              stats.intermediate_bound_holds = false;
            }
            if (k >= num_states && (value.is_pos_inf() || (value.is_finite() && value.value() > ceiling))) {
              stats.value_bound_holds = false;
            }
            next.set(t, i, value);
          }
        }
      }
      if (next == labels) break;
      labels = std::move(next);
    }
    stats.iterations.push_back(k);
    stats.max_iterations = std::max(stats.max_iterations, k);
  }
  for (std::size_t t = 0; t < graph.num_transitions(); ++t) {
    for (PlayerId i = 0; i < n; ++i) {
      ExtNat v = labels.get(t, i);
      if (v.is_pos_inf() || (v.is_finite() && v.value() > ceiling)) stats.value_bound_holds = false;
    }
  }
  return result;
}

SpeQuery SpeExists(const Game& game, const ConfigGraph& graph, const LabelTable& lambda) {
  SpeQuery q;
  q.witness = LabelConsistentPath(game, graph, lambda, graph.source_config());
  q.exists = q.witness.has_value();
  if (q.exists) q.cost = ToSigned(EvalOutcome(game, *q.witness).social.value());
  return q;
}

SpeQuery GammaMinSpe(const Game& game, const ConfigGraph& graph, const LabelTable& lambda,
                     std::span<const std::int64_t> gamma) {
  const std::size_t n = game.num_players();
  if (gamma.size() != n) throw InputError("gamma has the wrong length");
  CounterGraph cg = BuildCounterGraph(game, graph, lambda, graph.source_config());
  std::vector<std::int64_t> weight(cg.transition_of.size(), 0);
  for (std::size_t a = 0; a < weight.size(); ++a) {
    const auto& w = graph.transition(cg.transition_of[a]).weights;
    for (PlayerId i = 0; i < n; ++i) {
      weight[a] = CheckedAdd(weight[a], CheckedMul(gamma[i], ToSigned(w[i])));
    }
  }
  ExtremalPathResult r = ExtremalPath(cg.graph, 0, cg.targets, weight, Extremum::kMin);
  SpeQuery q;
  if (!r.found) return q;
  q.exists = true;
  q.cost = r.value;
  q.witness = PathThrough(game, NodeConfigs(graph, cg, r.path));
  return q;
}

bool CheckSpeOutcome(const Game& game, const ConfigGraph& graph, const LabelTable& lambda,
                     const OutcomePath& path) {
  if (path.start != SourceConfiguration(game)) {
    throw InputError("outcome does not start at the source configuration");
  }
  EvalOutcome(game, path);
  if (!AllAtTarget(game.arena(), path.last())) {
    throw InputError("outcome does not end with every player on the target");
  }
  for (std::size_t k = 0; k < path.length(); ++k) {
    auto from = graph.Find(path.config_at(k));
    auto to = graph.Find(path.config_at(k + 1));
    if (!from || !to) throw InternalError("outcome leaves the configuration graph");
    auto t = graph.FindTransition(*from, *to);
    if (!t) throw InternalError("outcome transition missing from the configuration graph");
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      if (lambda.get(*t, i) < ExtNat(SuffixCost(path, i, k))) return false;
    }
  }
  return true;
}

}  // namespace dyncong
