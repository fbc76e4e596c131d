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

#ifndef DYNCONG_GRAPHS_H_
#define DYNCONG_GRAPHS_H_

#include <functional>
#include <span>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/common.h"

namespace dyncong {

// Position of each player (index = player).
using Configuration = std::vector<StateId>;
// Number of players on each state (index = state); the Parikh image of a
// configuration.
using AbstractConfiguration = std::vector<std::uint32_t>;
// One edge per player, each leaving that player's current state.
using MoveVector = std::vector<EdgeId>;
// Number of players on each edge (index = edge id).
using EdgeDistribution = std::vector<std::uint32_t>;

Configuration SourceConfiguration(const Game& game);
Configuration TargetConfiguration(const Game& game);
bool AllAtTarget(const Arena& arena, const Configuration& c);

struct StepResult {
  std::vector<Natural> weights;
  Configuration next;
};

// One synchronous round. Player i pays d_{e_i}(u_i) where u_i counts the
// players on the same edge. Throws InputError if a move does not leave the
// mover's current state.
StepResult Step(const Game& game, const Configuration& c, const MoveVector& moves);

// The unique move vector realizing c => next. Throws InputError if some
// player has no edge between the two positions.
MoveVector MovesBetween(const Arena& arena, const Configuration& c, const Configuration& next);

// All move vectors from c, in lexicographic order of edge ids with the last
// player varying fastest.
std::vector<MoveVector> EnumerateMoveVectors(const Arena& arena, const Configuration& c);

struct OutcomeStep {
  MoveVector moves;
  std::vector<Natural> weights;
  Configuration next;

  friend bool operator==(const OutcomeStep&, const OutcomeStep&) = default;
};

// A finite path of the configuration graph with its weight vectors.
struct OutcomePath {
  Configuration start;
  std::vector<OutcomeStep> steps;

  const Configuration& config_at(std::size_t k) const {
    return k == 0 ? start : steps[k - 1].next;
  }
  const Configuration& last() const { return config_at(steps.size()); }
  std::size_t length() const { return steps.size(); }
  // Sequence of configurations, start first.
  std::vector<Configuration> Configurations() const;

  friend bool operator==(const OutcomePath&, const OutcomePath&) = default;
};

struct PathEvaluation {
  // +inf for players that never reach the target.
  std::vector<ExtNat> costs;
  ExtNat social;
  OutcomePath path;
};

// Applies `moves` from the source configuration.
PathEvaluation EvalPath(const Game& game, std::span<const MoveVector> moves);
// Re-checks chaining and weights of an existing path. Throws InputError when
// the path is inconsistent with the game.
PathEvaluation EvalOutcome(const Game& game, const OutcomePath& path);
// Builds the path visiting `configs` (first entry is the start).
OutcomePath PathThrough(const Game& game, std::span<const Configuration> configs);

// Cost of player i on the suffix starting at configuration index k.
Natural SuffixCost(const OutcomePath& path, PlayerId i, std::size_t k);

AbstractConfiguration Parikh(const Arena& arena, const Configuration& c);

// Calls `visit` for each way of distributing the players counted by
// `counts` over the out-edges of their states. Per state, compositions are
// generated with the first edge receiving the most players first; states are
// combined in state order.
void ForEachDistribution(const Arena& arena, const AbstractConfiguration& counts,
                         const std::function<void(const EdgeDistribution&)>& visit);

struct AbstractSuccessor {
  Natural weight = 0;
  AbstractConfiguration next;
  EdgeDistribution distribution;
};

// One entry per edge distribution, in ForEachDistribution order.
std::vector<AbstractSuccessor> AbstractSuccessors(const Arena& arena,
                                                  const AbstractConfiguration& a);
// Keeps the cheapest distribution per successor configuration (first one on
// ties), ordered by first appearance.
std::vector<AbstractSuccessor> CheapestAbstractSuccessors(const Arena& arena,
                                                          const AbstractConfiguration& a);

struct Deviation {
  Configuration config;
  // cost_i(c, config): d_{e'}(1 + players other than i on e').
  Natural cost = 0;
  EdgeId edge = 0;
};

// dev_i(c, next): player i replaces its move by every edge out of c(i) while
// the others keep theirs. Includes `next` itself. Ordered by edge id.
std::vector<Deviation> DevSetForMoves(const Game& game, const Configuration& c,
                                      const MoveVector& moves,
                              PlayerId i);
std::vector<Deviation> DevSet(const Game& game, const Configuration& c,
                              const Configuration& next, PlayerId i);

}  // namespace dyncong

#endif  // DYNCONG_GRAPHS_H_
