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

#ifndef DYNCONG_SPE_H_
#define DYNCONG_SPE_H_

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/graphs.h"

namespace dyncong {

// Configurations reachable from the source configuration, with every joint
// transition between them.
class ConfigGraph {
 public:
  struct Transition {
    std::size_t to = 0;
    MoveVector moves;
    std::vector<Natural> weights;
  };

  static ConfigGraph Build(const Game& game);

  std::size_t num_configs() const { return configs_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }
  const Configuration& config(std::size_t k) const { return configs_[k]; }
  std::optional<std::size_t> Find(const Configuration& c) const;
  // Number of players on the target.
  std::size_t region(std::size_t k) const { return regions_[k]; }
  // Transition ids leaving configuration k, in move-vector order.
  std::span<const std::size_t> out(std::size_t k) const { return out_[k]; }
  const Transition& transition(std::size_t t) const { return transitions_[t]; }
  std::size_t source_of(std::size_t t) const { return sources_[t]; }
  std::optional<std::size_t> FindTransition(std::size_t from, std::size_t to) const;
  std::size_t source_config() const { return 0; }
  std::optional<std::size_t> target_config() const { return target_; }

 private:
  std::vector<Configuration> configs_;
  std::unordered_map<Configuration, std::size_t, VectorHash> index_;
  std::vector<std::size_t> regions_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> sources_;
  std::optional<std::size_t> target_;
};

// One label per (transition, player), in N extended with -inf and +inf.
class LabelTable {
 public:
  LabelTable() = default;
  LabelTable(std::size_t num_transitions, std::size_t num_players, ExtNat init)
      : num_players_(num_players), labels_(num_transitions * num_players, init) {}

  std::size_t num_players() const { return num_players_; }
  std::size_t num_transitions() const {
    return num_players_ == 0 ? 0 : labels_.size() / num_players_;
  }
  ExtNat get(std::size_t t, PlayerId i) const { return labels_[t * num_players_ + i]; }
  void set(std::size_t t, PlayerId i, ExtNat v) { labels_[t * num_players_ + i] = v; }
  std::span<const ExtNat> of(std::size_t t) const {
    return std::span(labels_).subspan(t * num_players_, num_players_);
  }

  friend bool operator==(const LabelTable&, const LabelTable&) = default;

 private:
  std::size_t num_players_ = 0;
  std::vector<ExtNat> labels_;
};

// Counter value standing for +inf.
inline constexpr Natural kInfiniteCounter = std::numeric_limits<Natural>::max();

// Counters at the start of a counter graph rooted at c: 0 for players on
// the target, +inf for the others.
std::vector<Natural> InitialCounters(const Arena& arena, const Configuration& c);

// One move of a counter graph along a transition leaving `from` with step
// weights `weights` and labels `labels`. nullopt when the move is rejected:
// a label is -inf or a counter would become negative.
std::optional<std::vector<Natural>> CounterStep(const Arena& arena, const Configuration& from,
                                                std::span<const Natural> counters,
                                                std::span<const Natural> weights,
                                                std::span<const ExtNat> labels);

// Witness of a path from c to the all-target configuration that respects
// `labels` (every suffix cost of every player is bounded by the label of the
// transition it starts with), or nullopt when none exists.
std::optional<OutcomePath> LabelConsistentPath(const Game& game, const ConfigGraph& graph,
                                               const LabelTable& labels, std::size_t start);

// Supremum of a player's cost over the label-consistent paths from `start`.
// nullopt when there is no such path.
std::optional<ExtNat> SupCost(const Game& game, const ConfigGraph& graph, const LabelTable& labels,
                              std::size_t start, PlayerId player);

struct LambdaStats {
  // Iterations of the label update per region, region n first.
  std::vector<std::size_t> iterations;
  std::size_t max_iterations = 0;
  Natural stabilization_bound = 0;
  bool monotone = true;
  // Finite labels after |V| iterations stay below |V| * kappa.
  bool value_bound_holds = true;
  bool intermediate_bound_holds = true;
  std::size_t max_counter_states = 0;
};

struct LambdaResult {
  LabelTable labels;
  LambdaStats stats;
};

// Labels whose consistent paths from the source configuration are exactly
// the SPE outcomes. Regions are processed from all-at-target down to none
// at target; within a region labels are refined from +inf until stable.
LambdaResult ComputeLambda(const Game& game, const ConfigGraph& graph);

struct SpeQuery {
  bool exists = false;
  std::int64_t cost = 0;
  std::optional<OutcomePath> witness;
};

SpeQuery SpeExists(const Game& game, const ConfigGraph& graph, const LabelTable& lambda);

// Minimum of sum_i gamma_i * cost_i over SPE outcomes.
SpeQuery GammaMinSpe(const Game& game, const ConfigGraph& graph, const LabelTable& lambda,
                     std::span<const std::int64_t> gamma);

// Throws InputError unless the path starts at the source configuration and
// ends with every player on the target.
bool CheckSpeOutcome(const Game& game, const ConfigGraph& graph, const LabelTable& lambda,
                     const OutcomePath& path);

}  // namespace dyncong

#endif  // DYNCONG_SPE_H_
