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

#ifndef DYNCONG_NASH_H_
#define DYNCONG_NASH_H_

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/graphs.h"

namespace dyncong {

// Position of one distinguished player together with the abstract position
// of the n - 1 others. By symmetry this is all a value depends on.
struct ValueState {
  StateId my_state = 0;
  AbstractConfiguration others;

  friend bool operator==(const ValueState&, const ValueState&) = default;
};

ValueState ValueStateOf(const Arena& arena, const Configuration& c, PlayerId player);

// Worst cost the other players can force on a player who plays optimally,
// for every value state. Also remembers, per state, a coalition edge
// distribution achieving that value.
class ValueTable {
 public:
  static ValueTable Compute(const Game& game);

  std::size_t size() const { return states_.size(); }
  const ValueState& state(std::size_t k) const { return states_[k]; }
  Natural value(std::size_t k) const { return values_[k]; }
  Natural Value(const ValueState& s) const;
  Natural Value(const Configuration& c, PlayerId player) const;
  // Coalition distribution that realizes the value at `s`.
  const EdgeDistribution& Punishment(const ValueState& s) const;
  std::size_t iterations() const { return iterations_; }

 private:
  std::size_t Index(const ValueState& s) const;

  std::size_t num_states_ = 0;
  std::vector<ValueState> states_;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, VectorHash> index_;
  std::vector<Natural> values_;
  std::vector<EdgeDistribution> punishments_;
  std::size_t iterations_ = 0;
};

// True iff no player can profit from a one-step deviation followed by
// optimal play against a punishing coalition. Throws InputError unless the
// path starts at the source configuration and ends with everyone on the
// target.
bool CheckNeOutcome(const Game& game, const ValueTable& values, const OutcomePath& path);

struct GammaNe {
  std::int64_t cost = 0;
  OutcomePath witness;
  std::size_t explored = 0;
};

// Minimum of sum_i gamma_i * cost_i over Nash equilibrium outcomes, found
// as a shortest path in the configuration graph augmented with per-player
// residual budgets.
GammaNe GammaMinNe(const Game& game, const ValueTable& values, std::span<const std::int64_t> gamma);

// Witness when the gamma-minimal NE cost is at most `bound`.
std::optional<GammaNe> ConstrainedNe(const Game& game, const ValueTable& values,
                                     std::span<const std::int64_t> gamma, std::int64_t bound);

// Strategy profile built from an NE outcome: follow the main path; after the
// first deviation, the other players punish the deviator (the lowest-index
// one on simultaneous deviations) with a memoryless strategy.
struct NeProfile {
  OutcomePath main;
  std::unordered_map<std::vector<std::uint32_t>, EdgeDistribution, VectorHash> punishment;
};

// Throws InputError when `path` is not an NE outcome.
NeProfile SynthesizeNeProfile(const Game& game, const ValueTable& values, const OutcomePath& path);

// Moves of a deviating player given the history so far.
using DeviatorStrategy = std::function<EdgeId(const std::vector<Configuration>& history)>;

struct Simulation {
  OutcomePath path;
  std::vector<ExtNat> costs;
  std::optional<PlayerId> punished;
};

// Plays the profile, optionally with `deviator` following its own strategy,
// until everyone is on the target or `max_steps` rounds have passed.
Simulation SimulateNeProfile(const Game& game, const NeProfile& profile,
                             std::optional<PlayerId> deviator = std::nullopt,
                             const DeviatorStrategy& strategy = {}, std::size_t max_steps = 0);

}  // namespace dyncong

#endif  // DYNCONG_NASH_H_
