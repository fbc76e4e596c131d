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

#ifndef DYNCONG_ORACLE_H_
#define DYNCONG_ORACLE_H_

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/graphs.h"

// Exhaustive reference implementations for tiny games. They only rely on
// the arena and configuration-graph primitives.
namespace dyncong::oracle {

// Minimum social cost over all joint move sequences of at most `max_steps`
// rounds that bring everyone to the target; +inf if there is none.
ExtNat BruteSocialOptimum(const Game& game, std::size_t max_steps);

// Cheapest path of at most `max_len` edges for `player` when every other
// player j follows paths[j] (then loops on the target). paths[player] is
// ignored.
ExtNat BruteBestResponse(const Game& game, std::span<const std::vector<EdgeId>> paths,
                         PlayerId player, std::size_t max_len);

// Horizon-bounded max-min values on concrete configurations: the others
// commit to a joint move, the player answers, and the player must arrive
// within the horizon.
class BruteValues {
 public:
  BruteValues(const Game& game, std::size_t horizon) : game_(game), horizon_(horizon) {}

  ExtNat Value(const Configuration& c, PlayerId player) { return Solve(c, player, horizon_); }

 private:
  ExtNat Solve(const Configuration& c, PlayerId player, std::size_t steps);

  const Game& game_;
  std::size_t horizon_;
  std::map<std::tuple<Configuration, PlayerId, std::size_t>, ExtNat> memo_;
};

// All paths from the source configuration that first reach the all-target
// configuration within `max_steps` rounds and survive every unilateral
// one-step deviation followed by horizon-|V|*kappa punishment.
std::vector<OutcomePath> BruteNeOutcomes(const Game& game, std::size_t max_steps);

// Every path from the source configuration that first reaches the
// all-target configuration within `max_steps` rounds.
std::vector<OutcomePath> CompletePaths(const Game& game, std::size_t max_steps);

struct PartitionInstance {
  Arena arena;
  std::size_t num_players = 0;
  Natural half_sum = 0;
  Natural big_cost = 0;
};

// Gadget whose social optimum is below big_cost iff `family` splits into
// two halves of equal sum. Throws InputError on an odd total.
PartitionInstance GenPartitionArena(std::span<const Natural> family);

}  // namespace dyncong::oracle

#endif  // DYNCONG_ORACLE_H_
