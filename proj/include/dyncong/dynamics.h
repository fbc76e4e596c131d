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

#ifndef DYNCONG_DYNAMICS_H_
#define DYNCONG_DYNAMICS_H_

#include <optional>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/graphs.h"

namespace dyncong {

// A fixed path from the source, cut at its first visit to the target. The
// player loops on the target afterwards.
struct BlindStrategy {
  std::vector<EdgeId> edges;

  friend bool operator==(const BlindStrategy&, const BlindStrategy&) = default;
};

using BlindProfile = std::vector<BlindStrategy>;

// Throws InputError unless every strategy chains from the source and stops
// at its first arrival on the target.
void ValidateBlindProfile(const Game& game, const BlindProfile& profile);

// Longest strategy in the profile.
std::size_t ProfileLength(const BlindProfile& profile);

// Edge used by `strategy` at 0-based step k (the target loop past its end).
EdgeId EdgeAtStep(const Arena& arena, const BlindStrategy& strategy, std::size_t k);

// Joint moves of the profile until every player has arrived.
std::vector<MoveVector> ProfileMoves(const Game& game, const BlindProfile& profile);
PathEvaluation EvalBlindProfile(const Game& game, const BlindProfile& profile);

// Rosenthal-style potential: over every step and edge, the sum of
// d_e(1) + ... + d_e(load).
Natural Potential(const Game& game, const BlindProfile& profile);

struct BestResponse {
  BlindStrategy strategy;
  Natural cost = 0;
};

// Cheapest blind path for `player` against the other strategies, found in
// a graph layered by time step. Ties go to fewer edges, then to the
// lexicographically smallest edge sequence.
BestResponse ComputeBestResponse(const Game& game, const BlindProfile& profile, PlayerId player);

// Single-player shortest path under d_e(1), tie-broken as above.
BlindStrategy ShortestSoloPath(const Arena& arena);

struct BlindNeResult {
  BlindProfile profile;
  std::size_t improvements = 0;
  Natural initial_potential = 0;
};

// Best-response dynamics: sweeps players in index order and applies the
// first strict improvement until none is left. Starts by default with every
// player on ShortestSoloPath.
BlindNeResult ComputeBlindNe(const Game& game, std::optional<BlindProfile> initial = std::nullopt);

// True iff no player has a strictly cheaper best response.
bool IsBlindNe(const Game& game, const BlindProfile& profile);

}  // namespace dyncong

#endif  // DYNCONG_DYNAMICS_H_
