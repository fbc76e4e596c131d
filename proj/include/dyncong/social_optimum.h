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

#ifndef DYNCONG_SOCIAL_OPTIMUM_H_
#define DYNCONG_SOCIAL_OPTIMUM_H_

#include <optional>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/graphs.h"

namespace dyncong {

struct SocialOptimum {
  Natural cost = 0;
  // Abstract configurations from all-at-source to all-at-target.
  std::vector<AbstractConfiguration> abstract_path;
  // Edge distribution used for each abstract step.
  std::vector<EdgeDistribution> distributions;
  // Concrete lifting; replays to `cost` under EvalOutcome.
  OutcomePath witness;
};

// Cheapest way to bring every player to the target. Ties between equally
// cheap abstract paths go to the one with fewer steps.
SocialOptimum ComputeSocialOptimum(const Game& game);

// Social optimum when its cost is at most `bound`, nullopt otherwise. The
// search stops as soon as every remaining candidate exceeds the bound.
std::optional<SocialOptimum> ConstrainedSocialOptimum(const Game& game, Natural bound);

// Realizes an abstract path concretely: at every step, players on a state
// are assigned to that state's edges in ascending player order.
OutcomePath LiftAbstractPath(const Game& game, const std::vector<EdgeDistribution>& distributions);

}  // namespace dyncong

#endif  // DYNCONG_SOCIAL_OPTIMUM_H_
