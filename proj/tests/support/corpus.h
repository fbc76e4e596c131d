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

#ifndef DYNCONG_TESTS_SUPPORT_CORPUS_H_
#define DYNCONG_TESTS_SUPPORT_CORPUS_H_

#include <random>
#include <string>
#include <vector>

#include "dyncong/arena.h"
#include "dyncong/dynamics.h"
#include "dyncong/graphs.h"

namespace dyncong::testing {

Arena LoadArena(const std::string& file);
Arena Fig1();
Arena Fig5();

EdgeId EdgeOf(const Arena& arena, const std::string& from, const std::string& to);
// Edges along a state sequence.
BlindStrategy PathOf(const Arena& arena, const std::vector<std::string>& states);
Configuration ConfigOf(const Arena& arena, const std::vector<std::string>& names);
// Joint moves from per-player state sequences (shorter ones loop on the
// target).
std::vector<MoveVector> MovesOf(const Arena& arena,
                                const std::vector<std::vector<std::string>>& routes);

struct CorpusGame {
  std::string name;
  Arena arena;
  std::size_t players;
};

// Tiny games (|V| <= 6, n <= 3) whose non-target edges all cost at least 1.
std::vector<CorpusGame> Corpus();

// Random arena with 2..max_states states, positive affine costs, and the
// target reachable from everywhere.
Arena RandomArena(std::mt19937& rng, std::size_t max_states);
// Random blind strategy: a walk of bounded length that ends on the target.
BlindStrategy RandomStrategy(std::mt19937& rng, const Arena& arena);

}  // namespace dyncong::testing

#endif  // DYNCONG_TESTS_SUPPORT_CORPUS_H_
