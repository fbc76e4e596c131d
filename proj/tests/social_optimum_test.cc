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

#include <random>
#include <vector>

#include "doctest.h"

#include "dyncong/dynamics.h"
#include "dyncong/oracle.h"
#include "dyncong/social_optimum.h"
#include "support/corpus.h"

namespace dyncong {
namespace {

Arena SingleEdge() {
  return Arena::Create({"src", "tgt"}, "src", "tgt", {{"src", "tgt", CostFunction::Affine(1, 0)}});
}

TEST_CASE("a single player takes the cheapest path") {
  Game g(testing::Fig1(), 1);
  SocialOptimum so = ComputeSocialOptimum(g);
  CHECK(so.cost == 8);
  std::vector<Configuration> configs = so.witness.Configurations();
  CHECK(configs == std::vector<Configuration>{testing::ConfigOf(g.arena(), {"src"}),
                                              testing::ConfigOf(g.arena(), {"v1"}),
                                              testing::ConfigOf(g.arena(), {"v3"}),
                                              testing::ConfigOf(g.arena(), {"tgt"})});
}

TEST_CASE("two players on fig1") {
  Game g(testing::Fig1(), 2);
  SocialOptimum so = ComputeSocialOptimum(g);
  CHECK(so.cost == 22);
  CHECK(oracle::BruteSocialOptimum(g, 10) == ExtNat(22));
  CHECK(EvalOutcome(g, so.witness).social == ExtNat(22));
  CHECK(so.abstract_path.size() == so.witness.length() + 1);
}

TEST_CASE("everyone crosses a single edge together") {
  Game g(SingleEdge(), 3);
  CHECK(ComputeSocialOptimum(g).cost == 9);
  CHECK(oracle::BruteSocialOptimum(g, 6) == ExtNat(9));
}

TEST_CASE("constrained social optimum uses an inclusive bound") {
  Game g(testing::Fig1(), 2);
  CHECK(ConstrainedSocialOptimum(g, 22).has_value());
  CHECK_FALSE(ConstrainedSocialOptimum(g, 21).has_value());
  const Natural generous = g.num_players() * g.arena().num_states() * g.kappa();
  CHECK(ConstrainedSocialOptimum(g, generous).has_value());
  CHECK(ConstrainedSocialOptimum(g, 22)->cost == 22);
}

TEST_CASE("matches exhaustive search on the corpus") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Game g(cg.arena, cg.players);
    SocialOptimum so = ComputeSocialOptimum(g);
    CHECK(oracle::BruteSocialOptimum(g, cg.players * cg.arena.num_states()) == ExtNat(so.cost));
    CHECK(EvalOutcome(g, so.witness).social == ExtNat(so.cost));
    CHECK(so.witness.length() <= cg.players * cg.arena.num_states());
    CHECK(AllAtTarget(g.arena(), so.witness.last()));
  }
}

TEST_CASE("no blind profile beats the optimum") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Arena arena = testing::RandomArena(rng, 6);
    Game g(arena, 1 + trial % 3);
    const Natural so = ComputeSocialOptimum(g).cost;
    for (int k = 0; k < 5; ++k) {
      BlindProfile p;
      for (std::size_t i = 0; i < g.num_players(); ++i) p.push_back(testing::RandomStrategy(rng, arena));
      CHECK(ExtNat(so) <= EvalBlindProfile(g, p).social);
    }
  }
}

TEST_CASE("optimum does not decrease with more players") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Natural previous = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      Natural cost = ComputeSocialOptimum(Game(cg.arena, n)).cost;
      CHECK(cost >= previous);
      previous = cost;
    }
  }
}

TEST_CASE("lifting assigns players in index order") {
  Game g(testing::Fig1(), 2);
  const Arena& a = g.arena();
  EdgeDistribution d(a.num_edges(), 0);
  d[testing::EdgeOf(a, "src", "v1")] = 1;
  d[testing::EdgeOf(a, "src", "v2")] = 1;
  OutcomePath p = LiftAbstractPath(g, {d});
  CHECK(p.last() == testing::ConfigOf(a, {"v1", "v2"}));
}

TEST_CASE("partition gadgets reach the balanced cost") {
  const std::vector<Natural> pair{1, 1};
  oracle::PartitionInstance inst = oracle::GenPartitionArena(pair);
  Game g(inst.arena, inst.num_players);
  CHECK(inst.num_players == 6);
  CHECK(inst.big_cost == 39);
  CHECK(ComputeSocialOptimum(g).cost == 38);

  const std::vector<Natural> triple{1, 1, 2};
  oracle::PartitionInstance inst3 = oracle::GenPartitionArena(triple);
  CHECK(inst3.num_players == 10);
  auto so = ConstrainedSocialOptimum(Game(inst3.arena, inst3.num_players), inst3.big_cost - 1);
  REQUIRE(so.has_value());
  CHECK(so->cost == 64);
}

}  // namespace
}  // namespace dyncong
