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

#include <set>
#include <vector>

#include "doctest.h"

#include "dyncong/nash.h"
#include "dyncong/oracle.h"
#include "dyncong/social_optimum.h"
#include "support/corpus.h"

namespace dyncong {
namespace {

using testing::ConfigOf;
using testing::EdgeOf;

OutcomePath CrossingOutcome(const Game& g) {
  return EvalPath(g, testing::MovesOf(g.arena(), {{"src", "v2", "v3", "tgt"},
                                                  {"src", "v1", "v2", "v3", "tgt"}}))
      .path;
}

std::vector<Configuration> AllConfigurations(const Game& g) {
  std::vector<Configuration> out{Configuration(g.num_players(), 0)};
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::vector<Configuration> next;
    for (const auto& c : out) {
      for (StateId s = 0; s < g.arena().num_states(); ++s) {
        Configuration d = c;
        d[i] = s;
        next.push_back(d);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<MoveVector> MovesKey(const OutcomePath& p) {
  std::vector<MoveVector> key;
  for (const auto& step : p.steps) key.push_back(step.moves);
  return key;
}

TEST_CASE("values on fig1") {
  Game g(testing::Fig1(), 2);
  ValueTable values = ValueTable::Compute(g);
  CHECK(values.Value(ConfigOf(g.arena(), {"v3", "v3"}), 0) == 8);
  CHECK(values.Value(ConfigOf(g.arena(), {"tgt", "v1"}), 0) == 0);
  oracle::BruteValues brute(g, 6);
  const Configuration src = ConfigOf(g.arena(), {"src", "src"});
  CHECK(brute.Value(src, 0) == ExtNat(values.Value(src, 0)));
}

TEST_CASE("values match the horizon search on the corpus") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Game g(cg.arena, cg.players);
    ValueTable values = ValueTable::Compute(g);
    const Natural ceiling = g.cost_ceiling();
    oracle::BruteValues brute(g, ceiling);
    for (std::size_t k = 0; k < values.size(); ++k) {
      CHECK(values.value(k) <= ceiling);
      CHECK((values.value(k) == 0) == (values.state(k).my_state == cg.arena.target()));
    }
    for (const auto& c : AllConfigurations(g)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        CAPTURE(c);
        CHECK(brute.Value(c, i) == ExtNat(values.Value(c, i)));
      }
    }
  }
}

TEST_CASE("the (10, 12) fig1 outcome is an equilibrium") {
  Game g(testing::Fig1(), 2);
  ValueTable values = ValueTable::Compute(g);
  OutcomePath path = CrossingOutcome(g);
  CHECK(EvalOutcome(g, path).costs == std::vector<ExtNat>{ExtNat(10), ExtNat(12)});
  CHECK(CheckNeOutcome(g, values, path));

  OutcomePath both = EvalPath(g, testing::MovesOf(g.arena(), {{"src", "v1", "v3", "tgt"},
                                                              {"src", "v1", "v3", "tgt"}}))
                         .path;
  CHECK(EvalOutcome(g, both).social == ExtNat(32));
  CHECK_FALSE(CheckNeOutcome(g, values, both));
}

TEST_CASE("a single edge game has only equilibria") {
  Arena arena = Arena::Create({"src", "tgt"}, "src", "tgt", {{"src", "tgt", CostFunction::Affine(1, 0)}});
  Game g(arena, 3);
  ValueTable values = ValueTable::Compute(g);
  OutcomePath path = EvalPath(g, testing::MovesOf(arena, {{"src", "tgt"}, {"src", "tgt"}, {"src", "tgt"}})).path;
  CHECK(CheckNeOutcome(g, values, path));
}

TEST_CASE("best equilibria") {
  Game g1(testing::Fig1(), 2);
  ValueTable v1 = ValueTable::Compute(g1);
  const std::vector<std::int64_t> ones2{1, 1};
  GammaNe best1 = GammaMinNe(g1, v1, ones2);
  CHECK(best1.cost <= 22);
  CHECK(CheckNeOutcome(g1, v1, best1.witness));
  CHECK(EvalOutcome(g1, best1.witness).social == ExtNat(static_cast<Natural>(best1.cost)));
  CHECK(ConstrainedNe(g1, v1, ones2, 22).has_value());

  Game g5(testing::Fig5(), 3);
  ValueTable v5 = ValueTable::Compute(g5);
  const std::vector<std::int64_t> ones3{1, 1, 1};
  GammaNe best5 = GammaMinNe(g5, v5, ones3);
  CHECK(best5.cost == 36);
  CHECK(CheckNeOutcome(g5, v5, best5.witness));
  CHECK(ConstrainedNe(g5, v5, ones3, 36).has_value());
  CHECK_FALSE(ConstrainedNe(g5, v5, ones3, 35).has_value());

  const std::vector<std::int64_t> zeros{0, 0, 0};
  GammaNe zero = GammaMinNe(g5, v5, zeros);
  CHECK(zero.cost == 0);
  CHECK(CheckNeOutcome(g5, v5, zero.witness));
}

TEST_CASE("equilibrium costs are sandwiched on the corpus") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Game g(cg.arena, cg.players);
    ValueTable values = ValueTable::Compute(g);
    const std::vector<std::int64_t> best(cg.players, 1);
    const std::vector<std::int64_t> worst(cg.players, -1);
    GammaNe lo = GammaMinNe(g, values, best);
    GammaNe hi = GammaMinNe(g, values, worst);
    CHECK(CheckNeOutcome(g, values, lo.witness));
    CHECK(CheckNeOutcome(g, values, hi.witness));
    CHECK(ToSigned(ComputeSocialOptimum(g).cost) <= lo.cost);
    CHECK(lo.cost <= -hi.cost);
  }
}

TEST_CASE("equilibrium outcomes match the brute-force set") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Game g(cg.arena, cg.players);
    ValueTable values = ValueTable::Compute(g);
    std::set<std::vector<MoveVector>> accepted;
    for (const auto& p : oracle::CompletePaths(g, 6)) {
      if (CheckNeOutcome(g, values, p)) accepted.insert(MovesKey(p));
    }
    std::set<std::vector<MoveVector>> brute;
    for (const auto& p : oracle::BruteNeOutcomes(g, 6)) brute.insert(MovesKey(p));
    CHECK_FALSE(brute.empty());
    CHECK(accepted == brute);
  }
}

TEST_CASE("synthesized profiles follow and punish") {
  Game g(testing::Fig1(), 2);
  const Arena& a = g.arena();
  ValueTable values = ValueTable::Compute(g);
  OutcomePath main = EvalPath(g, testing::MovesOf(a, {{"src", "v1", "v3", "tgt"},
                                                      {"src", "v1", "v2", "v3", "tgt"}}))
                         .path;
  NeProfile profile = SynthesizeNeProfile(g, values, main);
  Simulation plain = SimulateNeProfile(g, profile);
  CHECK(plain.costs == std::vector<ExtNat>{ExtNat(9), ExtNat(13)});
  CHECK_FALSE(plain.punished.has_value());

  const EdgeId shortcut = EdgeOf(a, "v1", "v3");
  const EdgeId finish = EdgeOf(a, "v3", "tgt");
  DeviatorStrategy deviate = [&](const std::vector<Configuration>& history) {
    const StateId at = history.back()[1];
    if (at == a.target()) return a.target_loop();
    return at == a.state_id("v1") ? shortcut : at == a.state_id("v3") ? finish : a.out_edges(at).front();
  };
  Simulation punished = SimulateNeProfile(g, profile, PlayerId{1}, deviate);
  CHECK(punished.punished == PlayerId{1});
  CHECK(ExtNat(13) <= punished.costs[1]);
  CHECK(ExtNat(values.Value(ConfigOf(a, {"src", "src"}), 1)) <= punished.costs[1]);

  OutcomePath both = EvalPath(g, testing::MovesOf(a, {{"src", "v1", "v3", "tgt"},
                                                      {"src", "v1", "v3", "tgt"}}))
                         .path;
  CHECK_THROWS_AS(SynthesizeNeProfile(g, values, both), InputError);
}

}  // namespace
}  // namespace dyncong
