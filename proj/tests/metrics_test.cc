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

#include "doctest.h"

#include "dyncong/metrics.h"
#include "dyncong/nash.h"
#include "support/corpus.h"

namespace dyncong {
namespace {

TEST_CASE("ratios reduce and compare exactly") {
  CHECK(Ratio::Of(6, 4).ToString() == "3/2");
  CHECK(Ratio::Of(0, 0) == Ratio::Of(1, 1));
  CHECK(Ratio::Of(5, 0).is_infinite());
  CHECK(Ratio::Of(5, 0).ToString() == "inf");
  CHECK(Ratio::Of(2, 3) < Ratio::Of(3, 4));
  CHECK(Ratio::Of(10, 5) == Ratio::Of(2, 1));
  CHECK(Ratio::Of(1000000, 1) < Ratio::Of(1, 0));
  CHECK(Ratio::Of(3, 2).ToDouble() == doctest::Approx(1.5));
}

TEST_CASE("prices on fig5") {
  Game g(testing::Fig5(), 3);
  Prices p = ComputePrices(g, ValueTable::Compute(g));
  CHECK(p.best_ne == 36);
  CHECK(p.social_optimum <= p.best_ne);
  CHECK(p.stability == Ratio::Of(p.best_ne, p.social_optimum));
  CHECK(p.anarchy == Ratio::Of(p.worst_ne, p.social_optimum));
}

TEST_CASE("prices are sandwiched on the corpus") {
  for (const auto& cg : testing::Corpus()) {
    CAPTURE(cg.name);
    Game g(cg.arena, cg.players);
    Prices p = ComputePrices(g, ValueTable::Compute(g));
    CHECK(p.social_optimum <= p.best_ne);
    CHECK(p.best_ne <= p.worst_ne);
    CHECK(Ratio::Of(1, 1) <= p.stability);
    CHECK(p.stability <= p.anarchy);
  }
}

}  // namespace
}  // namespace dyncong
