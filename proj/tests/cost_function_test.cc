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
#include <string>
#include <vector>

#include "doctest.h"

#include "dyncong/arena.h"
#include "dyncong/cost_function.h"
#include "support/corpus.h"

namespace dyncong {
namespace {

TEST_CASE("evaluates affine, constant and threshold functions") {
  CHECK(CostFunction::Affine(1, 0).Eval(2) == 2);
  CHECK(CostFunction::Constant(5).Eval(1) == 5);
  const CostFunction threshold = CostFunction::Threshold(3, 1, 97);
  CHECK(threshold.Eval(3) == 1);
  CHECK(threshold.Eval(4) == 97);
  CHECK(threshold.pieces().size() == 2);
}

TEST_CASE("load zero is outside the domain") {
  CHECK_THROWS_AS(CostFunction::Affine(1, 0).Eval(0), std::domain_error);
}

TEST_CASE("piece selection uses the last piece starting at or below the load") {
  const std::vector<PieceSpec> pieces{{1, 1, 0}, {3, 0, 10}, {5, 2, 3}};
  CostFunction f = CostFunction::Create(pieces);
  CHECK(f.Eval(1) == 1);
  CHECK(f.Eval(2) == 2);
  CHECK(f.Eval(3) == 10);
  CHECK(f.Eval(4) == 10);
  CHECK(f.Eval(5) == 13);
  CHECK(f.Eval(100) == 203);
}

TEST_CASE("validation accepts well-formed functions") {
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, 1, 0}}).empty());
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, 0, 2}, {2, 0, 4}}).empty());
}

TEST_CASE("validation rejects malformed functions") {
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, 0, 6}, {3, 0, 4}})
            .find("decreasing at load 3") != std::string::npos);
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{}).find("no pieces") != std::string::npos);
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{2, 1, 0}}).find("load 1") !=
        std::string::npos);
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, -1, 0}}).find("negative") !=
        std::string::npos);
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, 0, -2}}).find("negative") !=
        std::string::npos);
  CHECK(ValidateCostFunction(std::vector<PieceSpec>{{1, 0, 1}, {4, 0, 2}, {4, 0, 3}})
            .find("unsorted") != std::string::npos);
  CHECK_THROWS_AS(CostFunction::Create(std::vector<PieceSpec>{{1, 0, 6}, {3, 0, 4}}), InputError);
}

TEST_CASE("valid random functions are non-decreasing") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> small(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PieceSpec> pieces{{1, small(rng), small(rng)}};
    for (int k = 0; k < 3; ++k) {
      pieces.push_back({pieces.back().from_load + 1 + small(rng), small(rng), small(rng) * 3});
    }
    if (!ValidateCostFunction(pieces).empty()) continue;
    CostFunction f = CostFunction::Create(pieces);
    for (Natural x = 1; x < 30; ++x) CHECK(f.Eval(x + 1) >= f.Eval(x));
  }
}

TEST_CASE("kappa is the largest one-step cost at full load") {
  CHECK(Kappa(testing::Fig1(), 2) == 8);
  CHECK(Kappa(testing::Fig5(), 3) == 9);
  Arena zero = Arena::Create({"s", "t"}, "s", "t", {{"s", "t", CostFunction::Constant(0)}});
  CHECK(Kappa(zero, 1) == 0);
  CHECK(Kappa(zero, 7) == 0);
  CHECK(Game(testing::Fig1(), 2).cost_ceiling() == 5 * 8);
}

}  // namespace
}  // namespace dyncong
