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

#ifndef DYNCONG_COST_FUNCTION_H_
#define DYNCONG_COST_FUNCTION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dyncong/common.h"

namespace dyncong {

// One affine piece as written in an input file. Signed fields so that
// negative coefficients can be reported instead of silently wrapping.
struct PieceSpec {
  std::int64_t from_load = 1;
  std::int64_t slope = 0;
  std::int64_t intercept = 0;
};

struct Piece {
  Natural from_load = 1;
  Natural slope = 0;
  Natural intercept = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Non-decreasing piecewise-affine cost function N>0 -> N. Piece k applies to
// loads in [from_load_k, from_load_{k+1} - 1]; the last piece is unbounded.
class CostFunction {
 public:
  // Throws InputError when the pieces do not describe a valid function.
  static CostFunction Create(std::span<const PieceSpec> pieces);
  static CostFunction Affine(Natural slope, Natural intercept);
  static CostFunction Constant(Natural value) { return Affine(0, value); }
  // `low` for loads up to `threshold`, `high` above it.
  static CostFunction Threshold(Natural threshold, Natural low, Natural high);

  // Load must be positive: cost is only charged to users of an edge.
  Natural Eval(Natural load) const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool IsZero() const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  explicit CostFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Piece> pieces_;
};

// Empty string when valid, otherwise a description of the first problem.
std::string ValidateCostFunction(std::span<const PieceSpec> pieces);

}  // namespace dyncong

#endif  // DYNCONG_COST_FUNCTION_H_
