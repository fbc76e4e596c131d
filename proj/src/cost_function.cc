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

#include "dyncong/cost_function.h"

#include <algorithm>
#include <string>

namespace dyncong {
namespace {

Natural EvalPieces(std::span<const Piece> pieces, Natural load) {
  // Last piece whose from_load <= load.
  auto it = std::upper_bound(
      pieces.begin(), pieces.end(), load,
      [](Natural x, const Piece& p) { return x < p.from_load; });
  const Piece& p = *(it - 1);
  return CheckedAdd(CheckedMul(p.slope, load), p.intercept);
}

}  // namespace

std::string ValidateCostFunction(std::span<const PieceSpec> pieces) {
  if (pieces.empty()) return "cost function has no pieces";
  if (pieces.front().from_load != 1) return "first piece must start at load 1";
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const PieceSpec& p = pieces[k];
    if (p.from_load < 1 || p.slope < 0 || p.intercept < 0) {
      return "negative coefficient in piece " + std::to_string(k);
    }
    if (k > 0 && p.from_load <= pieces[k - 1].from_load) {
      return "pieces overlap or are unsorted at piece " + std::to_string(k);
    }
  }
  std::vector<Piece> converted;
  for (const PieceSpec& p : pieces) {
    converted.push_back({static_cast<Natural>(p.from_load), static_cast<Natural>(p.slope),
                         static_cast<Natural>(p.intercept)});
  }
  // Slopes are non-negative, so monotonicity can only break at a boundary.
  try {
    for (std::size_t k = 1; k < converted.size(); ++k) {
      Natural x = converted[k].from_load;
      Natural before = EvalPieces(converted, x - 1);
      Natural at = EvalPieces(converted, x);
      if (at < before) {
        return "decreasing at load " + std::to_string(x) + " (" + std::to_string(before) +
               " > " + std::to_string(at) + ")";
      }
    }
  } catch (const OverflowError&) {
    return "cost function overflows at a piece boundary";
  }
  return {};
}

CostFunction CostFunction::Create(std::span<const PieceSpec> pieces) {
  std::string problem = ValidateCostFunction(pieces);
  if (!problem.empty()) throw InputError("invalid cost function: " + problem);
  std::vector<Piece> converted;
  for (const PieceSpec& p : pieces) {
    converted.push_back({static_cast<Natural>(p.from_load), static_cast<Natural>(p.slope),
                         static_cast<Natural>(p.intercept)});
  }
  return CostFunction(std::move(converted));
}

CostFunction CostFunction::Affine(Natural slope, Natural intercept) {
  return CostFunction({Piece{1, slope, intercept}});
}

CostFunction CostFunction::Threshold(Natural threshold, Natural low, Natural high) {
  if (high < low) throw InputError("threshold cost function must be non-decreasing");
  if (threshold == 0) return Constant(high);
  return CostFunction({Piece{1, 0, low}, Piece{threshold + 1, 0, high}});
}

Natural CostFunction::Eval(Natural load) const {
  if (load == 0) throw std::domain_error("cost function evaluated at load 0");
  return EvalPieces(pieces_, load);
}

bool CostFunction::IsZero() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.slope == 0 && p.intercept == 0; });
}

}  // namespace dyncong
