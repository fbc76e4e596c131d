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

#include "dyncong/metrics.h"

#include <numeric>
#include <vector>

#include "dyncong/social_optimum.h"

namespace dyncong {

Ratio Ratio::Of(Natural num, Natural den) {
  Ratio r;
  if (den == 0) {
    r.infinite_ = num > 0;
    return r;
  }
  const Natural g = std::gcd(num, den);
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

double Ratio::ToDouble() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::ToString() const {
  if (infinite_) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Prices ComputePrices(const Game& game, const ValueTable& values) {
  Prices p;
  p.social_optimum = ComputeSocialOptimum(game).cost;
  const std::vector<std::int64_t> best(game.num_players(), 1);
  const std::vector<std::int64_t> worst(game.num_players(), -1);
  p.best_ne = static_cast<Natural>(GammaMinNe(game, values, best).cost);
  p.worst_ne = static_cast<Natural>(-GammaMinNe(game, values, worst).cost);
  p.stability = Ratio::Of(p.best_ne, p.social_optimum);
  p.anarchy = Ratio::Of(p.worst_ne, p.social_optimum);
  return p;
}

}  // namespace dyncong
