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

#ifndef DYNCONG_METRICS_H_
#define DYNCONG_METRICS_H_

#include <compare>
#include <string>

#include "dyncong/arena.h"
#include "dyncong/nash.h"

namespace dyncong {

// Non-negative rational in lowest terms, or +inf.
class Ratio {
 public:
  // num/den; 0/0 is 1 and x/0 is +inf for x > 0.
  static Ratio Of(Natural num, Natural den);

  bool is_infinite() const { return infinite_; }
  Natural num() const { return num_; }
  Natural den() const { return den_; }
  double ToDouble() const;
  std::string ToString() const;  // "a/b" or "inf".

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  Natural num_ = 1;
  Natural den_ = 1;
  bool infinite_ = false;
};

struct Prices {
  Natural social_optimum = 0;
  Natural best_ne = 0;
  Natural worst_ne = 0;
  Ratio stability;  // best_ne / social_optimum
  Ratio anarchy;    // worst_ne / social_optimum
};

Prices ComputePrices(const Game& game, const ValueTable& values);

}  // namespace dyncong

#endif  // DYNCONG_METRICS_H_
