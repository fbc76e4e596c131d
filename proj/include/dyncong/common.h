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

#ifndef DYNCONG_COMMON_H_
#define DYNCONG_COMMON_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyncong {

using Natural = std::uint64_t;
using StateId = std::uint32_t;
using EdgeId = std::uint32_t;
using PlayerId = std::uint32_t;  // 0-based internally, 1-based in messages.

// Malformed input: bad files, invalid arenas, ill-formed paths or profiles.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven bound was violated; always a bug, never an answer.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A search expanded more nodes than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Natural CheckedAdd(Natural a, Natural b);
Natural CheckedMul(Natural a, Natural b);
std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);
std::int64_t ToSigned(Natural a);
// Saturates at the maximum value instead of throwing; used for bounds that
// are only compared against.
Natural SaturatingAdd(Natural a, Natural b);
Natural SaturatingMul(Natural a, Natural b);
Natural SaturatingPow(Natural base, Natural exponent);

// Node budget for explicit searches. Defaults to 10^7 and can be overridden
// through the DYNCONG_NODE_BUDGET environment variable.
std::size_t NodeBudget();
void SetNodeBudget(std::size_t budget);
// Throws BudgetExceeded when `count` exceeds the budget.
void ChargeNodes(std::size_t count, const char* what);

// A value in N extended with -inf and +inf.
class ExtNat {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr ExtNat() = default;
  constexpr ExtNat(Natural value) : kind_(Kind::kFinite), value_(value) {}  // NOLINT

  static constexpr ExtNat PosInf() { return ExtNat(Kind::kPosInf); }
  static constexpr ExtNat NegInf() { return ExtNat(Kind::kNegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  // Throws InternalError on infinite values.
  Natural value() const;

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a,
                                                    const ExtNat& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::kFinite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  // inf + x = inf; mixing -inf and +inf is an InternalError.
  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);

  std::string ToString() const;  // "-inf", "+inf" or decimal.
  static ExtNat FromString(const std::string& text);

 private:
  constexpr explicit ExtNat(Kind kind) : kind_(kind) {}
  Kind kind_ = Kind::kFinite;
  Natural value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& v);

// Combines hashes of integer sequences; used for configuration keys.
struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (const T& x : v) {
      h ^= std::hash<T>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace dyncong

#endif  // DYNCONG_COMMON_H_
