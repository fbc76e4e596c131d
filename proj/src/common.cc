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

#include "dyncong/common.h"

#include <cstdlib>
#include <string>

namespace dyncong {

Natural CheckedAdd(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("natural addition overflow");
  return r;
}

Natural CheckedMul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("natural multiplication overflow");
  return r;
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

std::int64_t ToSigned(Natural a) {
  if (a > static_cast<Natural>(std::numeric_limits<std::int64_t>::max())) {
    throw OverflowError("natural does not fit a signed 64-bit integer");
  }
  return static_cast<std::int64_t>(a);
}

Natural SaturatingAdd(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<Natural>::max();
  return r;
}

Natural SaturatingMul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<Natural>::max();
  return r;
}

Natural SaturatingPow(Natural base, Natural exponent) {
  Natural r = 1;
  for (Natural k = 0; k < exponent; ++k) {
    r = SaturatingMul(r, base);
    if (r == std::numeric_limits<Natural>::max()) break;
  }
  return r;
}

namespace {

std::size_t InitialBudget() {
  if (const char* env = std::getenv("DYNCONG_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

std::size_t& BudgetRef() {
  static std::size_t budget = InitialBudget();
  return budget;
}

}  // namespace

std::size_t NodeBudget() { return BudgetRef(); }
void SetNodeBudget(std::size_t budget) { BudgetRef() = budget; }

void ChargeNodes(std::size_t count, const char* what) {
  if (count > NodeBudget()) {
    throw BudgetExceeded(std::string(what) + ": node budget of " +
                         std::to_string(NodeBudget()) + " exceeded");
  }
}

Natural ExtNat::value() const {
  if (kind_ != Kind::kFinite) throw InternalError("value() on an infinite ExtNat");
  return value_;
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf())) {
    throw InternalError("-inf + +inf is undefined");
  }
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtNat::NegInf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtNat::PosInf();
  return ExtNat(CheckedAdd(a.value_, b.value_));
}

std::string ExtNat::ToString() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "+inf";
    case Kind::kFinite: break;
  }
  return std::to_string(value_);
}

ExtNat ExtNat::FromString(const std::string& text) {
  if (text == "-inf") return NegInf();
  if (text == "+inf" || text == "inf") return PosInf();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("not an extended natural: '" + text + "'");
  }
  return ExtNat(static_cast<Natural>(std::stoull(text)));
}

std::ostream& operator<<(std::ostream& os, const ExtNat& v) { return os << v.ToString(); }

}  // namespace dyncong
