// Copyright 2026 The ORP Authors
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

#ifndef ORP_COST_H_
#define ORP_COST_H_

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace orp {

// A nonnegative path cost, or infinity.
//
// Stored as a double so that integer lengths stay exact (every integer up to
// 2^53 is representable and sums of such integers are computed without
// rounding) while fractional lengths remain usable from the library API.
// Addition saturates at infinity because IEEE infinity absorbs finite values.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(double value) : value_(value) {}

  static constexpr Cost Zero() { return Cost(0.0); }
  static constexpr Cost Infinity() {
    return Cost(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const { return value_; }
  constexpr bool is_finite() const {
    return value_ != std::numeric_limits<double>::infinity();
  }
  constexpr bool is_infinite() const { return !is_finite(); }

  friend constexpr Cost operator+(Cost a, Cost b) {
    return Cost(a.value_ + b.value_);
  }
  Cost& operator+=(Cost other) {
    value_ += other.value_;
    return *this;
  }
  // Only defined for a finite minuend; used to recover detour values from
  // swap-edge keys.
  friend constexpr Cost operator-(Cost a, Cost b) {
    return Cost(a.value_ - b.value_);
  }

  friend constexpr bool operator==(Cost a, Cost b) = default;
  friend constexpr auto operator<=>(Cost a, Cost b) {
    return a.value_ <=> b.value_;
  }

  // "inf" for infinity, an integer literal for integral values, otherwise the
  // shortest round-trip decimal representation.
  std::string ToString() const;

 private:
  double value_ = 0.0;
};

inline constexpr Cost Max(Cost a, Cost b) { return a < b ? b : a; }
inline constexpr Cost Min(Cost a, Cost b) { return b < a ? b : a; }

}  // namespace orp

#endif  // ORP_COST_H_
