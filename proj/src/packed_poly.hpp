// Copyright 2026 The hodge-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense-key polynomial used for heavy determinant work: up to 8 variables,
// exponents below 256 packed one byte each into a 64-bit key; integer
// numerators over one positive common denominator.

#ifndef HODGE_BOUNDS_SRC_PACKED_POLY_HPP
#define HODGE_BOUNDS_SRC_PACKED_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hodge_bounds/poly.hpp"

namespace hodge::detail {

class PackedPoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;

  PackedPoly() : den_(1) {}
  PackedPoly(long c) : den_(1) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, Integer(c));
  }

  /// vars[i] is the variable stored in byte i.
  static PackedPoly from(const MultiPoly& p, const std::vector<HodgeVar>& vars);
  MultiPoly to_multi(const std::vector<HodgeVar>& vars) const;

  bool is_zero() const noexcept { return terms_.empty(); }

  PackedPoly& operator+=(const PackedPoly& o) { return add(o, false); }
  PackedPoly& operator-=(const PackedPoly& o) { return add(o, true); }
  friend PackedPoly operator*(const PackedPoly& a, const PackedPoly& b);

  friend bool operator==(const PackedPoly& a, const PackedPoly& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }

 private:
  PackedPoly& add(const PackedPoly& o, bool negate);
  void reduce();

  std::vector<std::pair<Key, Integer>> terms_;  // sorted by key, no zeros
  Integer den_;
};

}  // namespace hodge::detail

#endif  // HODGE_BOUNDS_SRC_PACKED_POLY_HPP
