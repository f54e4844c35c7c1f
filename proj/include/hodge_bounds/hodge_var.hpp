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

#ifndef HODGE_BOUNDS_HODGE_VAR_HPP
#define HODGE_BOUNDS_HODGE_VAR_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hodge {

/// The symbol h^{p,j}. The pair (0,1) is the irregularity and prints as "q".
struct HodgeVar {
  int p = 0;
  int j = 0;

  static constexpr HodgeVar irregularity() { return HodgeVar{0, 1}; }
  constexpr bool is_irregularity() const { return p == 0 && j == 1; }

  /// "q", "h12", or "h1_10" once an index exceeds one digit.
  std::string name() const;
  /// "q" or "h^{1,2}".
  std::string latex() const;

  friend constexpr auto operator<=>(const HodgeVar&, const HodgeVar&) = default;
};

/// Printing order of variables inside monomials and polynomials: Hodge
/// symbols with larger (p, j) first, the irregularity last.
struct VarOrder {
  constexpr bool operator()(const HodgeVar& a, const HodgeVar& b) const {
    if (a.is_irregularity() != b.is_irregularity()) return b.is_irregularity();
    return b < a;
  }
};

std::optional<HodgeVar> parse_hodge_var(std::string_view text);

/// Orbit of (p, j) under Hodge symmetry and Serre duality in dimension d,
/// sorted and without repetitions.
std::vector<std::pair<int, int>> symmetry_orbit(int p, int j, int d);

/// Lexicographically smallest member of the orbit.
HodgeVar canonical_var(HodgeVar v, int d);

}  // namespace hodge

#endif  // HODGE_BOUNDS_HODGE_VAR_HPP
