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

#ifndef HODGE_BOUNDS_CONSTRAINT_HPP
#define HODGE_BOUNDS_CONSTRAINT_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hodge_bounds/diamond.hpp"
#include "hodge_bounds/poly.hpp"

namespace hodge {

enum class Relation { NonNeg, Zero };

std::string to_string(Relation r);
Relation parse_relation(std::string_view text);

/// A predicate on ManifoldProfile fields.
struct Hypothesis {
  enum class Kind {
    QGreater,   // q > value
    QAtLeast,   // q >= value
    QEquals,    // q = value
    DAtLeast,   // d >= value
    MEqualsD,   // m = d
    MInfinite,  // m = inf
  };
  Kind kind = Kind::QGreater;
  int value = 0;

  bool holds(const ManifoldProfile& pf) const;
  /// "q > 2", "q >= 3", "q = 5", "d >= 3", "m = d", "m = inf".
  std::string to_string() const;

  friend auto operator<=>(const Hypothesis&, const Hypothesis&) = default;
};

Hypothesis parse_hypothesis(std::string_view text);

/// Guard of a vanishing clause: the constraint is active only while
/// rank < index.
struct Condition {
  MultiPoly rank;
  int index = 0;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Constraint {
  MultiPoly expr;
  Relation relation = Relation::NonNeg;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> provenance;
  int p = 0;
  std::optional<Condition> condition;
  /// Variable a search raises first when the constraint is violated.
  std::optional<HodgeVar> lead;

  bool hypotheses_hold(const ManifoldProfile& pf) const;
  /// "h11 - 2*q >= 0 [q > 1]" style one-line summary.
  std::string to_string() const;
};

/// Normalizes expr to its primitive part (sign kept for NonNeg, leading
/// coefficient made positive for Zero), sorts hypotheses and drops
/// duplicates. Returns nullopt when expr is identically zero.
std::optional<Constraint> make_constraint(MultiPoly expr, Relation relation, std::vector<Hypothesis> hypotheses,
                                          std::string provenance, int p, std::optional<HodgeVar> lead = std::nullopt,
                                          std::optional<Condition> condition = std::nullopt);

/// Merges duplicates (same expr, relation, condition and hypotheses): the
/// provenance lists are united and the smaller p is kept. The result is
/// sorted by provenance, then expression.
std::vector<Constraint> deduplicate(std::vector<Constraint> constraints);

}  // namespace hodge

#endif  // HODGE_BOUNDS_CONSTRAINT_HPP
