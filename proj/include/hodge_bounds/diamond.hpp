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

#ifndef HODGE_BOUNDS_DIAMOND_HPP
#define HODGE_BOUNDS_DIAMOND_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge_bounds/poly.hpp"

namespace hodge {

/// m(X): an integer in [1, d] or the distinguished value infinity.
class ZeroLocusInvariant {
 public:
  enum class Kind { Finite, Infinity };

  static ZeroLocusInvariant finite(int value) { return ZeroLocusInvariant(Kind::Finite, value); }
  static ZeroLocusInvariant infinity() { return ZeroLocusInvariant(Kind::Infinity, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinity; }
  /// Throws InvalidArgument when infinite.
  int value() const;
  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const ZeroLocusInvariant&, const ZeroLocusInvariant&) = default;

 private:
  ZeroLocusInvariant(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

/// Accepts "inf", "infinity" or a positive integer.
ZeroLocusInvariant parse_zero_locus_invariant(std::string_view text);

struct AlbaneseFibers {
  int k = 0;  // generic fiber dimension
  int f = 0;  // maximal fiber dimension
  int l() const noexcept { return k > f - 1 ? k : f - 1; }
};

struct ManifoldProfile {
  int d = 1;
  int q = 1;
  ZeroLocusInvariant m = ZeroLocusInvariant::infinity();
  std::optional<AlbaneseFibers> albanese;
};

/// Throws InvalidArgument on out-of-range fields.
void validate_profile(const ManifoldProfile& pf);

/// How an index pair (p, j) becomes a polynomial.
enum class SymbolMode {
  Canonical,  // orbit representative; h^{0,0} -> 1, h^{0,1} -> q
  Raw,        // the literal symbol h^{p,j}
};

/// Symbolic Hodge number h^{p,j} of a d-dimensional manifold. Pairs outside
/// [0, d]^2 give 0.
MultiPoly hodge_symbol(int p, int j, int d, SymbolMode mode = SymbolMode::Canonical);

/// Hodge table with optional (free) entries.
class HodgeDiamond {
 public:
  explicit HodgeDiamond(int d);

  int dimension() const noexcept { return d_; }
  const std::optional<Integer>& at(int p, int j) const;
  void set(int p, int j, Integer value);
  void clear(int p, int j);
  bool is_complete() const;

  /// Entry (p, j) as a constant, or the canonical symbol when free.
  MultiPoly entry(int p, int j) const;
  /// Values of canonical variables read from assigned entries. q comes
  /// from h^{1,0} (or h^{0,1}).
  Assignment assignment() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int d_;
  std::vector<std::vector<std::optional<Integer>>> h_;
};

struct SymmetryViolation {
  int p = 0;
  int j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<SymmetryViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

/// Checks h^{0,0} = 1, both symmetries, non-negativity and h^{1,0} = q.
/// Free entries are skipped. Throws InvalidArgument on dimension mismatch.
ValidationReport validate_diamond(const HodgeDiamond& dm, const ManifoldProfile& pf);

/// h^{p,j} = C(d,p) C(d,j).
HodgeDiamond abelian_diamond(int d);

/// Closes the assigned entries under both symmetries; unassigned orbits stay
/// free. Throws Symmetry when one orbit receives two different values.
HodgeDiamond partial_diamond(int d, const std::map<std::pair<int, int>, Integer>& assignments);

/// {"d": int, "h": [[int]]}; null entries are read as free. Throws Parse.
HodgeDiamond parse_diamond_json(std::string_view text);
std::string render_diamond_json(const HodgeDiamond& dm);

}  // namespace hodge

#endif  // HODGE_BOUNDS_DIAMOND_HPP
