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

#ifndef HODGE_BOUNDS_POLY_HPP
#define HODGE_BOUNDS_POLY_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge_bounds/hodge_var.hpp"
#include "hodge_bounds/rational.hpp"

namespace hodge {

using Assignment = std::map<HodgeVar, Integer>;

/// A power product of Hodge variables, factors kept in VarOrder with
/// strictly positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(HodgeVar v, int exponent = 1);

  int degree() const noexcept { return degree_; }
  int exponent(HodgeVar v) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  const std::vector<std::pair<HodgeVar, int>>& factors() const noexcept { return factors_; }

  Monomial operator*(const Monomial& other) const;
  /// Removes every power of v.
  Monomial without(HodgeVar v) const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<HodgeVar, int>> factors_;
  int degree_ = 0;
};

/// Graded order: higher total degree first, then lexicographic on the
/// exponent vector taken in VarOrder.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over Q in Hodge variables. Zero coefficients are never stored
/// and terms live in a sorted map, so operator== is structural equality.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  static MultiPoly variable(HodgeVar v);
  static MultiPoly term(const Rational& c, const Monomial& m);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  int degree() const noexcept;
  int degree_in(HodgeVar v) const noexcept;
  std::set<HodgeVar> variables() const;
  std::size_t size() const noexcept { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned exponent) const;

  /// Exact value; throws ErrorCode::Unassigned naming the first missing variable.
  Rational evaluate(const Assignment& values) const;
  /// Replaces the listed variables by polynomials, leaving the rest symbolic.
  MultiPoly substitute(const std::map<HodgeVar, MultiPoly>& values) const;
  MultiPoly substitute(const Assignment& values) const;
  MultiPoly rename(const std::function<HodgeVar(HodgeVar)>& f) const;
  /// Coefficients as a polynomial in v: entry k multiplies v^k.
  std::vector<MultiPoly> coefficients_in(HodgeVar v) const;

  /// Positive rational content: the primitive part has integer coprime
  /// coefficients and the same sign pattern.
  Rational content() const;
  MultiPoly primitive_part() const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Parses +, -, *, /, ^, parentheses, integers, "q" and hPJ / hP_J names.
/// Division is only allowed by non-zero constants.
MultiPoly parse_poly(std::string_view text);

/// Stable ordering for polynomials used as container keys.
struct PolyLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const;
};

}  // namespace hodge

#endif  // HODGE_BOUNDS_POLY_HPP
