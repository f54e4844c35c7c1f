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

#ifndef HODGE_BOUNDS_SERIES_HPP
#define HODGE_BOUNDS_SERIES_HPP

#include <string>
#include <vector>

#include "hodge_bounds/poly.hpp"

namespace hodge {

/// Element of R[[t]]/(t^N) with R = Q[h-variables].
class TruncatedSeries {
 public:
  /// The series 1 mod t^N.
  static TruncatedSeries one(int order);
  /// Takes ownership of the coefficients; order is coefficients.size().
  explicit TruncatedSeries(std::vector<MultiPoly> coefficients);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const MultiPoly& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^i, zero at or beyond the truncation order.
  MultiPoly coefficient(int i) const;

  TruncatedSeries operator*(const TruncatedSeries& other) const;
  /// Requires constant term 1.
  TruncatedSeries inverse() const;
  TruncatedSeries substitute(const Assignment& values) const;
  TruncatedSeries rename(const std::function<HodgeVar(HodgeVar)>& f) const;

  /// "1 + 2*t + 3*t^2"; symbolic coefficients are parenthesized.
  std::string to_string() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// (1 - j t)^e mod t^N via the generalized binomial coefficients.
TruncatedSeries expand_binomial_power(int j, const MultiPoly& e, int order);

/// Exact truncated product; throws InvalidArgument on mismatched orders or
/// an empty list.
TruncatedSeries series_product(const std::vector<TruncatedSeries>& factors);

/// Numeric counterpart used for large diamonds and as a test oracle.
using NumericSeries = std::vector<Integer>;

/// (1 - j t)^e mod t^N for an integer exponent.
NumericSeries numeric_binomial_power(int j, const Integer& e, int order);
NumericSeries numeric_product(const NumericSeries& a, const NumericSeries& b);

}  // namespace hodge

#endif  // HODGE_BOUNDS_SERIES_HPP
