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

#ifndef HODGE_BOUNDS_DERIVATIVE_COMPLEX_HPP
#define HODGE_BOUNDS_DERIVATIVE_COMPLEX_HPP

#include <string>
#include <vector>

#include "hodge_bounds/diamond.hpp"
#include "hodge_bounds/series.hpp"

namespace hodge {

/// 0 -> O(-d) (x) H^{p,0} -> O(-d+1) (x) H^{p,1} -> ... -> O (x) H^{p,d} -> 0
/// on P^{q-1}; term i has twist -d+i and dimension h^{p,i}.
struct ComplexTerm {
  int twist = 0;
  MultiPoly dimension;
};

struct ComplexModel {
  int p = 0;
  std::vector<ComplexTerm> terms;
};

ComplexModel complex_model(int d, int p, SymbolMode mode = SymbolMode::Canonical);

struct ExactnessWindow {
  int left_exact_steps = 0;
  int right_exact_steps = 0;
  bool fully_exact = false;
};

/// Exactness from m(X) and, when present, from the Albanese fibers; the
/// deeper of the applicable clauses wins. A fully exact complex reports d+1
/// steps on both sides.
ExactnessWindow exactness_window(const ManifoldProfile& pf, int p);

enum class SeriesKind { Gamma, Delta, Epsilon };

std::string to_string(SeriesKind kind);

struct ChernSeries {
  SeriesKind kind = SeriesKind::Delta;
  int p = 0;
  TruncatedSeries series = TruncatedSeries::one(1);
  /// Rank of the associated sheaf as a partial Euler characteristic.
  MultiPoly rank;
  /// Window of length zero: the series is 1 and carries no constraints.
  bool vacuous = false;
  /// Index of the first factor's Hodge symbol, (p, j), the variable the
  /// j = 1 factor is raised to.
  HodgeVar lead_pair{0, 0};
};

/// gamma: prod_{j=1}^{m-d+p} (1-jt)^{(-1)^j h^{p,2d-m-p+j}}, needs d-p <= m <= d.
ChernSeries gamma_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode = SymbolMode::Canonical);
/// delta: prod_{j=1}^{m-p} (1-jt)^{(-1)^j h^{p,m-p-j}}, needs p <= m <= d.
ChernSeries delta_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode = SymbolMode::Canonical);
/// epsilon: prod_{j=1}^{d} (1-jt)^{(-1)^j h^{p,d-j}}, needs m = inf.
ChernSeries epsilon_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode = SymbolMode::Canonical);

/// Numeric series for a complete diamond, computed with integer arithmetic.
ChernSeries numeric_series(SeriesKind kind, const ManifoldProfile& pf, const HodgeDiamond& dm, int p, int order);

enum class EulerKind {
  Geq,  // chi^{>= 2d-m-p}
  Leq,  // chi^{<= m-p}
};

/// Alternating sum over the window of the matching series kind.
MultiPoly partial_euler(const ManifoldProfile& pf, int p, EulerKind kind, SymbolMode mode = SymbolMode::Canonical);
Rational partial_euler(const HodgeDiamond& dm, const ManifoldProfile& pf, int p, EulerKind kind);

/// Full Euler characteristic sum_j (-1)^j h^{p,j}.
MultiPoly euler_characteristic(int d, int p, SymbolMode mode = SymbolMode::Canonical);

}  // namespace hodge

#endif  // HODGE_BOUNDS_DERIVATIVE_COMPLEX_HPP
