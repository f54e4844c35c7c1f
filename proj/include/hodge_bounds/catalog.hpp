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

#ifndef HODGE_BOUNDS_CATALOG_HPP
#define HODGE_BOUNDS_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hodge_bounds/constraint.hpp"
#include "hodge_bounds/derivative_complex.hpp"
#include "hodge_bounds/schur.hpp"

namespace hodge {

inline constexpr int kDefaultCap = 12;

struct CatalogOptions {
  /// Highest coefficient index emitted; clipped to q-1. Unset means
  /// min(q-1, 12).
  std::optional<int> order_cap;
  /// Highest Schur weight emitted; clipped to q-1. Unset means min(q-1, 12).
  std::optional<int> schur_cap;
  /// Restrict to one form degree.
  std::optional<int> only_p;
  /// Emit the rank lower bounds implied by the vanishing clauses.
  bool rank_floors = true;
};

struct Catalog {
  ManifoldProfile profile;
  int order_cap = 0;
  int schur_cap = 0;
  std::vector<Constraint> constraints;
};

/// Coefficient, Schur and vanishing-clause constraints of one series.
/// Coefficients c_1..c_order and Schur polynomials of weight <= schur_cap,
/// both clipped to q-1, are emitted.
std::vector<Constraint> extract_positivity_constraints(const ChernSeries& cs, const ManifoldProfile& pf, int order_cap,
                                                       int schur_cap);

/// Rank lower bounds and the surjection bound for both windows of p.
std::vector<Constraint> extract_rank_constraints(const ManifoldProfile& pf, int p);

/// Signed Euler characteristic bounds under m = d.
std::vector<Constraint> extract_euler_constraints(const ManifoldProfile& pf);

/// Exterior-power injectivity bounds, the h^{0,2} linear bound and the
/// canonical Euler characteristic bound under m = d.
std::vector<Constraint> extract_md_extras(const ManifoldProfile& pf);

/// Least rank allowed by the vanishing clause when the series coefficients
/// depend on q alone: max{ i < q : c_i != 0 }, or 0 if no such index.
/// Returns nullopt when the series involves other Hodge numbers.
std::optional<int> vanishing_rank_floor(SeriesKind kind, const ManifoldProfile& pf, int p);

/// Symbolic rank floor r*(q) = q + offset, fitted on q in [first_q, last_q]
/// and verified there. Emitted as rank - q - offset >= 0 under q >= first_q.
struct RankFloorFit {
  int offset = 0;
  int first_q = 0;
};
std::optional<RankFloorFit> fit_rank_floor(SeriesKind kind, int d, const ZeroLocusInvariant& m, int p,
                                           int last_q = 40);

/// Rank-floor constraints for every non-vacuous window with q-only series.
std::vector<Constraint> extract_rank_floor_constraints(const ManifoldProfile& pf, std::optional<int> only_p);

Catalog generate_catalog(const ManifoldProfile& pf, const CatalogOptions& options = {});

/// Smallest catalog carrying the first- and second-order coefficient
/// constraints and nothing from Schur weights above 2.
CatalogOptions second_order_options();

std::string render_catalog_json(const Catalog& catalog);
std::string render_catalog_text(const Catalog& catalog);
std::string render_catalog_latex(const Catalog& catalog);
Catalog parse_catalog_json(std::string_view text);

/// LaTeX for one constraint; solved for its lead variable when it occurs
/// linearly.
std::string constraint_latex(const Constraint& c);

}  // namespace hodge

#endif  // HODGE_BOUNDS_CATALOG_HPP
