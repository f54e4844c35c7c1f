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

#ifndef HODGE_BOUNDS_ANALYSIS_HPP
#define HODGE_BOUNDS_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodge_bounds/catalog.hpp"

namespace hodge {

// ---------------------------------------------------------------- checking

enum class ConstraintStatus { Satisfied, Violated, Inactive };

std::string to_string(ConstraintStatus s);

struct ConstraintResult {
  std::vector<std::string> provenance;
  std::string expr;
  ConstraintStatus status = ConstraintStatus::Inactive;
  /// Value of expr for NONNEG; -|value| for ZERO. Zero when inactive.
  Rational margin;
};

struct FeasibilityReport {
  std::vector<ConstraintResult> results;
  bool feasible = true;
  int order_cap = 0;
  int schur_cap = 0;
};

/// A constraint is active when its hypotheses hold for pf and, for a
/// vanishing clause, its rank is below the index. Throws Unassigned when
/// dm leaves a needed entry free.
FeasibilityReport check_diamond(const HodgeDiamond& dm, const ManifoldProfile& pf,
                                const std::vector<Constraint>& constraints);
FeasibilityReport check_diamond(const HodgeDiamond& dm, const Catalog& catalog);

std::string render_report_json(const FeasibilityReport& report);
std::string render_report_text(const FeasibilityReport& report);

// ---------------------------------------------------------- closed forms

/// target >= lin + coef * sqrt(rad), valid while rad >= 0. coef = 0 and
/// rad = 0 for a linear bound. rad is a primitive integer polynomial times
/// a square-free integer.
struct BoundExpr {
  HodgeVar target;
  MultiPoly lin;
  Rational coef;
  MultiPoly rad;

  friend bool operator==(const BoundExpr&, const BoundExpr&) = default;
};

BoundExpr solve_quadratic_bound(const Constraint& c, HodgeVar target);

/// "h11 >= 2*q - 1/2 + 1/2*sqrt(8*q + 1)".
std::string to_string(const BoundExpr& b);
std::string to_latex(const BoundExpr& b);
std::string render_bound_json(const BoundExpr& b);

/// Exact ceil and floor of lin + coef*sqrt(rad) at an integer point.
/// Throws InvalidArgument when the radicand is negative there.
Integer bound_ceil(const BoundExpr& b, const Assignment& at);
Integer bound_floor(const BoundExpr& b, const Assignment& at);

/// Sign of x - c*sqrt(r) for c >= 0, r >= 0.
int compare_with_root(const Rational& x, const Rational& c, const Rational& r);

// ------------------------------------------------------------ minimizing

struct MinimizeOptions {
  /// Largest value any searched entry may take. Unset: the
  /// HODGE_BOUNDS_SEARCH_CEILING environment variable, else 10^7.
  std::optional<Integer> ceiling;
  /// Half-width of the verification box; negative picks 2 for at most six
  /// other entries and 1 otherwise.
  int radius = -1;
  bool verify = true;
};

struct MinimizeResult {
  HodgeVar target;
  Integer value;
  HodgeDiamond witness{1};
  /// Constraints violated by the witness with the target lowered by one.
  std::vector<std::vector<std::string>> binding;
};

Integer default_search_ceiling();

/// Least value of target over symmetric completions satisfying every active
/// constraint, with the other entries raised greedily to a least fixed
/// point; verified by a downward scan and a box sweep. fixed pins entries
/// (closed under symmetry).
MinimizeResult minimize_hodge_number(HodgeVar target, const ManifoldProfile& pf,
                                     const std::vector<Constraint>& constraints,
                                     const std::map<std::pair<int, int>, Integer>& fixed = {},
                                     const MinimizeOptions& options = {});

// ------------------------------------------------------------ asymptotics

/// a*q + b*sqrt(2q).
struct AsymptoticForm {
  long a = 0;
  long b = 0;
  std::string to_string() const;
};

/// The stated asymptotic lower bound for (d, target), if one exists.
std::optional<AsymptoticForm> stated_asymptotic(int d, HodgeVar target);

struct AsymptoticRow {
  int q = 0;
  Integer minimum;
  std::optional<AsymptoticForm> form;
  double form_value = 0;
  double difference = 0;
};

/// Minimizes target for each q with m fixed, using catalogs built with
/// the given options.
std::vector<AsymptoticRow> asymptotic_check(int d, const ZeroLocusInvariant& m, HodgeVar target,
                                            const std::vector<int>& q_values, const CatalogOptions& options = {},
                                            const MinimizeOptions& min_options = {});

/// |minimum - (a q + b sqrt(2q))| <= tolerance, decided exactly.
bool within_tolerance(const Integer& minimum, int q, const AsymptoticForm& form, long tolerance);

std::string render_asymptotic_tsv(HodgeVar target, const std::vector<AsymptoticRow>& rows);

// ------------------------------------------------------------ regularity

/// d - p + l with l = max{k, f-1}; throws Inapplicable when p <= l.
int regularity_bound(int d, int p, int k, int f);

}  // namespace hodge

#endif  // HODGE_BOUNDS_ANALYSIS_HPP
