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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"

namespace hodge {

std::string AsymptoticForm::to_string() const {
  std::string lin = std::to_string(a) + "*q";
  if (b == 0) return lin;
  std::string root = (b == 1 ? std::string() : std::to_string(b) + "*") + "sqrt(2*q)";
  if (a == 0) return root;
  return lin + " + " + root;
}

std::optional<AsymptoticForm> stated_asymptotic(int d, HodgeVar target) {
  struct Row {
    int d, p, j;
    long a, b;
  };
  static const Row rows[] = {
      {3, 0, 2, 4, 0}, {3, 0, 3, 4, 0}, {3, 1, 1, 2, 1}, {3, 1, 2, 5, 1},
      {4, 0, 2, 4, 0}, {4, 0, 3, 5, 1}, {4, 0, 4, 4, 0}, {4, 1, 1, 2, 0},
      {4, 1, 2, 8, 2}, {4, 1, 3, 12, 3}, {4, 2, 2, 8, 4},
  };
  if (target.p < 0 || target.j < 0 || target.p > d || target.j > d) return std::nullopt;
  HodgeVar v = canonical_var(target, d);
  for (const auto& r : rows)
    if (r.d == d && r.p == v.p && r.j == v.j) return AsymptoticForm{r.a, r.b};
  return std::nullopt;
}

bool within_tolerance(const Integer& minimum, int q, const AsymptoticForm& form, long tolerance) {
  if (form.b < 0 || tolerance < 0) fail(ErrorCode::InvalidArgument, "tolerance and root coefficient must be >= 0");
  Rational base = Rational(minimum) - Rational(Integer(form.a) * q);
  Rational two_q(2 * q);
  Rational b(form.b);
  // base - tol <= b sqrt(2q) <= base + tol
  return compare_with_root(base - tolerance, b, two_q) <= 0 && compare_with_root(base + tolerance, b, two_q) >= 0;
}

std::vector<AsymptoticRow> asymptotic_check(int d, const ZeroLocusInvariant& m, HodgeVar target,
                                            const std::vector<int>& q_values, const CatalogOptions& options,
                                            const MinimizeOptions& min_options) {
  std::vector<AsymptoticRow> rows;
  for (int q : q_values)
    if (q <= d) fail(ErrorCode::InvalidArgument, "asymptotic check needs q > d, got q = " + std::to_string(q));
  auto form = stated_asymptotic(d, target);
  for (int q : q_values) {
    ManifoldProfile pf{d, q, m, std::nullopt};
    Catalog catalog = generate_catalog(pf, options);
    MinimizeResult r = minimize_hodge_number(target, pf, catalog.constraints, {}, min_options);
    AsymptoticRow row;
    row.q = q;
    row.minimum = r.value;
    row.form = form;
    if (form) {
      row.form_value = static_cast<double>(form->a) * q + static_cast<double>(form->b) * std::sqrt(2.0 * q);
      row.difference = r.value.get_d() - row.form_value;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_asymptotic_tsv(HodgeVar target, const std::vector<AsymptoticRow>& rows) {
  std::ostringstream out;
  out << "target\tq\tminimum\tform\tform_value\tdifference\n";
  char buf[64];
  for (const auto& r : rows) {
    out << target.name() << '\t' << r.q << '\t' << to_string(r.minimum) << '\t';
    if (r.form) {
      out << r.form->to_string() << '\t';
      std::snprintf(buf, sizeof buf, "%.4f\t%.4f", r.form_value, r.difference);
      out << buf;
    } else {
      out << "-\t-\t-";
    }
    out << '\n';
  }
  return out.str();
}

int regularity_bound(int d, int p, int k, int f) {
  if (d < 1 || p < 0 || p > d) fail(ErrorCode::InvalidArgument, "need 0 <= p <= d and d >= 1");
  if (k < 0 || k > f || f > d) fail(ErrorCode::InvalidArgument, "need 0 <= k <= f <= d");
  int l = std::max(k, f - 1);
  if (p <= l)
    fail(ErrorCode::Inapplicable, "theorem inapplicable: p = " + std::to_string(p) + " <= l = " + std::to_string(l));
  return d - p + l;
}

}  // namespace hodge
