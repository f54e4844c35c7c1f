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

#include <json.hpp>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"

namespace hodge {

std::string to_string(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::Satisfied:
      return "satisfied";
    case ConstraintStatus::Violated:
      return "violated";
    case ConstraintStatus::Inactive:
      return "inactive";
  }
  return "?";
}

FeasibilityReport check_diamond(const HodgeDiamond& dm, const ManifoldProfile& pf,
                                const std::vector<Constraint>& constraints) {
  validate_profile(pf);
  if (dm.dimension() != pf.d) fail(ErrorCode::InvalidArgument, "diamond dimension does not match profile");
  Assignment at = dm.assignment();
  at[HodgeVar::irregularity()] = pf.q;
  FeasibilityReport report;
  for (const auto& c : constraints) {
    ConstraintResult r;
    r.provenance = c.provenance;
    r.expr = c.to_string();
    bool active = c.hypotheses_hold(pf);
    if (active && c.condition) active = c.condition->rank.evaluate(at) < c.condition->index;
    if (active) {
      Rational value = c.expr.evaluate(at);
      if (c.relation == Relation::NonNeg) {
        r.margin = value;
        r.status = value >= 0 ? ConstraintStatus::Satisfied : ConstraintStatus::Violated;
      } else {
        r.margin = -abs(value);
        r.status = value == 0 ? ConstraintStatus::Satisfied : ConstraintStatus::Violated;
      }
      if (r.status == ConstraintStatus::Violated) report.feasible = false;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

FeasibilityReport check_diamond(const HodgeDiamond& dm, const Catalog& catalog) {
  FeasibilityReport report = check_diamond(dm, catalog.profile, catalog.constraints);
  report.order_cap = catalog.order_cap;
  report.schur_cap = catalog.schur_cap;
  return report;
}

std::string render_report_json(const FeasibilityReport& report) {
  nlohmann::json doc;
  doc["verdict"] = report.feasible ? "FEASIBLE" : "INFEASIBLE";
  doc["order_cap"] = report.order_cap;
  doc["schur_cap"] = report.schur_cap;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json j;
    j["provenance"] = r.provenance;
    j["status"] = to_string(r.status);
    j["margin"] = to_string(r.margin);
    list.push_back(std::move(j));
  }
  doc["constraints"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string render_report_text(const FeasibilityReport& report) {
  std::size_t satisfied = 0;
  std::size_t inactive = 0;
  std::string violated;
  for (const auto& r : report.results) {
    if (r.status == ConstraintStatus::Satisfied) ++satisfied;
    if (r.status == ConstraintStatus::Inactive) ++inactive;
    if (r.status != ConstraintStatus::Violated) continue;
    std::string tags;
    for (const auto& t : r.provenance) tags += (tags.empty() ? "" : ",") + t;
    violated += "violated\t" + tags + "\tmargin " + to_string(r.margin) + "\t" + r.expr + "\n";
  }
  std::string out = std::string(report.feasible ? "FEASIBLE" : "INFEASIBLE") + "\n" + violated;
  out += "# " + std::to_string(report.results.size()) + " constraints: " + std::to_string(satisfied) +
         " satisfied, " + std::to_string(inactive) + " inactive, order_cap=" + std::to_string(report.order_cap) +
         " schur_cap=" + std::to_string(report.schur_cap) + "\n";
  return out;
}

}  // namespace hodge
