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

#include "hodge_bounds/constraint.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hodge_bounds/error.hpp"

namespace hodge {

std::string to_string(Relation r) { return r == Relation::NonNeg ? "NONNEG" : "ZERO"; }

Relation parse_relation(std::string_view text) {
  if (text == "NONNEG") return Relation::NonNeg;
  if (text == "ZERO") return Relation::Zero;
  fail(ErrorCode::Parse, "unknown relation '" + std::string(text) + "'");
}

bool Hypothesis::holds(const ManifoldProfile& pf) const {
  switch (kind) {
    case Kind::QGreater:
      return pf.q > value;
    case Kind::QAtLeast:
      return pf.q >= value;
    case Kind::QEquals:
      return pf.q == value;
    case Kind::DAtLeast:
      return pf.d >= value;
    case Kind::MEqualsD:
      return !pf.m.is_infinite() && pf.m.value() == pf.d;
    case Kind::MInfinite:
      return pf.m.is_infinite();
  }
  return false;
}

std::string Hypothesis::to_string() const {
  switch (kind) {
    case Kind::QGreater:
      return "q > " + std::to_string(value);
    case Kind::QAtLeast:
      return "q >= " + std::to_string(value);
    case Kind::QEquals:
      return "q = " + std::to_string(value);
    case Kind::DAtLeast:
      return "d >= " + std::to_string(value);
    case Kind::MEqualsD:
      return "m = d";
    case Kind::MInfinite:
      return "m = inf";
  }
  return "?";
}

Hypothesis parse_hypothesis(std::string_view text) {
  std::string s(text);
  if (s == "m = d") return {Hypothesis::Kind::MEqualsD, 0};
  if (s == "m = inf") return {Hypothesis::Kind::MInfinite, 0};
  struct Form {
    const char* prefix;
    Hypothesis::Kind kind;
  };
  static const Form forms[] = {{"q >= ", Hypothesis::Kind::QAtLeast},
                               {"q > ", Hypothesis::Kind::QGreater},
                               {"q = ", Hypothesis::Kind::QEquals},
                               {"d >= ", Hypothesis::Kind::DAtLeast}};
  for (const auto& f : forms) {
    std::string_view prefix(f.prefix);
    if (s.rfind(prefix, 0) != 0) continue;
    try {
      std::size_t used = 0;
      std::string rest = s.substr(prefix.size());
      int v = std::stoi(rest, &used);
      if (used == rest.size()) return {f.kind, v};
    } catch (const std::exception&) {
    }
    break;
  }
  fail(ErrorCode::Parse, "unknown hypothesis '" + s + "'");
}

bool Constraint::hypotheses_hold(const ManifoldProfile& pf) const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [&](const Hypothesis& h) { return h.holds(pf); });
}

std::string Constraint::to_string() const {
  std::string out = expr.to_string() + (relation == Relation::NonNeg ? " >= 0" : " = 0");
  if (condition) out += " if " + condition->rank.to_string() + " < " + std::to_string(condition->index);
  if (!hypotheses.empty()) {
    out += " [";
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
      if (i > 0) out += ", ";
      out += hypotheses[i].to_string();
    }
    out += "]";
  }
  return out;
}

std::optional<Constraint> make_constraint(MultiPoly expr, Relation relation, std::vector<Hypothesis> hypotheses,
                                          std::string provenance, int p, std::optional<HodgeVar> lead,
                                          std::optional<Condition> condition) {
  if (expr.is_zero()) return std::nullopt;
  expr = expr.primitive_part();
  if (relation == Relation::Zero && expr.terms().begin()->second < 0) expr = -expr;
  std::sort(hypotheses.begin(), hypotheses.end());
  hypotheses.erase(std::unique(hypotheses.begin(), hypotheses.end()), hypotheses.end());
  Constraint c;
  c.expr = std::move(expr);
  c.relation = relation;
  c.hypotheses = std::move(hypotheses);
  c.provenance.push_back(std::move(provenance));
  c.p = p;
  c.lead = lead;
  c.condition = std::move(condition);
  return c;
}

namespace {

struct DedupKeyLess {
  bool operator()(const Constraint& a, const Constraint& b) const {
    PolyLess less;
    if (less(a.expr, b.expr)) return true;
    if (less(b.expr, a.expr)) return false;
    if (a.relation != b.relation) return a.relation < b.relation;
    if (a.condition.has_value() != b.condition.has_value()) return !a.condition.has_value();
    if (a.condition) {
      if (a.condition->index != b.condition->index) return a.condition->index < b.condition->index;
      if (less(a.condition->rank, b.condition->rank)) return true;
      if (less(b.condition->rank, a.condition->rank)) return false;
    }
    return a.hypotheses < b.hypotheses;
  }
};

}  // namespace

std::vector<Constraint> deduplicate(std::vector<Constraint> constraints) {
  std::map<Constraint, std::size_t, DedupKeyLess> seen;
  std::vector<Constraint> out;
  for (auto& c : constraints) {
    auto it = seen.find(c);
    if (it == seen.end()) {
      seen.emplace(c, out.size());
      out.push_back(std::move(c));
      continue;
    }
    Constraint& kept = out[it->second];
    for (auto& tag : c.provenance)
      if (std::find(kept.provenance.begin(), kept.provenance.end(), tag) == kept.provenance.end())
        kept.provenance.push_back(std::move(tag));
    kept.p = std::min(kept.p, c.p);
    if (!kept.lead) kept.lead = c.lead;
  }
  for (auto& c : out) std::sort(c.provenance.begin(), c.provenance.end());
  std::stable_sort(out.begin(), out.end(), [](const Constraint& a, const Constraint& b) {
    if (a.provenance != b.provenance) return a.provenance < b.provenance;
    return PolyLess()(a.expr, b.expr);
  });
  return out;
}

}  // namespace hodge
