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


#include "hodge_bounds/reproduce.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hodge_bounds/error.hpp"

namespace hodge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "MATCH";
    case Verdict::Erratum:
      return "ERRATUM";
    case Verdict::Mismatch:
      return "MISMATCH";
  }
  return "?";
}

const std::vector<Fixture>& published_fixtures() {
  using F = PublishedForm;
  static const std::vector<Fixture> rows = {
      // first-order coefficient bounds
      {"dim3.first.h02", "first-order", 3, false, "delta[p=0].c_1", F{"", "h02", "2*q - 3", ""}, {}, ""},
      {"dim3.first.h11", "first-order", 3, false, "delta[p=1].c_1", F{"", "h11", "2*q", ""}, {}, ""},
      {"dim4.first.h12-h11", "first-order", 4, false, "delta[p=1].c_1", F{"", "h12", "2*h11 - 3*q", ""}, {}, ""},
      {"dim4.first.h12-h02", "first-order", 4, false, "delta[p=2].c_1", F{"", "h12", "2*h02", ""}, {}, ""},
      {"dim4.first.h03", "first-order", 4, false, "delta[p=0].c_1", F{"", "h03", "2*h02 - 3*q + 4", ""}, {}, ""},
      {"dim5.first.h04", "first-order", 5, false, "delta[p=0].c_1", F{"", "h04", "4*q - 3*h02 + 2*h03 - 5", ""}, {},
       ""},
      {"dim5.first.h14", "first-order", 5, false, "delta[p=1].c_1", F{"", "h14", "4*h11 - 3*h12 + 2*h13", ""},
       F{"", "h13", "4*q - 3*h11 + 2*h12", ""}, "printed form shifts the second index of every term up by one"},
      {"dim5.first.h22", "first-order", 5, false, "delta[p=2].c_1", F{"", "h22", "2*h12 - 3*h02", ""}, {}, ""},
      // second-order closed forms
      {"dim3.root.h02", "closed-form", 3, true, "delta[p=0].c_2", F{"h02", "2*q - 7/2", "1/2", "8*q - 23"}, {}, ""},
      {"dim3.root.h11", "closed-form", 3, true, "delta[p=1].c_2", F{"h11", "2*q - 1/2", "1/2", "8*q + 1"}, {}, ""},
      {"dim4.root.h03", "closed-form", 4, true, "delta[p=0].c_2",
       F{"h03", "2*h02 - 3*q + 7/2", "1/2", "8*h02 - 24*q + 49"}, {}, ""},
      {"dim4.root.h12-h11", "closed-form", 4, true, "delta[p=1].c_2", F{"h12", "2*h11 - 3*q", "1", "4*h11 - 9*q"},
       F{"h12", "2*h11 - 3*q - 1/2", "1/2", "8*h11 - 24*q + 1"},
       "printed form is not a root of the second coefficient; the derived radicand is 8h11 - 24q + 1"},
      {"dim4.root.h12-h02", "closed-form", 4, true, "delta[p=2].c_2", F{"h12", "2*h02 - 1/2", "1/2", "8*h02 + 1"}, {},
       ""},
      {"dim5.root.h04", "closed-form", 5, true, "delta[p=0].c_2",
       F{"h04", "4*q - 3*h02 + 2*h03 - 11/2", "1/2", "48*q - 24*h02 + 8*h03 - 79"}, {}, ""},
      {"dim5.root.h14", "closed-form", 5, true, "delta[p=1].c_2",
       F{"h14", "2*h13 + 4*h11 - 3*h12 - 1/2", "1/2", "48*h11 - 24*h12 + 8*h13 + 1"},
       F{"h13", "2*h12 - 3*h11 + 4*q - 1/2", "1/2", "8*h12 - 24*h11 + 48*q + 1"},
       "same index shift as the first-order h14 row"},
      {"dim5.root.h22", "closed-form", 5, true, "delta[p=2].c_2",
       F{"h22", "2*h12 - 3*h02 - 1/2", "1/2", "8*h12 - 24*h02 + 1"}, {}, ""},
      // rank and surjection bounds
      {"dim3.rank.canonical", "rank", 3, false, "rank[cokernel p=0]", F{"", "h03 - h02 + q - 1", "q - 3", ""}, {},
       "left side is chi(omega_X)"},
      {"dim3.rank.h11", "rank", 3, false, "surjection[left p=1]", F{"", "h11", "2*q - 1", ""}, {}, ""},
      {"dim3.rank.h12-h11", "rank", 3, false, "rank[cokernel p=1]", F{"", "h12", "h11 - 2", ""}, {}, ""},
      {"dim3.rank.h12-h02", "rank", 3, false, "rank[cokernel p=2]", F{"", "h12", "h02 + q - 1", ""}, {}, ""},
      {"dim4.rank.canonical", "rank", 4, false, "rank[cokernel p=0]", F{"", "h04 - h03 + h02 - q + 1", "q - 4", ""},
       {}, "left side is chi(omega_X)"},
      {"dim4.rank.h22", "rank", 4, false, "rank[cokernel p=2]", F{"", "h22", "h12 - h02 + q - 2", ""}, {}, ""},
      {"dim4.rank.h13-h12", "rank", 4, false, "rank[cokernel p=1]", F{"", "h13", "h12 - h11 + 2*q - 3", ""}, {}, ""},
      {"dim4.rank.h11", "rank", 4, false, "surjection[left p=1]", F{"", "h11", "2*q - 1", ""}, {}, ""},
      {"dim4.rank.h12", "rank", 4, false, "surjection[left p=2]", F{"", "h12", "h20 + q - 1", ""}, {}, ""},
      {"dim4.rank.h13-h03", "rank", 4, false, "rank[cokernel p=3]", F{"", "h13", "h03 + q - 1", ""}, {}, ""},
      {"dim5.rank.canonical", "rank", 5, false, "rank[cokernel p=0]",
       F{"", "h05 - h04 + h03 - h02 + q - 1", "q - 5", ""}, {}, "left side is chi(omega_X)"},
      {"dim5.rank.h14-h13", "rank", 5, false, "rank[cokernel p=1]", F{"", "h14", "h13 - h12 + h11 - 4", ""}, {}, ""},
      {"dim5.rank.h11", "rank", 5, false, "surjection[left p=1]", F{"", "h11", "2*q - 1", ""}, {}, ""},
      {"dim5.rank.h22", "rank", 5, false, "rank[cokernel p=2]", F{"", "2*h12", "h22 + h02 + q - 3", ""},
       F{"", "h23 + h12", "h22 + h02 + q - 3", ""}, "printed form writes h12 where h23 belongs"},
      {"dim5.rank.h12", "rank", 5, false, "surjection[left p=2]", F{"", "h12", "h02 + q - 1", ""}, {}, ""},
      {"dim5.rank.h13-h03", "rank", 5, false, "rank[cokernel p=3]", F{"", "h12", "h13 - h03 + q - 2", ""},
       F{"", "h23", "h13 - h03 + q - 2", ""}, "printed form writes h12 where h23 belongs"},
      {"dim5.rank.h13", "rank", 5, false, "surjection[left p=3]", F{"", "h13", "h03 + q - 1", ""}, {}, ""},
      {"dim5.rank.h14", "rank", 5, false, "rank[cokernel p=4]", F{"", "h14", "h04 + q - 1", ""}, {}, ""},
  };
  return rows;
}

namespace {

MultiPoly canonical_poly(std::string_view text, int d) {
  return parse_poly(text).rename([d](HodgeVar v) { return canonical_var(v, d); });
}

HodgeVar parse_target(const std::string& name, int d) {
  auto v = parse_hodge_var(name);
  if (!v) fail(ErrorCode::Parse, "bad target " + name);
  return canonical_var(*v, d);
}

std::string linear_text(const PublishedForm& f) { return f.lhs + " >= " + f.rhs; }

BoundExpr root_of(const PublishedForm& f, int d) {
  BoundExpr b{parse_target(f.target, d), canonical_poly(f.lhs, d), parse_rational(f.rhs), canonical_poly(f.rad, d)};
  return b;
}

std::optional<BoundExpr> try_solve(const Constraint& c, HodgeVar target) {
  try {
    return solve_quadratic_bound(c, target);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<ReproRow> reproduce_published() {
  std::map<int, Catalog> catalogs;
  std::vector<ReproRow> out;
  for (const auto& fx : published_fixtures()) {
    if (!catalogs.count(fx.d)) {
      ManifoldProfile pf{fx.d, 4 * fx.d, ZeroLocusInvariant::finite(fx.d), std::nullopt};
      CatalogOptions opts = second_order_options();
      opts.rank_floors = false;
      catalogs.emplace(fx.d, generate_catalog(pf, opts));
    }
    const Catalog& cat = catalogs.at(fx.d);
    const Constraint* source = nullptr;
    for (const auto& c : cat.constraints)
      if (c.relation == Relation::NonNeg &&
          std::find(c.provenance.begin(), c.provenance.end(), fx.source) != c.provenance.end())
        source = &c;
    ReproRow row{fx.id, fx.group, fx.d, "", "(no constraint tagged " + fx.source + ")", Verdict::Mismatch, fx.note};
    if (fx.root) {
      BoundExpr printed = root_of(fx.printed, fx.d);
      row.printed = to_string(printed);
      if (source) {
        auto derived = try_solve(*source, printed.target);
        if (fx.corrected && !(derived && *derived == printed)) {
          BoundExpr fixed = root_of(*fx.corrected, fx.d);
          derived = try_solve(*source, fixed.target);
          if (derived) row.verdict = *derived == fixed ? Verdict::Erratum : Verdict::Mismatch;
        } else if (derived) {
          row.verdict = *derived == printed ? Verdict::Match : Verdict::Mismatch;
        }
        row.derived = derived ? to_string(*derived) : "(not quadratic in " + printed.target.name() + ")";
      }
    } else {
      row.printed = linear_text(fx.printed);
      auto normal = [&](const PublishedForm& f) {
        return (canonical_poly(f.lhs, fx.d) - canonical_poly(f.rhs, fx.d)).primitive_part();
      };
      if (source) {
        row.derived = source->expr.to_string() + " >= 0";
        if (source->expr == normal(fx.printed))
          row.verdict = Verdict::Match;
        else if (fx.corrected && source->expr == normal(*fx.corrected))
          row.verdict = Verdict::Erratum;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_reproduce_tsv(const std::vector<ReproRow>& rows) {
  std::ostringstream out;
  out << "id\tgroup\td\tverdict\tprinted\tderived\tnote\n";
  for (const auto& r : rows)
    out << r.id << '\t' << r.group << '\t' << r.d << '\t' << to_string(r.verdict) << '\t' << r.printed << '\t'
        << r.derived << '\t' << r.note << '\n';
  return out.str();
}

std::string render_reproduce_json(const std::vector<ReproRow>& rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows)
    list.push_back({{"id", r.id},
                    {"group", r.group},
                    {"d", r.d},
                    {"verdict", to_string(r.verdict)},
                    {"printed", r.printed},
                    {"derived", r.derived},
                    {"note", r.note}});
  return list.dump(2);
}

}  // namespace hodge
