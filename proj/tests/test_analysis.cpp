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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <json.hpp>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"
#include "hodge_bounds/reproduce.hpp"

using namespace hodge;

namespace {

ManifoldProfile md(int d, int q) { return ManifoldProfile{d, q, ZeroLocusInvariant::finite(d), std::nullopt}; }

HodgeVar var(const std::string& name) { return parse_hodge_var(name).value(); }

const Constraint& by_tag(const Catalog& c, const std::string& tag) {
  for (const auto& k : c.constraints)
    if (std::find(k.provenance.begin(), k.provenance.end(), tag) != k.provenance.end()) return k;
  throw std::runtime_error("no constraint tagged " + tag);
}

bool mentions(const std::vector<std::string>& provenance, const std::string& fragment) {
  for (const auto& p : provenance)
    if (p.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("surface diamond below the floor is infeasible") {
  ManifoldProfile pf = md(2, 5);
  Catalog c = generate_catalog(pf);
  HodgeDiamond dm = partial_diamond(2, {{{0, 1}, 5}, {{0, 2}, 6}, {{1, 1}, 30}});
  FeasibilityReport r = check_diamond(dm, c);
  CHECK_FALSE(r.feasible);
  bool found = false;
  for (const auto& res : r.results)
    if (mentions(res.provenance, "rank-floor[delta[p=0]]")) {
      CHECK(res.status == ConstraintStatus::Violated);
      CHECK(res.margin == Rational(-1));
      found = true;
    }
  CHECK(found);

  dm.set(0, 2, 7);
  dm.set(2, 0, 7);
  CHECK(check_diamond(dm, c).feasible);
}

TEST_CASE("hypotheses that fail leave constraints inactive") {
  ManifoldProfile pf = md(3, 3);
  Catalog c = generate_catalog(pf);
  FeasibilityReport r = check_diamond(abelian_diamond(3), c);
  bool seen = false;
  for (const auto& res : r.results)
    if (mentions(res.provenance, "euler[p=1]")) {
      CHECK(res.status == ConstraintStatus::Inactive);
      CHECK(res.margin == 0);
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("checking needs every referenced entry") {
  Catalog c = generate_catalog(md(3, 4));
  HodgeDiamond dm = partial_diamond(3, {{{0, 1}, 4}});
  try {
    check_diamond(dm, c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unassigned);
  }
}

TEST_CASE("report rendering") {
  Catalog c = generate_catalog(ManifoldProfile{3, 3, ZeroLocusInvariant::infinity(), std::nullopt});
  FeasibilityReport r = check_diamond(abelian_diamond(3), c);
  CHECK(r.feasible);
  auto j = nlohmann::json::parse(render_report_json(r));
  CHECK(j["verdict"] == "FEASIBLE");
  CHECK(j["constraints"].size() == r.results.size());
  CHECK(render_report_text(r).find("FEASIBLE") != std::string::npos);
}

TEST_CASE("closed forms from second coefficients") {
  Catalog three = generate_catalog(md(3, 30), second_order_options());
  CHECK(to_string(solve_quadratic_bound(by_tag(three, "delta[p=1].c_2"), var("h11"))) ==
        "h11 >= 2*q - 1/2 + 1/2*sqrt(8*q + 1)");
  CHECK(to_string(solve_quadratic_bound(by_tag(three, "delta[p=0].c_2"), var("h02"))) ==
        "h02 >= 2*q - 7/2 + 1/2*sqrt(8*q - 23)");
  Catalog four = generate_catalog(md(4, 30), second_order_options());
  CHECK(to_string(solve_quadratic_bound(by_tag(four, "delta[p=2].c_2"), var("h12"))) ==
        "h12 >= 2*h02 - 1/2 + 1/2*sqrt(8*h02 + 1)");
  BoundExpr b = solve_quadratic_bound(by_tag(three, "delta[p=1].c_2"), var("h11"));
  CHECK(to_latex(b) == "h^{1,1} \\geq 2q - \\tfrac{1}{2} + \\tfrac{1}{2}\\sqrt{8q + 1}");
  CHECK(render_bound_json(b) == R"({"coef":"1/2","lin":"2*q - 1/2","rad":"8*q + 1","target":"h11"})");
}

TEST_CASE("linear constraints give linear bounds") {
  Catalog three = generate_catalog(md(3, 30), second_order_options());
  BoundExpr b = solve_quadratic_bound(by_tag(three, "delta[p=1].c_1"), var("h11"));
  CHECK(b.coef == 0);
  CHECK(b.rad.is_zero());
  CHECK(to_string(b) == "h11 >= 2*q");
}

TEST_CASE("solver rejects what has no lower-bound form") {
  auto neg = make_constraint(parse_poly("q - h11^2"), Relation::NonNeg, {}, "neg", 1);
  auto cubic = make_constraint(parse_poly("h11^3 - q"), Relation::NonNeg, {}, "cubic", 1);
  auto mixed = make_constraint(parse_poly("q*h11^2 - 1"), Relation::NonNeg, {}, "mixed", 1);
  auto zero = make_constraint(parse_poly("h11 - q"), Relation::Zero, {}, "zero", 1);
  for (const auto* c : {&*neg, &*cubic, &*mixed, &*zero}) {
    try {
      solve_quadratic_bound(*c, var("h11"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotQuadratic);
    }
  }
}

TEST_CASE("ceil and floor are exact") {
  Catalog three = generate_catalog(md(3, 30), second_order_options());
  BoundExpr b = solve_quadratic_bound(by_tag(three, "delta[p=1].c_2"), var("h11"));
  CHECK(bound_ceil(b, {{var("q"), 20}}) == 46);
  CHECK(bound_floor(b, {{var("q"), 20}}) == 45);
  // 8q + 1 = 81 at q = 10: exactly 19.5 + 4.5
  CHECK(bound_ceil(b, {{var("q"), 10}}) == 24);
  CHECK(bound_floor(b, {{var("q"), 10}}) == 24);
  BoundExpr h02 = solve_quadratic_bound(by_tag(three, "delta[p=0].c_2"), var("h02"));
  CHECK_THROWS_AS(bound_ceil(h02, {{var("q"), 2}}), Error);
  CHECK(compare_with_root(Rational(3), Rational(1), Rational(9)) == 0);
  CHECK(compare_with_root(Rational(3), Rational(1), Rational(10)) < 0);
  CHECK(compare_with_root(Rational(-1), Rational(0), Rational(0)) < 0);
  CHECK(compare_with_root(Rational(7, 2), Rational(1, 2), Rational(48)) > 0);
}

TEST_CASE("quadratic solver soundness on random parameters") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> draw(0, 400);
  int checked = 0;
  for (int d = 3; d <= 5; ++d) {
    Catalog c = generate_catalog(md(d, 30), second_order_options());
    // p = d-1 has a single factor and the vacuous bound h >= 0
    for (int p = 0; p < d - 1; ++p) {
      std::string tag = "delta[p=" + std::to_string(p) + "].c_2";
      const Constraint& k = by_tag(c, tag);
      REQUIRE(k.lead.has_value());
      BoundExpr b = solve_quadratic_bound(k, *k.lead);
      int hits = 0;
      for (int attempt = 0; attempt < 5000 && hits < 50; ++attempt) {
        Assignment at;
        for (const auto& v : k.expr.variables())
          if (!(v == *k.lead)) at[v] = draw(rng);
        Rational rad = b.rad.evaluate(at);
        // below c^2 rad = 1 the two roots may share the same floor
        if (rad < 0 || b.coef * b.coef * rad <= 1) continue;
        ++hits;
        Assignment hi = at;
        hi[*k.lead] = bound_ceil(b, at);
        CHECK(k.expr.evaluate(hi) >= 0);
        Assignment lo = at;
        lo[*k.lead] = bound_floor(b, at) - 1;
        CHECK(k.expr.evaluate(lo) < 0);
      }
      CHECK(hits == 50);
      checked += hits;
    }
  }
  CHECK(checked == 50 * 9);
}

TEST_CASE("minimizer examples") {
  ManifoldProfile surface = md(2, 5);
  MinimizeResult s = minimize_hodge_number(var("h02"), surface, generate_catalog(surface).constraints);
  CHECK(s.value == 7);
  CHECK(s.witness.at(0, 2) == 7);
  CHECK(check_diamond(s.witness, surface, generate_catalog(surface).constraints).feasible);

  ManifoldProfile three = md(3, 20);
  Catalog second = generate_catalog(three, second_order_options());
  MinimizeResult t = minimize_hodge_number(var("h11"), three, second.constraints);
  CHECK(t.value == 46);
  CHECK(check_diamond(t.witness, three, second.constraints).feasible);
  CHECK(mentions(t.binding.front(), "delta[p=1].c_2"));

  ManifoldProfile curve = md(1, 4);
  MinimizeResult c = minimize_hodge_number(var("h11"), curve, generate_catalog(curve).constraints);
  CHECK(c.value == 1);
}

TEST_CASE("minimizer with pinned entries") {
  ManifoldProfile pf = md(2, 5);
  Catalog c = generate_catalog(pf);
  MinimizeResult r = minimize_hodge_number(var("h11"), pf, c.constraints, {{{0, 2}, 20}});
  CHECK(r.witness.at(0, 2) == 20);
  CHECK(check_diamond(r.witness, c).feasible);
  CHECK(r.value >= 9);
}

TEST_CASE("minimizer ceiling guard") {
  ManifoldProfile pf = md(3, 20);
  MinimizeOptions opts;
  opts.ceiling = Integer(30);
  try {
    minimize_hodge_number(var("h11"), pf, generate_catalog(pf, second_order_options()).constraints, {}, opts);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchLimit);
  }
}

TEST_CASE("minimizer agrees with the closed form when it binds") {
  for (int q : {10, 20, 50}) {
    ManifoldProfile pf = md(3, q);
    Catalog c = generate_catalog(pf, second_order_options());
    MinimizeResult r = minimize_hodge_number(var("h11"), pf, c.constraints);
    BoundExpr b = solve_quadratic_bound(by_tag(c, "delta[p=1].c_2"), var("h11"));
    Integer closed = bound_ceil(b, {{var("q"), q}});
    CHECK(check_diamond(r.witness, c).feasible);
    if (r.value == closed) {
      CHECK(mentions(r.binding.front(), "delta[p=1].c_2"));
    } else {
      CHECK(r.value > closed);
      bool other = false;
      for (const auto& tags : r.binding)
        if (!mentions(tags, "delta[p=1].c_2")) other = true;
      CHECK(other);
    }
  }
}

TEST_CASE("witnesses of the full catalog are feasible") {
  for (const char* t : {"h02", "h11", "h12", "h03"}) {
    ManifoldProfile pf = md(3, 12);
    Catalog c = generate_catalog(pf);
    MinimizeResult r = minimize_hodge_number(var(t), pf, c.constraints);
    CHECK(check_diamond(r.witness, c).feasible);
    CHECK_FALSE(r.binding.empty());
  }
}

TEST_CASE("asymptotic forms and tolerance") {
  CHECK(stated_asymptotic(3, var("h12"))->to_string() == "5*q + sqrt(2*q)");
  CHECK(stated_asymptotic(4, var("h13"))->to_string() == "12*q + 3*sqrt(2*q)");
  CHECK_FALSE(stated_asymptotic(5, var("h11")).has_value());
  AsymptoticForm f{5, 1};
  // 5*2000 + sqrt(4000) = 10063.245...
  CHECK(within_tolerance(Integer(10055), 2000, f, 20));
  CHECK(within_tolerance(Integer(10083), 2000, f, 20));
  CHECK_FALSE(within_tolerance(Integer(10084), 2000, f, 20));
  CHECK_FALSE(within_tolerance(Integer(10043), 2000, f, 20));
  AsymptoticForm lin{4, 0};
  CHECK(within_tolerance(Integer(3990), 1000, lin, 10));
  CHECK_FALSE(within_tolerance(Integer(3990), 1000, lin, 9));
}

TEST_CASE("asymptotic table") {
  auto rows = asymptotic_check(3, ZeroLocusInvariant::finite(3), var("h02"), {100, 1000}, second_order_options());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].minimum == 390);
  CHECK(rows[1].minimum == 3990);
  CHECK(rows[1].difference == doctest::Approx(-10.0));
  std::string tsv = render_asymptotic_tsv(var("h02"), rows);
  CHECK(tsv.rfind("target\tq\tminimum\tform\tform_value\tdifference\n", 0) == 0);
  CHECK(tsv.find("h02\t1000\t3990\t4*q\t4000.0000\t-10.0000") != std::string::npos);
  CHECK_THROWS_AS(asymptotic_check(3, ZeroLocusInvariant::finite(3), var("h02"), {3}), Error);
}

TEST_CASE("regularity") {
  CHECK(regularity_bound(3, 3, 0, 0) == 0);
  CHECK(regularity_bound(3, 2, 1, 1) == 2);
  try {
    regularity_bound(4, 1, 2, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inapplicable);
  }
  CHECK_THROWS_AS(regularity_bound(3, 4, 0, 0), Error);
  CHECK_THROWS_AS(regularity_bound(3, 1, 2, 1), Error);
  for (int d = 1; d <= 6; ++d)
    for (int f = 0; f <= d; ++f)
      for (int k = 0; k <= f; ++k) {
        int l = std::max(k, f - 1);
        for (int p = l + 1; p < d; ++p) CHECK(regularity_bound(d, p + 1, k, f) < regularity_bound(d, p, k, f));
      }
}

TEST_CASE("published forms are reproduced or flagged") {
  auto rows = reproduce_published();
  CHECK(rows.size() == published_fixtures().size());
  std::set<std::string> errata;
  for (const auto& r : rows) {
    CHECK(r.verdict != Verdict::Mismatch);
    if (r.verdict == Verdict::Erratum) errata.insert(r.id);
  }
  CHECK(errata == std::set<std::string>{"dim4.root.h12-h11", "dim5.first.h14", "dim5.rank.h13-h03",
                                        "dim5.rank.h22", "dim5.root.h14"});
  std::string tsv = render_reproduce_tsv(rows);
  CHECK(tsv.rfind("id\tgroup\td\tverdict\tprinted\tderived\tnote\n", 0) == 0);
}
