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
#include <random>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace {

ManifoldProfile md(int d, int q) { return ManifoldProfile{d, q, ZeroLocusInvariant::finite(d), std::nullopt}; }
ManifoldProfile inf(int d, int q) { return ManifoldProfile{d, q, ZeroLocusInvariant::infinity(), std::nullopt}; }

const Constraint* find_tag(const std::vector<Constraint>& cs, const std::string& tag) {
  for (const auto& c : cs)
    if (std::find(c.provenance.begin(), c.provenance.end(), tag) != c.provenance.end()) return &c;
  return nullptr;
}

bool has_nonneg(const std::vector<Constraint>& cs, const std::string& expr) {
  MultiPoly want = parse_poly(expr).primitive_part();
  for (const auto& c : cs)
    if (c.relation == Relation::NonNeg && c.expr == want) return true;
  return false;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_up_to_weight(0).empty());
  auto one = partitions_up_to_weight(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "(1)");
  std::vector<std::string> names;
  for (const auto& p : partitions_up_to_weight(3)) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"(1)", "(2)", "(1,1)", "(3)", "(2,1)", "(1,1,1)"});
  CHECK(partitions_up_to_weight(8).size() == 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
}

TEST_CASE("small Schur values") {
  std::vector<Integer> c{1, 3, 2};
  CHECK(schur_of_chern(Partition({1}), c) == 3);
  CHECK(schur_of_chern(Partition({2}), c) == 7);
  CHECK(schur_of_chern(Partition({1, 1}), c) == 2);
  CHECK(schur_giambelli(Partition({2}), c) == 7);
}

TEST_CASE("Schur determinants match the tableau oracle on random roots") {
  std::mt19937 rng(20260917);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<long> root(0, 5);
  auto parts = partitions_up_to_weight(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> roots(static_cast<std::size_t>(count(rng)));
    for (auto& r : roots) r = root(rng);
    std::vector<Integer> c = oracle::elementary(roots);
    for (const auto& lambda : parts) {
      Integer want = oracle::schur_by_tableaux(lambda, roots);
      CHECK(schur_giambelli(lambda, c) == want);
      CHECK(schur_of_chern(lambda, c) == want);
    }
  }
}

TEST_CASE("single rows and single columns") {
  std::vector<long> roots{1, 2, 4};
  std::vector<Integer> c = oracle::elementary(roots);
  std::vector<Integer> h = complete_from_chern(c, 7);
  for (int i = 1; i <= 6; ++i) {
    Partition row({i});
    Partition column(std::vector<int>(static_cast<std::size_t>(i), 1));
    CHECK(schur_of_chern(row, c) == h[static_cast<std::size_t>(i)]);
    CHECK(schur_of_chern(row, c) == oracle::schur_by_tableaux(row, roots));
    CHECK(schur_of_chern(column, c) == chern_at(c, i));
  }
}

TEST_CASE("batch Schur evaluation equals the reference path") {
  ChernSeries s = delta_series(md(4, 9), 1, 9);
  auto parts = partitions_up_to_weight(6);
  auto batch = schur_batch(parts, s.series.coefficients());
  REQUIRE(batch.size() == parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) CHECK(batch[i] == schur_of_chern(parts[i], s.series.coefficients()));
}

TEST_CASE("coefficient constraints are the single-column Schur constraints") {
  for (int d = 2; d <= 4; ++d)
    for (int p = 0; p < d; ++p) {
      ChernSeries s = delta_series(md(d, 7), p, 7);
      for (int i = 1; i < 7; ++i) {
        Partition column(std::vector<int>(static_cast<std::size_t>(i), 1));
        CHECK(schur_of_chern(column, s.series.coefficients()) == s.series[i]);
      }
    }
}

TEST_CASE("positivity constraints from single series") {
  ManifoldProfile pf = md(3, 5);
  auto cs = extract_positivity_constraints(delta_series(pf, 1, 5), pf, 4, 4);
  CHECK(has_nonneg(cs, "h11 - 2*q"));
  ManifoldProfile five = md(5, 6);
  CHECK(has_nonneg(extract_positivity_constraints(delta_series(five, 2, 6), five, 2, 2), "h22 - 2*h12 + 3*h02"));

  const Constraint* vanish = find_tag(cs, "delta[p=1].vanishing_1");
  REQUIRE(vanish != nullptr);
  CHECK(vanish->relation == Relation::Zero);
  REQUIRE(vanish->condition.has_value());
  CHECK(vanish->condition->index == 1);
}

TEST_CASE("epsilon constraints hold on the abelian threefold") {
  ManifoldProfile pf = inf(3, 3);
  HodgeDiamond ab = abelian_diamond(3);
  for (int p = 0; p <= 3; ++p) {
    auto cs = extract_positivity_constraints(epsilon_series(pf, p, 3), pf, 2, 2);
    REQUIRE_FALSE(cs.empty());
    for (const auto& c : cs) {
      CHECK(c.relation == Relation::Zero);
      CHECK(c.expr.evaluate(ab.assignment()) == 0);
    }
  }
}

TEST_CASE("rank and surjection constraints") {
  CHECK(has_nonneg(extract_rank_constraints(md(3, 5), 0), "h03 - h02 + q - 1 - (q - 3)"));
  CHECK(has_nonneg(extract_rank_constraints(md(3, 5), 1), "h11 - (2*q - 1)"));
  CHECK(has_nonneg(extract_rank_constraints(md(4, 5), 1), "h13 - (h03 + q - 1)"));
}

TEST_CASE("Euler characteristic constraints") {
  auto three = extract_euler_constraints(md(3, 5));
  CHECK(has_nonneg(three, "q - h11 + h12 - h02 - 2"));
  auto four = extract_euler_constraints(md(4, 6));
  CHECK(has_nonneg(four, "2*h02 - 2*h12 + h22 - 1"));
  // (-1)^3 chi(Omega^1) >= 2
  CHECK(has_nonneg(four, "-(q - h11 + h12 - h13 + h03) - 2"));
  CHECK(extract_euler_constraints(ManifoldProfile{3, 5, ZeroLocusInvariant::finite(2), std::nullopt}).empty());
}

TEST_CASE("extra bounds under m = d") {
  CHECK(has_nonneg(extract_md_extras(md(3, 5)), "h02 - (2*q - 3)"));
  CHECK(has_nonneg(extract_md_extras(md(4, 5)), "h02 - (4*q - 10)"));
  CHECK(has_nonneg(extract_md_extras(md(3, 5)), "h03 - h02 + q - 1 - (q - 3)"));
}

TEST_CASE("surface bounds come from the vanishing clauses") {
  for (int q = 3; q <= 9; ++q) {
    ManifoldProfile pf{2, q, ZeroLocusInvariant::finite(2), std::nullopt};
    auto floors = extract_rank_floor_constraints(pf, std::nullopt);
    CHECK(has_nonneg(floors, "h02 - (2*q - 3)"));
    CHECK(has_nonneg(floors, "h11 - (2*q - 1)"));
  }
  auto fit = fit_rank_floor(SeriesKind::Delta, 2, ZeroLocusInvariant::finite(2), 0);
  REQUIRE(fit.has_value());
  CHECK(fit->offset == -2);
}

TEST_CASE("constraint normalization and deduplication") {
  auto a = make_constraint(parse_poly("4*h11 - 8*q"), Relation::NonNeg, {}, "a", 1);
  auto b = make_constraint(parse_poly("h11 - 2*q"), Relation::NonNeg, {}, "b", 0);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->expr == parse_poly("h11 - 2*q"));
  auto z = make_constraint(parse_poly("-3*h11 + 6*q"), Relation::Zero, {}, "z", 0);
  CHECK(z->expr == parse_poly("h11 - 2*q"));
  CHECK_FALSE(make_constraint(MultiPoly(), Relation::NonNeg, {}, "0", 0).has_value());
  auto merged = deduplicate({*a, *b});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].provenance == std::vector<std::string>{"a", "b"});
  CHECK(merged[0].p == 0);
}

TEST_CASE("hypotheses") {
  ManifoldProfile pf = md(3, 3);
  CHECK(parse_hypothesis("q > 2").holds(pf));
  CHECK_FALSE(parse_hypothesis("q > 3").holds(pf));
  CHECK(parse_hypothesis("q >= 3").holds(pf));
  CHECK(parse_hypothesis("m = d").holds(pf));
  CHECK_FALSE(parse_hypothesis("m = inf").holds(pf));
  CHECK(parse_hypothesis("d >= 3").to_string() == "d >= 3");
  CHECK_THROWS_AS(parse_hypothesis("q ~ 3"), Error);
}

TEST_CASE("catalog generation is deterministic and round trips") {
  ManifoldProfile pf = md(3, 6);
  Catalog c1 = generate_catalog(pf);
  Catalog c2 = generate_catalog(pf);
  std::string j = render_catalog_json(c1);
  CHECK(j == render_catalog_json(c2));
  Catalog back = parse_catalog_json(j);
  CHECK(render_catalog_json(back) == j);
  CHECK(back.constraints.size() == c1.constraints.size());
  CHECK(render_catalog_text(c1) == render_catalog_text(c2));
  CHECK(render_catalog_latex(c1).find("h^{1,1} \\geq 2q") != std::string::npos);
  CHECK(c1.order_cap == 5);
  CHECK(c1.schur_cap == 5);
}

TEST_CASE("catalog for m = inf holds only epsilon identities") {
  Catalog c = generate_catalog(inf(2, 2));
  REQUIRE(c.constraints.size() == 3);
  for (const auto& k : c.constraints) {
    CHECK(k.relation == Relation::Zero);
    CHECK(k.provenance.front().rfind("epsilon[p=", 0) == 0);
    CHECK(k.provenance.front().find(".c_1") != std::string::npos);
  }
}

TEST_CASE("p filter") {
  CatalogOptions opts;
  opts.only_p = 1;
  Catalog c = generate_catalog(md(4, 3), opts);
  REQUIRE_FALSE(c.constraints.empty());
  for (const auto& k : c.constraints) CHECK(k.p == 1);
}

TEST_CASE("abelian diamonds satisfy their own catalogs") {
  for (int d = 2; d <= 5; ++d) {
    Catalog c = generate_catalog(inf(d, d));
    FeasibilityReport r = check_diamond(abelian_diamond(d), c);
    CHECK(r.feasible);
  }
}
