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

#include "hodge_bounds/error.hpp"
#include "hodge_bounds/poly.hpp"
#include "hodge_bounds/series.hpp"

using namespace hodge;

namespace {

const HodgeVar q = HodgeVar::irregularity();
const HodgeVar h11{1, 1};
const HodgeVar h12{1, 2};

MultiPoly var(HodgeVar v) { return MultiPoly::variable(v); }

TruncatedSeries numeric(std::vector<long> c) {
  std::vector<MultiPoly> out;
  for (long x : c) out.emplace_back(x);
  return TruncatedSeries(std::move(out));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(make_rational(4, -6) == Rational(-2, 3));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(binomial(12, 5) == 792);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("variable names") {
  CHECK(q.name() == "q");
  CHECK(h12.name() == "h12");
  CHECK(h12.latex() == "h^{1,2}");
  CHECK(HodgeVar{1, 10}.name() == "h1_10");
  CHECK(parse_hodge_var("h^{2,3}") == HodgeVar{2, 3});
  CHECK(parse_hodge_var("h1_10") == HodgeVar{1, 10});
  CHECK(parse_hodge_var("q") == q);
  CHECK_FALSE(parse_hodge_var("x").has_value());
}

TEST_CASE("polynomial printing and parsing round trip") {
  MultiPoly p = var(h12) - MultiPoly(2) * var(h11) + MultiPoly(3) * var(q);
  CHECK(p.to_string() == "h12 - 2*h11 + 3*q");
  CHECK(parse_poly("h12 - 2*h11 + 3*q") == p);
  CHECK(parse_poly("3*q + h12 - 2*h11") == p);
  CHECK((var(q) * Rational(1, 2)).to_string() == "1/2*q");
  CHECK(parse_poly("(q + 1)^2 / 2") == (var(q).pow(2) + MultiPoly(2) * var(q) + MultiPoly(1)) * Rational(1, 2));
  CHECK(p.to_latex() == "h^{1,2} - 2h^{1,1} + 3q");
  CHECK_THROWS_AS(parse_poly("q / h11"), Error);
  CHECK_THROWS_AS(parse_poly("q +"), Error);
}

TEST_CASE("evaluation") {
  MultiPoly x = var(h11);
  CHECK((x * (x + MultiPoly(1)) * Rational(1, 2)).evaluate({{h11, 4}}) == 10);
  CHECK(parse_poly("h12 - 2*h11 + 3*q").evaluate({{h12, 10}, {h11, 5}, {q, 2}}) == 6);
  CHECK(MultiPoly(7).evaluate({}) == 7);
  try {
    x.evaluate({});
    FAIL("expected Unassigned");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unassigned);
  }
}

TEST_CASE("content and primitive part") {
  MultiPoly p = parse_poly("4*h11 - 6*q + 2");
  CHECK(p.content() == 2);
  CHECK(p.primitive_part() == parse_poly("2*h11 - 3*q + 1"));
  MultiPoly r = parse_poly("1/2*h11 - 1/3");
  CHECK(r.primitive_part() == parse_poly("3*h11 - 2"));
  CHECK(parse_poly("-2*h11 + 4").primitive_part() == parse_poly("-h11 + 2"));
}

TEST_CASE("coefficients in one variable") {
  auto k = parse_poly("h11^2 - 4*h11*q + 4*q^2 + h11 - 4*q").coefficients_in(h11);
  REQUIRE(k.size() == 3);
  CHECK(k[2] == MultiPoly(1));
  CHECK(k[1] == parse_poly("-4*q + 1"));
  CHECK(k[0] == parse_poly("4*q^2 - 4*q"));
}

TEST_CASE("ring axioms by evaluation at random points") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> val(-9, 9);
  const HodgeVar vars[] = {q, h11, h12};
  auto random_poly = [&] {
    MultiPoly p;
    for (int t = 0; t < 4; ++t) {
      MultiPoly m(coef(rng));
      for (int f = pick(rng); f > 0; --f) m *= var(vars[pick(rng)]);
      p += m;
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    Assignment at{{q, val(rng)}, {h11, val(rng)}, {h12, val(rng)}};
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == MultiPoly());
  }
}

TEST_CASE("binomial power examples") {
  CHECK(expand_binomial_power(1, MultiPoly(-2), 3) == numeric({1, 2, 3}));
  CHECK(expand_binomial_power(2, MultiPoly(1), 3) == numeric({1, -2, 0}));
  TruncatedSeries s = expand_binomial_power(1, -var(h11), 3);
  MultiPoly x = var(h11);
  CHECK(s[2] == x * (x + MultiPoly(1)) * Rational(1, 2));
  for (int n = 1; n <= 5; ++n) {
    auto num = numeric_binomial_power(1, Integer(-n), 3);
    CHECK(s[2].evaluate({{h11, n}}) == Rational(num[2]));
  }
}

TEST_CASE("binomial power against repeated multiplication and inversion") {
  for (int j = 1; j <= 5; ++j)
    for (int order = 1; order <= 12; ++order) {
      std::vector<MultiPoly> base(static_cast<std::size_t>(order));
      base[0] = MultiPoly(1);
      if (order > 1) base[1] = MultiPoly(-j);
      TruncatedSeries factor(base);
      for (int n = -10; n <= 10; ++n) {
        TruncatedSeries direct = TruncatedSeries::one(order);
        for (int k = 0; k < std::abs(n); ++k) direct = direct * factor;
        if (n < 0) direct = direct.inverse();
        CHECK(expand_binomial_power(j, MultiPoly(n), order) == direct);
      }
    }
}

TEST_CASE("series products") {
  TruncatedSeries a = expand_binomial_power(2, MultiPoly(1), 3);
  TruncatedSeries b = expand_binomial_power(1, MultiPoly(-3), 3);
  CHECK(series_product({a, b}) == numeric({1, 1, 0}));
  CHECK(series_product({b}) == b);
  TruncatedSeries up = expand_binomial_power(1, -var(q), 5);
  TruncatedSeries down = expand_binomial_power(1, var(q), 5);
  CHECK(series_product({up, down}) == TruncatedSeries::one(5));
  TruncatedSeries c = expand_binomial_power(3, var(h11), 5);
  CHECK(series_product({up, c, down}) == series_product({c, down, up}));
  CHECK(c * c.inverse() == TruncatedSeries::one(5));
  CHECK_THROWS_AS(series_product({}), Error);
  CHECK_THROWS_AS(series_product({a, up}), Error);
}

TEST_CASE("symbolic coefficients need not have integer coefficients") {
  TruncatedSeries s = expand_binomial_power(1, -var(h11), 4);
  CHECK(s[2].to_string() == "1/2*h11^2 + 1/2*h11");
  for (int n = 0; n <= 20; ++n) CHECK(is_integer(s[3].evaluate({{h11, n}})));
}
