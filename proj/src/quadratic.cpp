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

namespace {

// n = f^2 * k with k square-free as far as trial division up to 10^6 sees.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer f = 1;
  Integer k = 1;
  for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        f *= p;
      } else {
        k *= p;
      }
    }
  }
  return {f, k * n};
}

}  // namespace

BoundExpr solve_quadratic_bound(const Constraint& c, HodgeVar target) {
  if (c.relation != Relation::NonNeg) fail(ErrorCode::NotQuadratic, "only NONNEG constraints give lower bounds");
  int degree = c.expr.degree_in(target);
  if (degree < 1 || degree > 2)
    fail(ErrorCode::NotQuadratic, c.expr.to_string() + " has degree " + std::to_string(degree) + " in " +
                                      target.name());
  auto k = c.expr.coefficients_in(target);
  const MultiPoly& lead = k[static_cast<std::size_t>(degree)];
  if (!lead.is_constant()) fail(ErrorCode::NotQuadratic, "leading coefficient in " + target.name() + " is not constant");
  Rational a = lead.constant_term();
  if (a <= 0) fail(ErrorCode::NotQuadratic, "negative leading coefficient has no lower-bound form");
  BoundExpr b{target, MultiPoly(), Rational(0), MultiPoly()};
  if (degree == 1) {
    b.lin = -k[0] * Rational(1 / a);
    return b;
  }
  // Larger root of a x^2 + k1 x + k0: -k1/(2a) + sqrt(k1^2 - 4 a k0)/(2a).
  b.lin = -k[1] * Rational(1 / (2 * a));
  MultiPoly disc = k[1] * k[1] - k[0] * Rational(4 * a);
  if (disc.is_zero()) return b;
  Rational s = disc.content();
  MultiPoly primitive = disc.primitive_part();
  Integer num = s.get_num();
  Integer den = s.get_den();
  auto [f, sq] = split_square(Integer(num * den));
  // sqrt(num/den * P) = f/den * sqrt(sq * P)
  b.coef = Rational(1 / (2 * a)) * make_rational(f, den);
  b.rad = primitive * Rational(sq);
  if (b.rad == MultiPoly(1L)) {
    b.lin += MultiPoly(b.coef);
    b.coef = 0;
    b.rad = MultiPoly();
  }
  return b;
}

std::string to_string(const BoundExpr& b) {
  std::string out = b.target.name() + " >= ";
  std::string lin = b.lin.to_string();
  if (b.coef == 0) return out + lin;
  std::string root = (b.coef == 1 ? std::string() : to_string(b.coef) + "*") + "sqrt(" + b.rad.to_string() + ")";
  if (b.lin.is_zero()) return out + root;
  return out + lin + " + " + root;
}

std::string to_latex(const BoundExpr& b) {
  std::string out = b.target.latex() + " \\geq ";
  if (b.coef == 0) return out + b.lin.to_latex();
  std::string c;
  if (b.coef != 1)
    c = is_integer(b.coef) ? to_string(b.coef)
                           : "\\tfrac{" + to_string(Integer(b.coef.get_num())) + "}{" +
                                 to_string(Integer(b.coef.get_den())) + "}";
  std::string root = c + "\\sqrt{" + b.rad.to_latex() + "}";
  if (b.lin.is_zero()) return out + root;
  return out + b.lin.to_latex() + " + " + root;
}

std::string render_bound_json(const BoundExpr& b) {
  nlohmann::json j;
  j["target"] = b.target.name();
  j["lin"] = b.lin.to_string();
  j["coef"] = to_string(b.coef);
  j["rad"] = b.rad.to_string();
  return j.dump();
}

int compare_with_root(const Rational& x, const Rational& c, const Rational& r) {
  if (c < 0 || r < 0) fail(ErrorCode::InvalidArgument, "compare_with_root needs c, r >= 0");
  if (c == 0 || r == 0) return sgn(x);
  if (x < 0) return -1;
  Rational lhs = x * x;
  Rational rhs = c * c * r;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

namespace {

struct Point {
  Rational lin;
  Rational rad;
  Integer root_floor;  // floor(coef * sqrt(rad))
};

Point at_point(const BoundExpr& b, const Assignment& at) {
  Point pt{b.lin.evaluate(at), b.rad.evaluate(at), Integer(0)};
  if (pt.rad < 0) fail(ErrorCode::InvalidArgument, "radicand is negative at this point");
  Integer t = floor(Rational(b.coef * b.coef * pt.rad));
  mpz_sqrt(pt.root_floor.get_mpz_t(), t.get_mpz_t());
  return pt;
}

}  // namespace

Integer bound_ceil(const BoundExpr& b, const Assignment& at) {
  Point pt = at_point(b, at);
  Integer n = ceil(Rational(pt.lin + pt.root_floor));
  while (compare_with_root(Rational(n - pt.lin), b.coef, pt.rad) < 0) ++n;
  return n;
}

Integer bound_floor(const BoundExpr& b, const Assignment& at) {
  Point pt = at_point(b, at);
  Integer n = floor(Rational(pt.lin + pt.root_floor + 1));
  while (compare_with_root(Rational(n - pt.lin), b.coef, pt.rad) > 0) --n;
  return n;
}

}  // namespace hodge
