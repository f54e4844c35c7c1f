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

#include "hodge_bounds/derivative_complex.hpp"

#include <algorithm>

#include "hodge_bounds/error.hpp"

namespace hodge {

namespace {

void check_degree(int d, int p) {
  if (p < 0 || p > d) fail(ErrorCode::InvalidArgument, "p = " + std::to_string(p) + " outside [0, d]");
}

int sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// One factor of a product formula: (1 - j t)^{sign * h^{p, index}}.
struct Factor {
  int j;
  int sign;
  int index;
};

struct Window {
  std::vector<Factor> factors;
  int rank_from = 0;  // rank sums h^{p,j} for j in [rank_from, rank_to]
  int rank_to = 0;
  int rank_sign_base = 0;  // sign of h^{p,j} in the rank is (-1)^{base + j}
};

Window window_for(SeriesKind kind, const ManifoldProfile& pf, int p) {
  validate_profile(pf);
  int d = pf.d;
  check_degree(d, p);
  Window w;
  if (kind == SeriesKind::Epsilon) {
    if (!pf.m.is_infinite()) fail(ErrorCode::Hypothesis, "epsilon series needs m = inf");
    for (int j = 1; j <= d; ++j) w.factors.push_back({j, sign(j), d - j});
    w.rank_from = 0;
    w.rank_to = d;
    w.rank_sign_base = d;
    return w;
  }
  if (pf.m.is_infinite())
    fail(ErrorCode::Hypothesis, to_string(kind) + " series needs finite m");
  int m = pf.m.value();
  if (kind == SeriesKind::Gamma) {
    int length = m - d + p;
    if (length < 0) fail(ErrorCode::Hypothesis, "gamma series needs d - p < m");
    for (int j = 1; j <= length; ++j) w.factors.push_back({j, sign(j), 2 * d - m - p + j});
    w.rank_from = 2 * d - m - p;
    w.rank_to = d;
    w.rank_sign_base = 2 * d - m - p;
  } else {
    int length = m - p;
    if (length < 0) fail(ErrorCode::Hypothesis, "delta series needs p < m");
    for (int j = 1; j <= length; ++j) w.factors.push_back({j, sign(j), m - p - j});
    w.rank_from = 0;
    w.rank_to = m - p;
    w.rank_sign_base = m - p;
  }
  return w;
}

MultiPoly window_rank(const Window& w, int d, int p, SymbolMode mode) {
  MultiPoly rank;
  for (int j = w.rank_from; j <= w.rank_to; ++j) {
    MultiPoly h = hodge_symbol(p, j, d, mode);
    if (sign(w.rank_sign_base + j) > 0)
      rank += h;
    else
      rank -= h;
  }
  return rank;
}

ChernSeries build(SeriesKind kind, const ManifoldProfile& pf, int p, int order, SymbolMode mode) {
  Window w = window_for(kind, pf, p);
  ChernSeries cs;
  cs.kind = kind;
  cs.p = p;
  cs.series = TruncatedSeries::one(order);
  cs.rank = window_rank(w, pf.d, p, mode);
  cs.vacuous = w.factors.empty();
  if (!w.factors.empty()) cs.lead_pair = HodgeVar{p, w.factors.front().index};
  for (const auto& f : w.factors) {
    MultiPoly e = hodge_symbol(p, f.index, pf.d, mode);
    if (f.sign < 0) e = -e;
    cs.series = cs.series * expand_binomial_power(f.j, e, order);
  }
  return cs;
}

}  // namespace

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Gamma:
      return "gamma";
    case SeriesKind::Delta:
      return "delta";
    case SeriesKind::Epsilon:
      return "epsilon";
  }
  return "?";
}

ComplexModel complex_model(int d, int p, SymbolMode mode) {
  check_degree(d, p);
  ComplexModel cm;
  cm.p = p;
  for (int i = 0; i <= d; ++i) cm.terms.push_back({-d + i, hodge_symbol(p, i, d, mode)});
  return cm;
}

ExactnessWindow exactness_window(const ManifoldProfile& pf, int p) {
  validate_profile(pf);
  int d = pf.d;
  check_degree(d, p);
  ExactnessWindow w;
  if (pf.m.is_infinite()) {
    w.fully_exact = true;
    w.left_exact_steps = d + 1;
    w.right_exact_steps = d + 1;
    return w;
  }
  int m = pf.m.value();
  if (p < m && m <= d) w.left_exact_steps = m - p;
  if (d - p < m && m <= d) w.right_exact_steps = m - d + p;
  if (pf.albanese) {
    int l = pf.albanese->l();
    if (d - p > l) w.left_exact_steps = std::max(w.left_exact_steps, d - p - l);
    if (p > l) w.right_exact_steps = std::max(w.right_exact_steps, p - l);
  }
  return w;
}

ChernSeries gamma_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode) {
  return build(SeriesKind::Gamma, pf, p, order, mode);
}

ChernSeries delta_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode) {
  return build(SeriesKind::Delta, pf, p, order, mode);
}

ChernSeries epsilon_series(const ManifoldProfile& pf, int p, int order, SymbolMode mode) {
  return build(SeriesKind::Epsilon, pf, p, order, mode);
}

ChernSeries numeric_series(SeriesKind kind, const ManifoldProfile& pf, const HodgeDiamond& dm, int p, int order) {
  if (dm.dimension() != pf.d) fail(ErrorCode::InvalidArgument, "diamond dimension does not match profile");
  Window w = window_for(kind, pf, p);
  auto value = [&](int j) -> Integer {
    const auto& e = dm.at(p, j);
    if (!e) fail(ErrorCode::Unassigned, "h^{" + std::to_string(p) + "," + std::to_string(j) + "} is free");
    return *e;
  };
  NumericSeries s(static_cast<std::size_t>(order), Integer(0));
  s[0] = 1;
  for (const auto& f : w.factors) s = numeric_product(s, numeric_binomial_power(f.j, f.sign * value(f.index), order));
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(s.size());
  for (const auto& c : s) coeffs.emplace_back(Rational(c));
  ChernSeries cs;
  cs.kind = kind;
  cs.p = p;
  cs.series = TruncatedSeries(std::move(coeffs));
  Integer rank = 0;
  for (int j = w.rank_from; j <= w.rank_to; ++j) rank += sign(w.rank_sign_base + j) * value(j);
  cs.rank = MultiPoly(Rational(rank));
  cs.vacuous = w.factors.empty();
  if (!w.factors.empty()) cs.lead_pair = HodgeVar{p, w.factors.front().index};
  return cs;
}

MultiPoly partial_euler(const ManifoldProfile& pf, int p, EulerKind kind, SymbolMode mode) {
  Window w = window_for(kind == EulerKind::Geq ? SeriesKind::Gamma : SeriesKind::Delta, pf, p);
  return window_rank(w, pf.d, p, mode);
}

Rational partial_euler(const HodgeDiamond& dm, const ManifoldProfile& pf, int p, EulerKind kind) {
  return partial_euler(pf, p, kind).evaluate(dm.assignment());
}

MultiPoly euler_characteristic(int d, int p, SymbolMode mode) {
  check_degree(d, p);
  MultiPoly out;
  for (int j = 0; j <= d; ++j) {
    if (j % 2 == 0)
      out += hodge_symbol(p, j, d, mode);
    else
      out -= hodge_symbol(p, j, d, mode);
  }
  return out;
}

}  // namespace hodge
