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

#include "hodge_bounds/series.hpp"

#include "hodge_bounds/error.hpp"

namespace hodge {

TruncatedSeries TruncatedSeries::one(int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "truncation order must be positive");
  std::vector<MultiPoly> c(static_cast<std::size_t>(order));
  c[0] = MultiPoly(1L);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries::TruncatedSeries(std::vector<MultiPoly> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "truncation order must be positive");
}

MultiPoly TruncatedSeries::coefficient(int i) const {
  if (i < 0 || i >= order()) return MultiPoly();
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  if (order() != other.order()) fail(ErrorCode::InvalidArgument, "mismatched truncation orders");
  std::size_t n = coeffs_.size();
  std::vector<MultiPoly> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b < n; ++b)
      if (!other.coeffs_[b].is_zero()) out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] != MultiPoly(1L)) fail(ErrorCode::InvalidArgument, "inverse needs constant term 1");
  std::size_t n = coeffs_.size();
  std::vector<MultiPoly> out(n);
  out[0] = MultiPoly(1L);
  for (std::size_t i = 1; i < n; ++i) {
    MultiPoly acc;
    for (std::size_t k = 1; k <= i; ++k)
      if (!coeffs_[k].is_zero()) acc += coeffs_[k] * out[i - k];
    out[i] = -acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::substitute(const Assignment& values) const {
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.substitute(values));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::rename(const std::function<HodgeVar(HodgeVar)>& f) const {
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.rename(f));
  return TruncatedSeries(std::move(out));
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (int i = 0; i < order(); ++i) {
    const MultiPoly& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero() && i > 0) continue;
    std::string body = c.to_string();
    if (i > 0 && c.size() > 1) body = "(" + body + ")";
    if (!out.empty()) out += " + ";
    out += body;
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out + " + O(t^" + std::to_string(order()) + ")";
}

TruncatedSeries expand_binomial_power(int j, const MultiPoly& e, int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "truncation order must be positive");
  if (j < 1) fail(ErrorCode::InvalidArgument, "factor index j must be positive");
  std::vector<MultiPoly> c(static_cast<std::size_t>(order));
  c[0] = MultiPoly(1L);
  for (int i = 1; i < order; ++i) {
    MultiPoly step = e - MultiPoly(static_cast<long>(i - 1));
    c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)] * step * make_rational(-j, i);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_product(const std::vector<TruncatedSeries>& factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "empty product");
  TruncatedSeries out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

NumericSeries numeric_binomial_power(int j, const Integer& e, int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "truncation order must be positive");
  if (j < 1) fail(ErrorCode::InvalidArgument, "factor index j must be positive");
  NumericSeries c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (int i = 1; i < order; ++i) {
    // c_{i-1} (e-i+1) (-j) equals i * C(e, i) (-j)^i, so the division is exact.
    Integer t = c[static_cast<std::size_t>(i - 1)] * (e - (i - 1)) * (-j);
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(i));
    c[static_cast<std::size_t>(i)] = t;
  }
  return c;
}

NumericSeries numeric_product(const NumericSeries& a, const NumericSeries& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "mismatched truncation orders");
  NumericSeries out(a.size(), Integer(0));
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; x + y < a.size(); ++y) out[x + y] += a[x] * b[y];
  }
  return out;
}

}  // namespace hodge
