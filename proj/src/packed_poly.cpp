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

#include "packed_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "hodge_bounds/error.hpp"

namespace hodge::detail {

PackedPoly PackedPoly::from(const MultiPoly& p, const std::vector<HodgeVar>& vars) {
  if (vars.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "too many variables for packed form");
  PackedPoly out;
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) den = lcm(den, Integer(c.get_den()));
  out.den_ = den;
  for (const auto& [m, c] : p.terms()) {
    Key key = 0;
    for (const auto& [v, e] : m.factors()) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) fail(ErrorCode::InvalidArgument, "variable missing from packed layout");
      if (e > 255) fail(ErrorCode::InvalidArgument, "exponent too large for packed form");
      key += static_cast<Key>(e) << (8 * (it - vars.begin()));
    }
    Integer num = c.get_num() * (den / c.get_den());
    out.terms_.emplace_back(key, std::move(num));
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MultiPoly PackedPoly::to_multi(const std::vector<HodgeVar>& vars) const {
  MultiPoly out;
  for (const auto& [key, num] : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int e = static_cast<int>((key >> (8 * i)) & 0xFF);
      if (e > 0) m = m * Monomial(vars[i], e);
    }
    out += MultiPoly::term(make_rational(num, den_), m);
  }
  return out;
}

void PackedPoly::reduce() {
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& t : terms_) {
    g = gcd(g, t.second);
    if (g == 1) return;
  }
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  for (auto& t : terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

PackedPoly& PackedPoly::add(const PackedPoly& o, bool negate) {
  if (o.terms_.empty()) return *this;
  Integer den = lcm(den_, o.den_);
  Integer sa = den / den_;
  Integer sb = den / o.den_;
  std::vector<std::pair<Key, Integer>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.emplace_back(a->first, a->second * sa);
      ++a;
    } else {
      Integer v = b->second * sb;
      if (negate) v = -v;
      if (a != terms_.end() && a->first == b->first) {
        v += a->second * sa;
        ++a;
      }
      if (v != 0) merged.emplace_back(b->first, std::move(v));
      ++b;
    }
  }
  terms_ = std::move(merged);
  den_ = den;
  reduce();
  return *this;
}

PackedPoly operator*(const PackedPoly& a, const PackedPoly& b) {
  PackedPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  std::unordered_map<PackedPoly::Key, Integer> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Integer& slot = acc[ka + kb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  out.terms_.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (v != 0) out.terms_.emplace_back(k, std::move(v));
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  out.den_ = a.den_ * b.den_;
  out.reduce();
  return out;
}

}  // namespace hodge::detail
