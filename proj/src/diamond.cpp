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

#include "hodge_bounds/diamond.hpp"

#include <json.hpp>

#include "hodge_bounds/error.hpp"

namespace hodge {

int ZeroLocusInvariant::value() const {
  if (is_infinite()) fail(ErrorCode::InvalidArgument, "m is infinite");
  return value_;
}

std::string ZeroLocusInvariant::to_string() const {
  return is_infinite() ? "inf" : std::to_string(value_);
}

ZeroLocusInvariant parse_zero_locus_invariant(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "INF" || text == "INFINITY")
    return ZeroLocusInvariant::infinity();
  try {
    std::size_t used = 0;
    int v = std::stoi(std::string(text), &used);
    if (used == text.size() && v >= 1) return ZeroLocusInvariant::finite(v);
  } catch (const std::exception&) {
  }
  fail(ErrorCode::InvalidArgument, "m must be a positive integer or 'inf', got '" + std::string(text) + "'");
}

void validate_profile(const ManifoldProfile& pf) {
  if (pf.d < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  if (pf.q < 1) fail(ErrorCode::InvalidArgument, "irregularity must be positive");
  if (!pf.m.is_infinite() && (pf.m.value() < 1 || pf.m.value() > pf.d))
    fail(ErrorCode::InvalidArgument, "m must lie in [1, d] or be inf");
  if (pf.albanese) {
    const auto& a = *pf.albanese;
    if (a.k < 0 || a.k > a.f || a.f > pf.d)
      fail(ErrorCode::InvalidArgument, "Albanese fibers need 0 <= k <= f <= d");
  }
}

MultiPoly hodge_symbol(int p, int j, int d, SymbolMode mode) {
  if (p < 0 || j < 0 || p > d || j > d) return MultiPoly();
  if (mode == SymbolMode::Raw) return MultiPoly::variable(HodgeVar{p, j});
  HodgeVar v = canonical_var(HodgeVar{p, j}, d);
  if (v.p == 0 && v.j == 0) return MultiPoly(1L);
  return MultiPoly::variable(v);
}

HodgeDiamond::HodgeDiamond(int d) : d_(d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  h_.assign(static_cast<std::size_t>(d + 1), std::vector<std::optional<Integer>>(static_cast<std::size_t>(d + 1)));
}

namespace {

void check_index(int p, int j, int d) {
  if (p < 0 || j < 0 || p > d || j > d)
    fail(ErrorCode::InvalidArgument,
         "index (" + std::to_string(p) + "," + std::to_string(j) + ") outside the diamond");
}

}  // namespace

const std::optional<Integer>& HodgeDiamond::at(int p, int j) const {
  check_index(p, j, d_);
  return h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
}

void HodgeDiamond::set(int p, int j, Integer value) {
  check_index(p, j, d_);
  h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = std::move(value);
}

void HodgeDiamond::clear(int p, int j) {
  check_index(p, j, d_);
  h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)].reset();
}

bool HodgeDiamond::is_complete() const {
  for (const auto& row : h_)
    for (const auto& e : row)
      if (!e) return false;
  return true;
}

MultiPoly HodgeDiamond::entry(int p, int j) const {
  const auto& e = at(p, j);
  if (e) return MultiPoly(Rational(*e));
  return hodge_symbol(p, j, d_);
}

Assignment HodgeDiamond::assignment() const {
  Assignment out;
  for (int p = 0; p <= d_; ++p)
    for (int j = 0; j <= d_; ++j) {
      const auto& e = h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
      if (!e) continue;
      HodgeVar v = canonical_var(HodgeVar{p, j}, d_);
      if (v.p == 0 && v.j == 0) continue;
      out.try_emplace(v, *e);
    }
  return out;
}

ValidationReport validate_diamond(const HodgeDiamond& dm, const ManifoldProfile& pf) {
  int d = dm.dimension();
  if (d != pf.d)
    fail(ErrorCode::InvalidArgument,
         "diamond dimension " + std::to_string(d) + " does not match profile dimension " + std::to_string(pf.d));
  ValidationReport report;
  auto add = [&](int p, int j, std::string msg) { report.violations.push_back({p, j, std::move(msg)}); };
  auto name = [](int p, int j) { return "h^{" + std::to_string(p) + "," + std::to_string(j) + "}"; };

  if (dm.at(0, 0) && *dm.at(0, 0) != 1) add(0, 0, "h^{0,0} must be 1");
  for (int p = 0; p <= d; ++p)
    for (int j = 0; j <= d; ++j) {
      const auto& e = dm.at(p, j);
      if (!e) continue;
      if (*e < 0) add(p, j, name(p, j) + " is negative");
      if (p < j && dm.at(j, p) && *dm.at(j, p) != *e)
        add(p, j, "Hodge symmetry: " + name(p, j) + " = " + to_string(*e) + " but " + name(j, p) + " = " +
                      to_string(*dm.at(j, p)));
      std::pair<int, int> dual{d - p, d - j};
      if (std::pair<int, int>{p, j} < dual && dm.at(dual.first, dual.second) &&
          *dm.at(dual.first, dual.second) != *e)
        add(p, j, "Serre duality: " + name(p, j) + " = " + to_string(*e) + " but " + name(dual.first, dual.second) +
                      " = " + to_string(*dm.at(dual.first, dual.second)));
    }
  if (dm.at(1, 0) && *dm.at(1, 0) != pf.q)
    add(1, 0, "h^{1,0} = " + to_string(*dm.at(1, 0)) + " differs from q = " + std::to_string(pf.q));
  return report;
}

HodgeDiamond abelian_diamond(int d) {
  HodgeDiamond dm(d);
  for (int p = 0; p <= d; ++p)
    for (int j = 0; j <= d; ++j) dm.set(p, j, binomial(d, p) * binomial(d, j));
  return dm;
}

HodgeDiamond partial_diamond(int d, const std::map<std::pair<int, int>, Integer>& assignments) {
  HodgeDiamond dm(d);
  for (const auto& [pj, value] : assignments) {
    check_index(pj.first, pj.second, d);
    for (const auto& [p, j] : symmetry_orbit(pj.first, pj.second, d)) {
      const auto& existing = dm.at(p, j);
      if (existing && *existing != value)
        fail(ErrorCode::Symmetry, "orbit of (" + std::to_string(pj.first) + "," + std::to_string(pj.second) +
                                      ") assigned both " + to_string(*existing) + " and " + to_string(value));
      dm.set(p, j, value);
    }
  }
  return dm;
}

HodgeDiamond parse_diamond_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("diamond JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("h"))
    fail(ErrorCode::Parse, "diamond JSON needs fields \"d\" and \"h\"");
  const auto& jd = doc["d"];
  if (!jd.is_number_integer() || jd.get<long long>() < 1 || jd.get<long long>() > 64)
    fail(ErrorCode::Parse, "\"d\" must be an integer in [1, 64]");
  int d = jd.get<int>();
  const auto& rows = doc["h"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d + 1))
    fail(ErrorCode::Parse, "\"h\" must have d+1 rows");
  HodgeDiamond dm(d);
  for (int p = 0; p <= d; ++p) {
    const auto& row = rows[static_cast<std::size_t>(p)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d + 1))
      fail(ErrorCode::Parse, "row " + std::to_string(p) + " must have d+1 entries");
    for (int j = 0; j <= d; ++j) {
      const auto& e = row[static_cast<std::size_t>(j)];
      if (e.is_null()) continue;
      if (!e.is_number_integer()) fail(ErrorCode::Parse, "entries must be integers or null");
      dm.set(p, j, Integer(std::to_string(e.get<long long>())));
    }
  }
  return dm;
}

std::string render_diamond_json(const HodgeDiamond& dm) {
  int d = dm.dimension();
  nlohmann::json rows = nlohmann::json::array();
  for (int p = 0; p <= d; ++p) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j <= d; ++j) {
      const auto& e = dm.at(p, j);
      if (!e)
        row.push_back(nullptr);
      else if (e->fits_slong_p())
        row.push_back(static_cast<long long>(e->get_si()));
      else
        fail(ErrorCode::InvalidArgument, "entry too large for JSON integer");
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["d"] = d;
  doc["h"] = std::move(rows);
  return doc.dump();
}

}  // namespace hodge
