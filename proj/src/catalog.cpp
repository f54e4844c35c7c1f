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

#include "hodge_bounds/catalog.hpp"

#include <algorithm>
#include <json.hpp>

#include "hodge_bounds/error.hpp"

namespace hodge {

namespace {

using Kind = Hypothesis::Kind;

const MultiPoly kQ = MultiPoly::variable(HodgeVar::irregularity());

MultiPoly h(int p, int j, int d) { return hodge_symbol(p, j, d); }

// Canonical variable of (p, j), or nothing when it is the constant 1.
std::optional<HodgeVar> var_of(int p, int j, int d) {
  if (p < 0 || j < 0 || p > d || j > d) return std::nullopt;
  HodgeVar v = canonical_var(HodgeVar{p, j}, d);
  if (v.p == 0 && v.j == 0) return std::nullopt;
  return v;
}

void push(std::vector<Constraint>& out, std::optional<Constraint> c) {
  if (c) out.push_back(std::move(*c));
}

std::string series_tag(SeriesKind kind, int p) { return to_string(kind) + "[p=" + std::to_string(p) + "]"; }

// Index pair of the variable that leads the rank of a window.
std::optional<HodgeVar> rank_lead(SeriesKind kind, const ManifoldProfile& pf, int p) {
  if (pf.m.is_infinite()) return std::nullopt;
  int m = pf.m.value();
  if (kind == SeriesKind::Gamma) return var_of(p, 2 * pf.d - m - p, pf.d);
  return var_of(p, m - p, pf.d);
}

bool window_open(SeriesKind kind, const ManifoldProfile& pf, int p) {
  if (kind == SeriesKind::Epsilon) return pf.m.is_infinite();
  if (pf.m.is_infinite()) return false;
  int m = pf.m.value();
  return kind == SeriesKind::Gamma ? (pf.d - p < m) : (p < m);
}

int resolve_cap(const std::optional<int>& cap, int q) {
  int c = cap.value_or(kDefaultCap);
  if (c < 0) fail(ErrorCode::InvalidArgument, "caps must be non-negative");
  return std::min(c, q - 1);
}

}  // namespace

std::vector<Constraint> extract_positivity_constraints(const ChernSeries& cs, const ManifoldProfile& pf, int order_cap,
                                                       int schur_cap) {
  std::vector<Constraint> out;
  if (cs.vacuous) return out;
  if (cs.kind == SeriesKind::Epsilon && !pf.m.is_infinite())
    fail(ErrorCode::Hypothesis, "epsilon series for a profile with finite m");
  if (cs.kind != SeriesKind::Epsilon && pf.m.is_infinite())
    fail(ErrorCode::Hypothesis, to_string(cs.kind) + " series for a profile with m = inf");
  int orders = std::min(order_cap, pf.q - 1);
  int weights = std::min(schur_cap, pf.q - 1);
  if (std::max(orders, weights) >= cs.series.order())
    fail(ErrorCode::InvalidArgument, "series truncated below the requested caps");
  std::string tag = series_tag(cs.kind, cs.p);
  std::optional<HodgeVar> lead = var_of(cs.lead_pair.p, cs.lead_pair.j, pf.d);

  if (cs.kind == SeriesKind::Epsilon) {
    for (int i = 1; i <= orders; ++i)
      push(out, make_constraint(cs.series[i], Relation::Zero, {{Kind::QGreater, i}, {Kind::MInfinite, 0}},
                                tag + ".c_" + std::to_string(i), cs.p, lead));
    return out;
  }

  for (int i = 1; i <= orders; ++i)
    push(out, make_constraint(cs.series[i], Relation::NonNeg, {{Kind::QGreater, i}}, tag + ".c_" + std::to_string(i),
                              cs.p, lead));
  std::optional<HodgeVar> lead_of_rank = rank_lead(cs.kind, pf, cs.p);
  for (int i = 1; i <= orders; ++i)
    push(out, make_constraint(cs.series[i], Relation::Zero, {{Kind::QGreater, i}},
                              tag + ".vanishing_" + std::to_string(i), cs.p, lead_of_rank, Condition{cs.rank, i}));
  const auto& c = cs.series.coefficients();
  std::vector<Partition> partitions = partitions_up_to_weight(weights);
  std::vector<MultiPoly> schur = schur_batch(partitions, c);
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    const Partition& lambda = partitions[k];
    push(out, make_constraint(schur[k], Relation::NonNeg, {{Kind::QGreater, lambda.weight()}},
                              tag + ".schur" + lambda.to_string(), cs.p, lead));
  }
  return out;
}

std::vector<Constraint> extract_rank_constraints(const ManifoldProfile& pf, int p) {
  validate_profile(pf);
  std::vector<Constraint> out;
  if (pf.m.is_infinite()) return out;
  int d = pf.d;
  int m = pf.m.value();
  if (p < 0 || p > d) fail(ErrorCode::InvalidArgument, "p outside [0, d]");
  std::string ps = "p=" + std::to_string(p);
  if (d - p < m) {
    std::vector<Hypothesis> hyp{{Kind::QGreater, std::max(m - d + p, d - p - 1)}};
    MultiPoly rank = partial_euler(pf, p, EulerKind::Geq);
    push(out, make_constraint(rank - kQ - MultiPoly(static_cast<long>(d - m - p)), Relation::NonNeg, hyp,
                              "rank[kernel " + ps + "]", p, rank_lead(SeriesKind::Gamma, pf, p)));
    push(out, make_constraint(h(d - p, 1, d) - h(d - p, 0, d) - kQ + MultiPoly(1L), Relation::NonNeg, hyp,
                              "surjection[right " + ps + "]", p, var_of(d - p, 1, d)));
  }
  if (p < m) {
    std::vector<Hypothesis> hyp{{Kind::QGreater, std::max(m - p, p - 1)}};
    MultiPoly rank = partial_euler(pf, p, EulerKind::Leq);
    push(out, make_constraint(rank - kQ + MultiPoly(static_cast<long>(m - p)), Relation::NonNeg, hyp,
                              "rank[cokernel " + ps + "]", p, rank_lead(SeriesKind::Delta, pf, p)));
    push(out, make_constraint(h(p, 1, d) - h(p, 0, d) - kQ + MultiPoly(1L), Relation::NonNeg, hyp,
                              "surjection[left " + ps + "]", p, var_of(p, 1, d)));
  }
  return out;
}

std::vector<Constraint> extract_euler_constraints(const ManifoldProfile& pf) {
  validate_profile(pf);
  std::vector<Constraint> out;
  int d = pf.d;
  if (d < 2 || pf.m.is_infinite() || pf.m.value() != d) return out;
  std::vector<Hypothesis> hyp{{Kind::MEqualsD, 0}, {Kind::QGreater, d}, {Kind::DAtLeast, 2}};
  auto signed_chi = [&](int p) {
    MultiPoly chi = euler_characteristic(d, p);
    return (d - p) % 2 == 0 ? chi : -chi;
  };
  push(out, make_constraint(signed_chi(1) - MultiPoly(2L), Relation::NonNeg, hyp, "euler[p=1]", 1,
                            var_of(1, d - 1, d)));
  for (int p = 2; p <= d - 2; ++p)
    push(out, make_constraint(signed_chi(p) - MultiPoly(1L), Relation::NonNeg, hyp,
                              "euler[p=" + std::to_string(p) + "]", p, var_of(p, d - p, d)));
  return out;
}

std::vector<Constraint> extract_md_extras(const ManifoldProfile& pf) {
  validate_profile(pf);
  std::vector<Constraint> out;
  int d = pf.d;
  if (pf.m.is_infinite() || pf.m.value() != d) return out;
  for (int k = 0; k <= d; ++k) {
    // h^{0,k} >= k (q - k) + 1
    MultiPoly bound = MultiPoly(static_cast<long>(k)) * (kQ - MultiPoly(static_cast<long>(k))) + MultiPoly(1L);
    push(out, make_constraint(h(0, k, d) - bound, Relation::NonNeg, {{Kind::MEqualsD, 0}},
                              "wedge-injectivity[k=" + std::to_string(k) + "]", 0, var_of(0, k, d)));
  }
  if (d >= 3)
    push(out, make_constraint(h(0, 2, d) - MultiPoly(4L) * kQ + MultiPoly(10L), Relation::NonNeg,
                              {{Kind::MEqualsD, 0}, {Kind::DAtLeast, 3}}, "h02-linear-bound", 0, var_of(0, 2, d)));
  MultiPoly chi_omega;
  for (int j = 0; j <= d; ++j) chi_omega += (d + j) % 2 == 0 ? h(0, j, d) : -h(0, j, d);
  push(out, make_constraint(chi_omega - kQ + MultiPoly(static_cast<long>(d)), Relation::NonNeg,
                            {{Kind::MEqualsD, 0}, {Kind::QAtLeast, d}}, "canonical-euler", 0, var_of(0, d, d)));
  return out;
}

namespace {

// Exponents of the product formula, when each one depends on q alone.
std::optional<std::vector<std::pair<int, MultiPoly>>> q_only_factors(SeriesKind kind, const ManifoldProfile& pf,
                                                                     int p) {
  int d = pf.d;
  int m = pf.m.is_infinite() ? d : pf.m.value();
  std::vector<std::pair<int, MultiPoly>> out;
  int length = kind == SeriesKind::Gamma ? m - d + p : kind == SeriesKind::Delta ? m - p : d;
  for (int j = 1; j <= length; ++j) {
    int index = kind == SeriesKind::Gamma ? 2 * d - m - p + j : kind == SeriesKind::Delta ? m - p - j : d - j;
    MultiPoly e = h(p, index, d);
    if (j % 2 == 1) e = -e;
    for (const auto& v : e.variables())
      if (!v.is_irregularity()) return std::nullopt;
    out.emplace_back(j, e);
  }
  return out;
}

int rank_floor_at(const std::vector<std::pair<int, MultiPoly>>& factors, int q) {
  if (q < 2) return 0;
  Assignment at_q{{HodgeVar::irregularity(), Integer(q)}};
  NumericSeries s(static_cast<std::size_t>(q), Integer(0));
  s[0] = 1;
  for (const auto& [j, e] : factors) {
    Rational value = e.evaluate(at_q);
    s = numeric_product(s, numeric_binomial_power(j, value.get_num(), q));
  }
  for (int i = q - 1; i >= 1; --i)
    if (s[static_cast<std::size_t>(i)] != 0) return i;
  return 0;
}

constexpr int kRankFloorMaxQ = 4096;

}  // namespace

std::optional<int> vanishing_rank_floor(SeriesKind kind, const ManifoldProfile& pf, int p) {
  validate_profile(pf);
  if (!window_open(kind, pf, p)) return std::nullopt;
  auto factors = q_only_factors(kind, pf, p);
  if (!factors) return std::nullopt;
  if (pf.q > kRankFloorMaxQ) fail(ErrorCode::SearchLimit, "rank floor needs q <= 4096");
  return rank_floor_at(*factors, pf.q);
}

std::optional<RankFloorFit> fit_rank_floor(SeriesKind kind, int d, const ZeroLocusInvariant& m, int p, int last_q) {
  ManifoldProfile pf{d, 2, m, std::nullopt};
  validate_profile(pf);
  if (!window_open(kind, pf, p)) return std::nullopt;
  auto factors = q_only_factors(kind, pf, p);
  if (!factors) return std::nullopt;
  int offset = rank_floor_at(*factors, last_q) - last_q;
  int first = last_q;
  while (first > 2 && rank_floor_at(*factors, first - 1) == first - 1 + offset) --first;
  return RankFloorFit{offset, first};
}

std::vector<Constraint> extract_rank_floor_constraints(const ManifoldProfile& pf, std::optional<int> only_p) {
  validate_profile(pf);
  std::vector<Constraint> out;
  if (pf.m.is_infinite() || pf.q > kRankFloorMaxQ) return out;
  for (int p = 0; p <= pf.d; ++p) {
    if (only_p && *only_p != p) continue;
    for (SeriesKind kind : {SeriesKind::Gamma, SeriesKind::Delta}) {
      if (!window_open(kind, pf, p)) continue;
      auto floor = vanishing_rank_floor(kind, pf, p);
      if (!floor || *floor == 0) continue;
      MultiPoly rank = partial_euler(pf, p, kind == SeriesKind::Gamma ? EulerKind::Geq : EulerKind::Leq);
      std::string tag = "rank-floor[" + series_tag(kind, p) + "]";
      auto fit = fit_rank_floor(kind, pf.d, pf.m, p);
      if (fit && pf.q >= fit->first_q && *floor == pf.q + fit->offset)
        push(out, make_constraint(rank - kQ - MultiPoly(static_cast<long>(fit->offset)), Relation::NonNeg,
                                  {{Kind::QAtLeast, fit->first_q}}, tag, p, rank_lead(kind, pf, p)));
      else
        push(out, make_constraint(rank - MultiPoly(static_cast<long>(*floor)), Relation::NonNeg,
                                  {{Kind::QEquals, pf.q}}, tag, p, rank_lead(kind, pf, p)));
    }
  }
  return out;
}

CatalogOptions second_order_options() {
  CatalogOptions o;
  o.order_cap = 2;
  o.schur_cap = 2;
  return o;
}

Catalog generate_catalog(const ManifoldProfile& pf, const CatalogOptions& options) {
  validate_profile(pf);
  if (options.only_p && (*options.only_p < 0 || *options.only_p > pf.d))
    fail(ErrorCode::InvalidArgument, "p = " + std::to_string(*options.only_p) + " outside [0, d]");
  Catalog cat;
  cat.profile = pf;
  cat.order_cap = std::max(0, resolve_cap(options.order_cap, pf.q));
  cat.schur_cap = std::max(0, resolve_cap(options.schur_cap, pf.q));
  int order = std::max(cat.order_cap, cat.schur_cap) + 1;
  std::vector<Constraint> all;
  auto keep = [&](std::vector<Constraint> batch) {
    for (auto& c : batch)
      if (!options.only_p || c.p == *options.only_p) all.push_back(std::move(c));
  };
  for (int p = 0; p <= pf.d; ++p) {
    if (options.only_p && *options.only_p != p) continue;
    for (SeriesKind kind : {SeriesKind::Gamma, SeriesKind::Delta, SeriesKind::Epsilon}) {
      if (!window_open(kind, pf, p)) continue;
      ChernSeries cs = kind == SeriesKind::Gamma   ? gamma_series(pf, p, order)
                       : kind == SeriesKind::Delta ? delta_series(pf, p, order)
                                                   : epsilon_series(pf, p, order);
      keep(extract_positivity_constraints(cs, pf, cat.order_cap, cat.schur_cap));
    }
    keep(extract_rank_constraints(pf, p));
  }
  keep(extract_euler_constraints(pf));
  keep(extract_md_extras(pf));
  if (options.rank_floors) keep(extract_rank_floor_constraints(pf, options.only_p));
  cat.constraints = deduplicate(std::move(all));
  return cat;
}

std::string constraint_latex(const Constraint& c) {
  std::string body;
  std::string rel = c.relation == Relation::NonNeg ? " \\geq " : " = ";
  bool solved = false;
  if (c.lead && c.relation == Relation::NonNeg && c.expr.degree_in(*c.lead) == 1) {
    auto coeffs = c.expr.coefficients_in(*c.lead);
    if (coeffs[1].is_constant() && coeffs[1].constant_term() > 0) {
      Rational a = coeffs[1].constant_term();
      MultiPoly rest = -coeffs[0] * Rational(1 / a);
      MultiPoly lhs = MultiPoly::variable(*c.lead);
      body = lhs.to_latex() + rel + rest.to_latex();
      solved = true;
    }
  }
  if (!solved) body = c.expr.to_latex() + rel + "0";
  if (c.condition)
    body += " \\quad\\text{if } " + c.condition->rank.to_latex() + " < " + std::to_string(c.condition->index);
  if (!c.hypotheses.empty()) {
    body += " \\quad (";
    for (std::size_t i = 0; i < c.hypotheses.size(); ++i) {
      if (i > 0) body += ",\\ ";
      std::string hs = c.hypotheses[i].to_string();
      std::string out;
      for (std::size_t k = 0; k < hs.size(); ++k) {
        if (hs.compare(k, 2, ">=") == 0) {
          out += "\\geq";
          ++k;
        } else if (hs.compare(k, 3, "inf") == 0) {
          out += "\\infty";
          k += 2;
        } else {
          out += hs[k];
        }
      }
      body += out;
    }
    body += ")";
  }
  return body;
}

namespace {

nlohmann::json profile_json(const ManifoldProfile& pf) {
  nlohmann::json j;
  j["d"] = pf.d;
  j["q"] = pf.q;
  j["m"] = pf.m.to_string();
  if (pf.albanese) j["albanese"] = {{"k", pf.albanese->k}, {"f", pf.albanese->f}};
  return j;
}

nlohmann::json constraint_json(const Constraint& c) {
  nlohmann::json j;
  j["expr"] = c.expr.to_string();
  j["relation"] = to_string(c.relation);
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& hy : c.hypotheses) hyps.push_back(hy.to_string());
  j["hypotheses"] = std::move(hyps);
  j["provenance"] = c.provenance;
  j["p"] = c.p;
  if (c.condition) j["condition"] = {{"rank", c.condition->rank.to_string()}, {"index", c.condition->index}};
  if (c.lead) j["lead"] = c.lead->name();
  return j;
}

}  // namespace

std::string render_catalog_json(const Catalog& catalog) {
  nlohmann::json doc;
  doc["profile"] = profile_json(catalog.profile);
  doc["order_cap"] = catalog.order_cap;
  doc["schur_cap"] = catalog.schur_cap;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : catalog.constraints) list.push_back(constraint_json(c));
  doc["constraints"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string render_catalog_text(const Catalog& catalog) {
  const auto& pf = catalog.profile;
  std::string out = "# d=" + std::to_string(pf.d) + " q=" + std::to_string(pf.q) + " m=" + pf.m.to_string() +
                    " order_cap=" + std::to_string(catalog.order_cap) +
                    " schur_cap=" + std::to_string(catalog.schur_cap) +
                    " constraints=" + std::to_string(catalog.constraints.size()) + "\n";
  for (const auto& c : catalog.constraints) {
    std::string tags;
    for (const auto& t : c.provenance) tags += (tags.empty() ? "" : ",") + t;
    out += tags + "\t" + c.to_string() + "\n";
  }
  return out;
}

std::string render_catalog_latex(const Catalog& catalog) {
  const auto& pf = catalog.profile;
  std::string out = "% d=" + std::to_string(pf.d) + " q=" + std::to_string(pf.q) + " m=" + pf.m.to_string() +
                    " order_cap=" + std::to_string(catalog.order_cap) +
                    " schur_cap=" + std::to_string(catalog.schur_cap) + "\n";
  out += "\\begin{align*}\n";
  for (std::size_t i = 0; i < catalog.constraints.size(); ++i) {
    out += "  & " + constraint_latex(catalog.constraints[i]);
    out += i + 1 < catalog.constraints.size() ? " \\\\\n" : "\n";
  }
  return out + "\\end{align*}\n";
}

Catalog parse_catalog_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("catalog JSON: ") + e.what());
  }
  Catalog cat;
  try {
    const auto& pj = doc.at("profile");
    cat.profile.d = pj.at("d").get<int>();
    cat.profile.q = pj.at("q").get<int>();
    cat.profile.m = parse_zero_locus_invariant(pj.at("m").get<std::string>());
    if (pj.contains("albanese"))
      cat.profile.albanese = AlbaneseFibers{pj["albanese"].at("k").get<int>(), pj["albanese"].at("f").get<int>()};
    cat.order_cap = doc.at("order_cap").get<int>();
    cat.schur_cap = doc.at("schur_cap").get<int>();
    for (const auto& cj : doc.at("constraints")) {
      Constraint c;
      c.expr = parse_poly(cj.at("expr").get<std::string>());
      c.relation = parse_relation(cj.at("relation").get<std::string>());
      for (const auto& hy : cj.at("hypotheses")) c.hypotheses.push_back(parse_hypothesis(hy.get<std::string>()));
      c.provenance = cj.at("provenance").get<std::vector<std::string>>();
      c.p = cj.at("p").get<int>();
      if (cj.contains("condition"))
        c.condition = Condition{parse_poly(cj["condition"].at("rank").get<std::string>()),
                                cj["condition"].at("index").get<int>()};
      if (cj.contains("lead")) {
        auto v = parse_hodge_var(cj["lead"].get<std::string>());
        if (!v) fail(ErrorCode::Parse, "bad lead variable");
        c.lead = *v;
      }
      cat.constraints.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("catalog JSON: ") + e.what());
  }
  validate_profile(cat.profile);
  return cat;
}

}  // namespace hodge
