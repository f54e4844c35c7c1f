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


#include "hodge_bounds/hodge_bounds.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"
#include "hodge_bounds/reproduce.hpp"

struct hb_profile {
  hodge::ManifoldProfile value;
};
struct hb_catalog {
  hodge::Catalog value;
};
struct hb_diamond {
  hodge::HodgeDiamond value;
};

namespace {

thread_local std::string last_error;

hb_status fail_with(hb_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
hb_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HB_OK;
  } catch (const hodge::Error& e) {
    return fail_with(static_cast<hb_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail_with(HB_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(HB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(HB_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) hodge::fail(hodge::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

// Out-parameters start cleared so a failed call never leaves a stale
// pointer behind.
template <class T>
void need_out(T** p) {
  need(p, "out");
  *p = nullptr;
}

hodge::CatalogOptions catalog_options(const hb_catalog_options* o) {
  hb_catalog_options d;
  hb_catalog_options_default(&d);
  if (!o) o = &d;
  hodge::CatalogOptions opts;
  if (o->second_order) {
    opts = hodge::second_order_options();
  } else {
    if (o->order_cap >= 0) opts.order_cap = o->order_cap;
    if (o->schur_cap >= 0) opts.schur_cap = o->schur_cap;
  }
  if (o->only_p >= 0) opts.only_p = o->only_p;
  opts.rank_floors = o->rank_floors != 0;
  return opts;
}

hodge::MinimizeOptions minimize_options(const hb_minimize_options* o) {
  hodge::MinimizeOptions opts;
  if (!o) return opts;
  if (o->ceiling > 0) opts.ceiling = hodge::Integer(std::to_string(o->ceiling));
  opts.radius = o->radius;
  opts.verify = o->verify != 0;
  return opts;
}

hodge::HodgeVar parse_target(const char* text) {
  need(text, "target");
  auto v = hodge::parse_hodge_var(text);
  if (!v) hodge::fail(hodge::ErrorCode::Parse, std::string("not a Hodge number: ") + text);
  return *v;
}

void need_format(hb_format f, std::initializer_list<hb_format> allowed) {
  for (hb_format a : allowed)
    if (a == f) return;
  hodge::fail(hodge::ErrorCode::InvalidArgument, "output format not supported here");
}

std::string minimize_json(const hodge::MinimizeResult& r) {
  nlohmann::json j;
  j["target"] = r.target.name();
  j["value"] = hodge::to_string(r.value);
  j["witness"] = nlohmann::json::parse(hodge::render_diamond_json(r.witness));
  j["binding"] = r.binding;
  return j.dump(2);
}

std::string minimize_text(const hodge::MinimizeResult& r) {
  std::string out = r.target.name() + " >= " + hodge::to_string(r.value) + " (catalog-relative)\n";
  out += "witness " + hodge::render_diamond_json(r.witness) + "\n";
  for (const auto& tags : r.binding) {
    std::string line;
    for (const auto& t : tags) line += (line.empty() ? "" : ",") + t;
    out += "binding " + line + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* hb_version(void) { return "1.0.0"; }

const char* hb_status_name(hb_status status) {
  switch (status) {
    case HB_OK:
      return "ok";
    case HB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case HB_ERR_PARSE:
      return "parse error";
    case HB_ERR_SYMMETRY:
      return "symmetry violation";
    case HB_ERR_HYPOTHESIS:
      return "hypothesis not met";
    case HB_ERR_INAPPLICABLE:
      return "inapplicable";
    case HB_ERR_SEARCH_LIMIT:
      return "search limit exceeded";
    case HB_ERR_NOT_QUADRATIC:
      return "not quadratic";
    case HB_ERR_MISMATCH:
      return "mismatch";
    case HB_ERR_UNASSIGNED:
      return "unassigned variable";
    case HB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hb_last_error(void) { return last_error.c_str(); }

void hb_string_free(char* s) { std::free(s); }

hb_status hb_profile_new(int d, int q, const char* m, hb_profile** out) {
  return guarded([&] {
    need_out(out);
    need(m, "m");
    hodge::ManifoldProfile pf{d, q, hodge::parse_zero_locus_invariant(m), std::nullopt};
    hodge::validate_profile(pf);
    *out = new hb_profile{pf};
  });
}

hb_status hb_profile_set_albanese(hb_profile* pf, int k, int f) {
  return guarded([&] {
    need(pf, "profile");
    hodge::ManifoldProfile next = pf->value;
    next.albanese = hodge::AlbaneseFibers{k, f};
    hodge::validate_profile(next);
    pf->value = next;
  });
}

void hb_profile_free(hb_profile* pf) { delete pf; }

void hb_catalog_options_default(hb_catalog_options* opts) {
  if (!opts) return;
  opts->order_cap = -1;
  opts->schur_cap = -1;
  opts->only_p = -1;
  opts->second_order = 0;
  opts->rank_floors = 1;
}

hb_status hb_catalog_generate(const hb_profile* pf, const hb_catalog_options* opts, hb_catalog** out) {
  return guarded([&] {
    need(pf, "profile");
    need_out(out);
    *out = new hb_catalog{hodge::generate_catalog(pf->value, catalog_options(opts))};
  });
}

hb_status hb_catalog_parse_json(const char* text, hb_catalog** out) {
  return guarded([&] {
    need(text, "text");
    need_out(out);
    *out = new hb_catalog{hodge::parse_catalog_json(text)};
  });
}

hb_status hb_catalog_render(const hb_catalog* cat, hb_format format, char** out) {
  return guarded([&] {
    need(cat, "catalog");
    need_out(out);
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TEXT, HB_FORMAT_LATEX});
    if (format == HB_FORMAT_JSON)
      *out = dup(hodge::render_catalog_json(cat->value));
    else if (format == HB_FORMAT_TEXT)
      *out = dup(hodge::render_catalog_text(cat->value));
    else
      *out = dup(hodge::render_catalog_latex(cat->value));
  });
}

size_t hb_catalog_size(const hb_catalog* cat) { return cat ? cat->value.constraints.size() : 0; }

void hb_catalog_free(hb_catalog* cat) { delete cat; }

hb_status hb_diamond_parse_json(const char* text, hb_diamond** out) {
  return guarded([&] {
    need(text, "text");
    need_out(out);
    *out = new hb_diamond{hodge::parse_diamond_json(text)};
  });
}

hb_status hb_diamond_abelian(int d, hb_diamond** out) {
  return guarded([&] {
    need_out(out);
    *out = new hb_diamond{hodge::abelian_diamond(d)};
  });
}

int hb_diamond_dimension(const hb_diamond* dm) { return dm ? dm->value.dimension() : 0; }

hb_status hb_diamond_entry(const hb_diamond* dm, int p, int j, char** out) {
  return guarded([&] {
    need(dm, "diamond");
    need_out(out);
    const auto& v = dm->value.at(p, j);
    if (!v)
      hodge::fail(hodge::ErrorCode::Unassigned,
                  "entry (" + std::to_string(p) + "," + std::to_string(j) + ") is free");
    *out = dup(hodge::to_string(*v));
  });
}

hb_status hb_diamond_render_json(const hb_diamond* dm, char** out) {
  return guarded([&] {
    need(dm, "diamond");
    need_out(out);
    *out = dup(hodge::render_diamond_json(dm->value));
  });
}

hb_status hb_diamond_validate(const hb_diamond* dm, const hb_profile* pf, char** messages) {
  std::string lines;
  if (messages) *messages = nullptr;
  hb_status s = guarded([&] {
    need(dm, "diamond");
    need(pf, "profile");
    auto report = hodge::validate_diamond(dm->value, pf->value);
    for (const auto& v : report.violations) lines += v.message + "\n";
    if (messages) *messages = dup(lines);
  });
  if (s == HB_OK && !lines.empty()) {
    std::string first = lines.substr(0, lines.find('\n'));
    return fail_with(HB_ERR_SYMMETRY, first);
  }
  return s;
}

void hb_diamond_free(hb_diamond* dm) { delete dm; }

hb_status hb_check(const hb_diamond* dm, const hb_catalog* cat, hb_format format, int* feasible, char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    need(dm, "diamond");
    need(cat, "catalog");
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TEXT});
    auto r = hodge::check_diamond(dm->value, cat->value);
    if (feasible) *feasible = r.feasible ? 1 : 0;
    if (report) *report = dup(format == HB_FORMAT_JSON ? hodge::render_report_json(r) : hodge::render_report_text(r));
  });
}

hb_status hb_solve(const hb_catalog* cat, const char* source, const char* expr, const char* target,
                   hb_format format, char** out) {
  return guarded([&] {
    need(cat, "catalog");
    need_out(out);
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TEXT, HB_FORMAT_LATEX});
    std::optional<hodge::Constraint> c;
    if (source) {
      for (const auto& k : cat->value.constraints)
        if (std::find(k.provenance.begin(), k.provenance.end(), source) != k.provenance.end()) c = k;
      if (!c) hodge::fail(hodge::ErrorCode::InvalidArgument, std::string("no constraint tagged ") + source);
    } else {
      need(expr, "expr");
      int d = cat->value.profile.d;
      hodge::MultiPoly p =
          hodge::parse_poly(expr).rename([d](hodge::HodgeVar x) { return hodge::canonical_var(x, d); });
      c = hodge::make_constraint(p, hodge::Relation::NonNeg, {}, "expr", 0);
      if (!c) hodge::fail(hodge::ErrorCode::NotQuadratic, "expression is identically zero");
    }
    hodge::HodgeVar v{};
    if (target && *target)
      v = hodge::canonical_var(parse_target(target), cat->value.profile.d);
    else if (c->lead)
      v = *c->lead;
    else
      hodge::fail(hodge::ErrorCode::InvalidArgument, "no target given and the constraint has no lead entry");
    hodge::BoundExpr b = hodge::solve_quadratic_bound(*c, v);
    if (format == HB_FORMAT_JSON)
      *out = dup(hodge::render_bound_json(b));
    else if (format == HB_FORMAT_TEXT)
      *out = dup(hodge::to_string(b) + "\n");
    else
      *out = dup(hodge::to_latex(b) + "\n");
  });
}

void hb_minimize_options_default(hb_minimize_options* opts) {
  if (!opts) return;
  opts->ceiling = 0;
  opts->radius = -1;
  opts->verify = 1;
}

hb_status hb_minimize(const hb_catalog* cat, const char* target, const char* fixed, const hb_minimize_options* opts,
                      hb_format format, char** out) {
  return guarded([&] {
    need(cat, "catalog");
    need_out(out);
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TEXT});
    std::map<std::pair<int, int>, hodge::Integer> pins;
    if (fixed) {
      auto doc = nlohmann::json::parse(fixed);
      if (!doc.is_object()) hodge::fail(hodge::ErrorCode::Parse, "fixed entries must be a JSON object");
      for (const auto& [key, value] : doc.items()) {
        hodge::HodgeVar v = parse_target(key.c_str());
        std::string digits = value.is_string() ? value.get<std::string>() : value.dump();
        hodge::Integer z;
        if (z.set_str(digits, 10) != 0) hodge::fail(hodge::ErrorCode::Parse, "fixed value for " + key + " is not an integer");
        pins[{v.p, v.j}] = z;
      }
    }
    auto r = hodge::minimize_hodge_number(parse_target(target), cat->value.profile, cat->value.constraints, pins,
                                          minimize_options(opts));
    *out = dup(format == HB_FORMAT_JSON ? minimize_json(r) : minimize_text(r));
  });
}

hb_status hb_asymptotic(int d, const char* m, const char* target, const int* q_values, size_t count,
                        const hb_catalog_options* copts, const hb_minimize_options* mopts, hb_format format,
                        char** out) {
  return guarded([&] {
    need(m, "m");
    need_out(out);
    if (count > 0) need(q_values, "q_values");
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TSV, HB_FORMAT_TEXT});
    hodge::HodgeVar v = parse_target(target);
    std::vector<int> qs(q_values, q_values + count);
    auto rows = hodge::asymptotic_check(d, hodge::parse_zero_locus_invariant(m), v, qs, catalog_options(copts),
                                        minimize_options(mopts));
    if (format != HB_FORMAT_JSON) {
      *out = dup(hodge::render_asymptotic_tsv(v, rows));
      return;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"target", v.name()}, {"q", r.q}, {"minimum", hodge::to_string(r.minimum)}};
      if (r.form) {
        j["form"] = r.form->to_string();
        j["form_value"] = r.form_value;
        j["difference"] = r.difference;
      }
      list.push_back(std::move(j));
    }
    *out = dup(list.dump(2));
  });
}

hb_status hb_series(const hb_profile* pf, const char* kind, int p, int order, hb_format format, char** out) {
  return guarded([&] {
    need(pf, "profile");
    need(kind, "kind");
    need_out(out);
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TEXT});
    if (order <= 0) order = pf->value.q;
    std::string k = kind;
    hodge::ChernSeries cs = k == "gamma"   ? hodge::gamma_series(pf->value, p, order)
                            : k == "delta" ? hodge::delta_series(pf->value, p, order)
                            : k == "epsilon"
                                ? hodge::epsilon_series(pf->value, p, order)
                                : (hodge::fail(hodge::ErrorCode::InvalidArgument, "kind must be gamma, delta or epsilon"),
                                   hodge::ChernSeries{});
    if (format == HB_FORMAT_JSON) {
      nlohmann::json j;
      j["kind"] = hodge::to_string(cs.kind);
      j["p"] = cs.p;
      j["order"] = cs.series.order();
      j["vacuous"] = cs.vacuous;
      j["rank"] = cs.rank.to_string();
      std::vector<std::string> coeffs;
      for (const auto& c : cs.series.coefficients()) coeffs.push_back(c.to_string());
      j["coefficients"] = coeffs;
      *out = dup(j.dump(2));
    } else {
      std::string s = hodge::to_string(cs.kind) + "[p=" + std::to_string(cs.p) + "] order " +
                      std::to_string(cs.series.order()) + (cs.vacuous ? " (vacuous)" : "") + "\nrank " +
                      cs.rank.to_string() + "\n";
      for (int i = 0; i < cs.series.order(); ++i) s += "c_" + std::to_string(i) + " = " + cs.series[i].to_string() + "\n";
      *out = dup(s);
    }
  });
}

hb_status hb_reproduce(hb_format format, int* mismatches, char** out) {
  return guarded([&] {
    need_out(out);
    need_format(format, {HB_FORMAT_JSON, HB_FORMAT_TSV, HB_FORMAT_TEXT});
    auto rows = hodge::reproduce_published();
    int bad = 0;
    for (const auto& r : rows)
      if (r.verdict == hodge::Verdict::Mismatch) ++bad;
    if (mismatches) *mismatches = bad;
    *out = dup(format == HB_FORMAT_JSON ? hodge::render_reproduce_json(rows) : hodge::render_reproduce_tsv(rows));
  });
}

hb_status hb_regularity(int d, int p, int k, int f, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = hodge::regularity_bound(d, p, k, f);
  });
}

}  // extern "C"
