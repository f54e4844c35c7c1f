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


// hodge-bounds command line front end. Talks to the engine only through the
// C interface.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodge_bounds/hodge_bounds.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInfeasible = 1;  // also: reproduce found a mismatch
constexpr int kBadInput = 2;
constexpr int kSymmetry = 3;
constexpr int kEngine = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(hb_status s) {
  switch (s) {
    case HB_ERR_PARSE:
    case HB_ERR_INVALID_ARGUMENT:
    case HB_ERR_UNASSIGNED:
      return kBadInput;
    case HB_ERR_SYMMETRY:
      return kSymmetry;
    default:
      return kEngine;
  }
}

void check(hb_status s) {
  if (s != HB_OK) throw Failure{exit_for(s), std::string(hb_status_name(s)) + ": " + hb_last_error()};
}

// Owns a char* handed out by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { hb_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

template <class T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p_); }
  T** out() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using Profile = Handle<hb_profile, hb_profile_free>;
using CatalogH = Handle<hb_catalog, hb_catalog_free>;
using Diamond = Handle<hb_diamond, hb_diamond_free>;

struct ProfileFlags {
  std::optional<int> d;
  std::optional<int> q;
  std::string m;
  std::optional<int> alb_k;
  std::optional<int> alb_f;

  void add(CLI::App* cmd, bool need_dq) {
    auto* od = cmd->add_option("-d,--dim", d, "dimension");
    auto* oq = cmd->add_option("-q,--irregularity", q, "irregularity q");
    if (need_dq) {
      od->required();
      oq->required();
    }
    cmd->add_option("-m,--zero-locus", m, "m(X): integer in [1, d] or inf")->required();
    cmd->add_option("--alb-k", alb_k, "generic Albanese fiber dimension");
    cmd->add_option("--alb-f", alb_f, "maximal Albanese fiber dimension");
  }

  void build(Profile& pf) const {
    check(hb_profile_new(*d, *q, m.c_str(), pf.out()));
    if (alb_k || alb_f) {
      if (!(alb_k && alb_f)) throw Failure{kBadInput, "--alb-k and --alb-f go together"};
      check(hb_profile_set_albanese(pf.get(), *alb_k, *alb_f));
    }
  }
};

struct CatalogFlags {
  std::string p = "all";
  int order_cap = -1;
  int schur_cap = -1;
  bool second_order = false;
  bool no_rank_floors = false;

  void add(CLI::App* cmd, bool with_p) {
    if (with_p) cmd->add_option("--p", p, "form degree to keep, or all");
    cmd->add_option("--order-cap", order_cap, "highest coefficient index (default min(q-1, 12))");
    cmd->add_option("--schur-cap", schur_cap, "highest Schur weight (default min(q-1, 12))");
    cmd->add_flag("--second-order", second_order, "only first and second order constraints");
    cmd->add_flag("--no-rank-floors", no_rank_floors, "skip rank floors from vanishing clauses");
  }

  hb_catalog_options options() const {
    hb_catalog_options o;
    hb_catalog_options_default(&o);
    o.order_cap = order_cap;
    o.schur_cap = schur_cap;
    o.second_order = second_order ? 1 : 0;
    o.rank_floors = no_rank_floors ? 0 : 1;
    if (p != "all") {
      try {
        std::size_t used = 0;
        o.only_p = std::stoi(p, &used);
        if (used != p.size()) throw std::invalid_argument(p);
      } catch (const std::exception&) {
        throw Failure{kBadInput, "--p must be an integer or all"};
      }
      if (o.only_p < 0) throw Failure{kBadInput, "--p out of range"};
    }
    return o;
  }
};

struct MinFlags {
  long long ceiling = 0;
  int radius = -1;
  bool no_verify = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--ceiling", ceiling, "search ceiling (default HODGE_BOUNDS_SEARCH_CEILING or 10^7)");
    cmd->add_option("--radius", radius, "verification box half-width");
    cmd->add_flag("--no-verify", no_verify, "skip the downward scan and box sweep");
  }

  hb_minimize_options options() const {
    hb_minimize_options o;
    hb_minimize_options_default(&o);
    o.ceiling = ceiling;
    o.radius = radius;
    o.verify = no_verify ? 0 : 1;
    return o;
  }
};

hb_format format_of(const std::string& f) {
  if (f == "json") return HB_FORMAT_JSON;
  if (f == "text") return HB_FORMAT_TEXT;
  if (f == "latex") return HB_FORMAT_LATEX;
  if (f == "tsv") return HB_FORMAT_TSV;
  throw Failure{kBadInput, "unknown format " + f};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kBadInput, "cannot write " + path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int q = std::stoi(item, &used);
      if (used != item.size() || q < 1) throw std::invalid_argument(item);
      qs.push_back(q);
    } catch (const std::exception&) {
      throw Failure{kBadInput, "bad --q-list entry '" + item + "'"};
    }
  }
  if (qs.empty()) throw Failure{kBadInput, "--q-list is empty"};
  return qs;
}

std::string fixed_json(const std::vector<std::string>& pins) {
  std::string out = "{";
  for (const auto& pin : pins) {
    auto eq = pin.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == pin.size())
      throw Failure{kBadInput, "--fixed expects name=value, got " + pin};
    std::string key = pin.substr(0, eq);
    std::string value = pin.substr(eq + 1);
    for (char c : key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Failure{kBadInput, "bad variable name " + key};
    if (out.size() > 1) out += ",";
    out += "\"" + key + "\":\"" + value + "\"";
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge number inequalities for irregular compact Kahler manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hb_version()));
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the result here instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "generate the constraint catalog");
  ProfileFlags gen_pf;
  CatalogFlags gen_cat;
  std::string gen_format = "text";
  gen_pf.add(gen, true);
  gen_cat.add(gen, true);
  gen->add_option("--format", gen_format, "json, text or latex");

  // check
  auto* chk = app.add_subcommand("check", "check a Hodge diamond against the catalog");
  ProfileFlags chk_pf;
  CatalogFlags chk_cat;
  std::string chk_diamond;
  std::string chk_format = "text";
  chk_pf.add(chk, false);
  chk_cat.add(chk, false);
  chk->add_option("--diamond", chk_diamond, "diamond JSON file, - for stdin")->required();
  chk->add_option("--format", chk_format, "json or text");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one constraint for a lower bound");
  ProfileFlags solve_pf;
  CatalogFlags solve_cat;
  std::string solve_source;
  std::string solve_expr;
  std::string solve_target;
  std::string solve_format = "text";
  solve_pf.add(solve, true);
  solve_cat.add(solve, false);
  auto* src_opt = solve->add_option("--source", solve_source, "provenance tag of a catalog constraint");
  auto* expr_opt = solve->add_option("--expr", solve_expr, "polynomial read as expr >= 0");
  src_opt->excludes(expr_opt);
  solve->add_option("--target", solve_target, "variable to solve for, e.g. h11; defaults to the lead entry of --source");
  solve->add_option("--format", solve_format, "json, text or latex");

  // min
  auto* mn = app.add_subcommand("min", "minimize one Hodge number");
  ProfileFlags min_pf;
  CatalogFlags min_cat;
  MinFlags min_flags;
  std::string min_target;
  std::vector<std::string> min_fixed;
  std::string min_qs;
  std::string min_format = "text";
  min_pf.add(mn, false);
  min_cat.add(mn, false);
  min_flags.add(mn);
  mn->add_option("--target", min_target, "entry to minimize, e.g. h12")->required();
  mn->add_option("--fixed", min_fixed, "pin an entry, e.g. h02=7");
  mn->add_option("--q-list", min_qs, "comma separated q values; prints the asymptotic comparison");
  mn->add_option("--format", min_format, "json, text or tsv");

  // series
  auto* ser = app.add_subcommand("series", "expand a Chern series");
  ProfileFlags ser_pf;
  std::string ser_kind;
  int ser_p = 0;
  int ser_order = 0;
  std::string ser_format = "text";
  ser_pf.add(ser, true);
  ser->add_option("--kind", ser_kind, "gamma, delta or epsilon")->required();
  ser->add_option("-p,--form-degree", ser_p, "form degree p")->required();
  ser->add_option("--order", ser_order, "truncation order (default q)");
  ser->add_option("--format", ser_format, "json or text");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "derive the published inequality tables and compare");
  std::string rep_format = "tsv";
  rep->add_option("--format", rep_format, "tsv or json");

  // regularity
  auto* reg = app.add_subcommand("regularity", "regularity bound d - p + max{k, f-1}");
  int reg_d = 0, reg_p = 0, reg_k = 0, reg_f = 0;
  reg->add_option("-d,--dim", reg_d, "dimension")->required();
  reg->add_option("-p,--form-degree", reg_p, "form degree p")->required();
  reg->add_option("-k", reg_k, "generic Albanese fiber dimension")->required();
  reg->add_option("-f", reg_f, "maximal Albanese fiber dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) {
      Profile pf;
      gen_pf.build(pf);
      hb_catalog_options o = gen_cat.options();
      CatalogH cat;
      check(hb_catalog_generate(pf.get(), &o, cat.out()));
      Text t;
      check(hb_catalog_render(cat.get(), format_of(gen_format), t.out()));
      emit(t.str(), out_path);
      return kOk;
    }

    if (*chk) {
      Diamond dm;
      check(hb_diamond_parse_json(read_input(chk_diamond).c_str(), dm.out()));
      int d = hb_diamond_dimension(dm.get());
      if (chk_pf.d && *chk_pf.d != d) throw Failure{kBadInput, "-d disagrees with the diamond"};
      chk_pf.d = d;
      if (!chk_pf.q) {
        Text q;
        hb_status s = hb_diamond_entry(dm.get(), 0, 1, q.out());
        if (s != HB_OK) throw Failure{kBadInput, "give -q or fill in h^{0,1}"};
        chk_pf.q = std::stoi(q.str());
      }
      Profile pf;
      chk_pf.build(pf);
      Text problems;
      hb_status vs = hb_diamond_validate(dm.get(), pf.get(), problems.out());
      if (vs == HB_ERR_SYMMETRY) {
        std::cerr << problems.str();
        return kSymmetry;
      }
      check(vs);
      hb_catalog_options o = chk_cat.options();
      CatalogH cat;
      check(hb_catalog_generate(pf.get(), &o, cat.out()));
      int feasible = 0;
      Text report;
      check(hb_check(dm.get(), cat.get(), format_of(chk_format), &feasible, report.out()));
      emit(report.str(), out_path);
      return feasible ? kOk : kInfeasible;
    }

    if (*solve) {
      if (solve_source.empty() == solve_expr.empty()) throw Failure{kBadInput, "give exactly one of --source, --expr"};
      Profile pf;
      solve_pf.build(pf);
      hb_catalog_options o = solve_cat.options();
      CatalogH cat;
      check(hb_catalog_generate(pf.get(), &o, cat.out()));
      Text t;
      check(hb_solve(cat.get(), solve_source.empty() ? nullptr : solve_source.c_str(),
                     solve_expr.empty() ? nullptr : solve_expr.c_str(), solve_target.empty() ? nullptr : solve_target.c_str(),
                     format_of(solve_format), t.out()));
      emit(t.str(), out_path);
      return kOk;
    }

    if (*mn) {
      hb_catalog_options co = min_cat.options();
      hb_minimize_options mo = min_flags.options();
      Text t;
      if (!min_qs.empty()) {
        if (!min_pf.d) throw Failure{kBadInput, "--q-list needs -d"};
        if (!min_fixed.empty()) throw Failure{kBadInput, "--fixed cannot be combined with --q-list"};
        std::vector<int> qs = parse_q_list(min_qs);
        hb_format f = min_format == "text" ? HB_FORMAT_TSV : format_of(min_format);
        check(hb_asymptotic(*min_pf.d, min_pf.m.c_str(), min_target.c_str(), qs.data(), qs.size(), &co, &mo, f,
                            t.out()));
      } else {
        if (!min_pf.d || !min_pf.q) throw Failure{kBadInput, "min needs -d and -q (or --q-list)"};
        Profile pf;
        min_pf.build(pf);
        CatalogH cat;
        check(hb_catalog_generate(pf.get(), &co, cat.out()));
        std::string pins = fixed_json(min_fixed);
        check(hb_minimize(cat.get(), min_target.c_str(), min_fixed.empty() ? nullptr : pins.c_str(), &mo,
                          format_of(min_format), t.out()));
      }
      emit(t.str(), out_path);
      return kOk;
    }

    if (*ser) {
      Profile pf;
      ser_pf.build(pf);
      Text t;
      check(hb_series(pf.get(), ser_kind.c_str(), ser_p, ser_order, format_of(ser_format), t.out()));
      emit(t.str(), out_path);
      return kOk;
    }

    if (*rep) {
      int mismatches = 0;
      Text t;
      check(hb_reproduce(format_of(rep_format), &mismatches, t.out()));
      emit(t.str(), out_path);
      if (mismatches > 0) {
        std::cerr << mismatches << " row(s) disagree with the derivation\n";
        return kInfeasible;
      }
      return kOk;
    }

    if (*reg) {
      int bound = 0;
      hb_status s = hb_regularity(reg_d, reg_p, reg_k, reg_f, &bound);
      if (s == HB_ERR_INAPPLICABLE) {
        emit("inapplicable: p <= l\n", out_path);
        return kOk;
      }
      check(s);
      emit(std::to_string(bound) + "\n", out_path);
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "hodge-bounds: " << f.message << "\n";
    return f.exit_code;
  }
  return kBadInput;
}
