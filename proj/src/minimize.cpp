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

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "hodge_bounds/analysis.hpp"
#include "hodge_bounds/error.hpp"

namespace hodge {

Integer default_search_ceiling() {
  if (const char* env = std::getenv("HODGE_BOUNDS_SEARCH_CEILING")) {
    Integer v;
    if (v.set_str(env, 10) == 0 && v > 0) return v;
    fail(ErrorCode::InvalidArgument, std::string("HODGE_BOUNDS_SEARCH_CEILING is not a positive integer: ") + env);
  }
  return Integer(10000000);
}

namespace {

// Integer polynomial over indices into the variable table, q already
// substituted.
struct CompiledPoly {
  struct Term {
    Integer coef;
    std::vector<std::pair<std::size_t, unsigned long>> factors;
  };
  std::vector<Term> terms;

  Integer eval(const std::vector<Integer>& x) const {
    Integer sum = 0;
    Integer t;
    Integer pw;
    for (const auto& term : terms) {
      t = term.coef;
      for (const auto& [i, e] : term.factors) {
        if (e == 1) {
          t *= x[i];
        } else {
          mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), e);
          t *= pw;
        }
      }
      sum += t;
    }
    return sum;
  }

  bool mentions(std::size_t i) const {
    for (const auto& term : terms)
      for (const auto& f : term.factors)
        if (f.first == i) return true;
    return false;
  }
};

struct Compiled {
  const Constraint* source = nullptr;
  CompiledPoly expr;
  std::optional<CompiledPoly> rank;
  int index = 0;
  std::optional<std::size_t> lead;
  std::vector<std::size_t> vars;  // variables of expr (or of rank for a guarded zero)
};

class Problem {
 public:
  Problem(HodgeVar target, const ManifoldProfile& pf, const std::vector<Constraint>& constraints,
          const std::map<std::pair<int, int>, Integer>& fixed, Integer ceiling)
      : pf_(pf), ceiling_(std::move(ceiling)) {
    for (int p = 0; p <= pf.d; ++p)
      for (int j = 0; j <= pf.d; ++j) {
        HodgeVar v = canonical_var(HodgeVar{p, j}, pf.d);
        if ((v.p == 0 && v.j == 0) || v.is_irregularity()) continue;
        if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
      }
    pinned_.assign(vars_.size(), false);
    base_.assign(vars_.size(), Integer(0));
    HodgeDiamond pins = partial_diamond(pf.d, fixed);
    for (int p = 0; p <= pf.d; ++p)
      for (int j = 0; j <= pf.d; ++j) {
        const auto& value = pins.at(p, j);
        if (!value) continue;
        if (*value < 0) fail(ErrorCode::InvalidArgument, "fixed entries must be non-negative");
        HodgeVar v = canonical_var(HodgeVar{p, j}, pf.d);
        if (v.p == 0 && v.j == 0) {
          if (*value != 1) fail(ErrorCode::Symmetry, "h^{0,0} must be 1");
          continue;
        }
        if (v.is_irregularity()) {
          if (*value != pf.q) fail(ErrorCode::Symmetry, "fixed h^{0,1} differs from q");
          continue;
        }
        std::size_t i = index_of(v);
        pinned_[i] = true;
        base_[i] = *value;
      }
    target_ = index_of(target);
    for (const auto& c : constraints) {
      if (!c.hypotheses_hold(pf)) continue;
      Compiled k;
      k.source = &c;
      k.expr = compile(c.expr);
      if (c.condition) {
        k.rank = compile(c.condition->rank);
        k.index = c.condition->index;
      }
      if (c.lead && !c.lead->is_irregularity()) {
        HodgeVar lv = canonical_var(*c.lead, pf.d);
        if (!(lv.p == 0 && lv.j == 0) && !lv.is_irregularity()) k.lead = index_of(lv);
      }
      const CompiledPoly& watched = (c.relation == Relation::Zero && k.rank) ? *k.rank : k.expr;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (watched.mentions(i)) k.vars.push_back(i);
      compiled_.push_back(std::move(k));
    }
  }

  std::size_t target() const { return target_; }
  bool target_pinned() const { return pinned_[target_]; }
  const Integer& pinned_value(std::size_t i) const { return base_[i]; }
  const std::vector<HodgeVar>& vars() const { return vars_; }
  const Integer& ceiling() const { return ceiling_; }

  bool active(const Compiled& k, const std::vector<Integer>& x) const {
    return !k.rank || k.rank->eval(x) < k.index;
  }

  bool satisfied(const Compiled& k, const std::vector<Integer>& x) const {
    if (!active(k, x)) return true;
    Integer v = k.expr.eval(x);
    return k.source->relation == Relation::NonNeg ? v >= 0 : v == 0;
  }

  bool all_satisfied(const std::vector<Integer>& x) const {
    return std::all_of(compiled_.begin(), compiled_.end(), [&](const Compiled& k) { return satisfied(k, x); });
  }

  std::vector<const Constraint*> violated(const std::vector<Integer>& x) const {
    std::vector<const Constraint*> out;
    for (const auto& k : compiled_)
      if (!satisfied(k, x)) out.push_back(k.source);
    return out;
  }

  /// Least fixed point above the pins with target = t; nullopt when some
  /// constraint cannot be repaired below the ceiling.
  std::optional<std::vector<Integer>> propagate(const Integer& t) const {
    std::vector<Integer> x = base_;
    x[target_] = t;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& k : compiled_) {
        if (satisfied(k, x)) continue;
        if (k.source->relation == Relation::Zero && !k.rank) return std::nullopt;
        auto ok = [&](const std::vector<Integer>& y) {
          if (k.source->relation == Relation::Zero) return !active(k, y);
          return k.expr.eval(y) >= 0;
        };
        if (!repair(k, x, ok)) return std::nullopt;
        changed = true;
      }
    }
    return x;
  }

  /// Every point of the box around x with the target at t, other pins held.
  bool box_has_solution(const std::vector<Integer>& x, const Integer& t, int radius) const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != target_ && !pinned_[i]) free.push_back(i);
    std::vector<Integer> y = x;
    y[target_] = t;
    std::function<bool(std::size_t)> rec = [&](std::size_t n) -> bool {
      if (n == free.size()) return all_satisfied(y);
      std::size_t i = free[n];
      for (long off = -radius; off <= radius; ++off) {
        y[i] = x[i] + off;
        if (y[i] < 0 || y[i] > ceiling_) continue;
        if (rec(n + 1)) return true;
      }
      y[i] = x[i];
      return false;
    };
    return rec(0);
  }

  std::size_t free_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != target_ && !pinned_[i]) ++n;
    return n;
  }

 private:
  std::size_t index_of(HodgeVar v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) fail(ErrorCode::InvalidArgument, "no variable " + v.name() + " in this dimension");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  CompiledPoly compile(const MultiPoly& poly) const {
    Assignment qa{{HodgeVar::irregularity(), Integer(pf_.q)}};
    MultiPoly sub = poly.substitute(qa);
    // Positive scaling keeps the sign, so clearing denominators is safe.
    Integer den = 1;
    for (const auto& [m, c] : sub.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    CompiledPoly out;
    for (const auto& [m, c] : sub.terms()) {
      CompiledPoly::Term term;
      Rational scaled = c * den;
      term.coef = scaled.get_num();
      for (const auto& [v, e] : m.factors()) term.factors.emplace_back(index_of(v), static_cast<unsigned long>(e));
      out.terms.push_back(std::move(term));
    }
    return out;
  }

  bool raisable(std::size_t i) const { return i != target_ && !pinned_[i]; }

  // Smallest value of x[i] above its current one passing ok, assuming ok is
  // monotone from the first passing point found by galloping.
  bool raise(std::size_t i, std::vector<Integer>& x, const std::function<bool(const std::vector<Integer>&)>& ok) const {
    Integer start = x[i];
    Integer lo = start;  // known failing
    Integer step = 1;
    Integer hi;
    for (;;) {
      Integer probe = start + step;
      if (probe > ceiling_) probe = ceiling_;
      if (probe <= lo) {
        x[i] = start;
        return false;
      }
      x[i] = probe;
      if (ok(x)) {
        hi = probe;
        break;
      }
      lo = probe;
      if (probe == ceiling_) {
        x[i] = start;
        return false;
      }
      step *= 2;
    }
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      x[i] = mid;
      if (ok(x))
        hi = mid;
      else
        lo = mid;
    }
    x[i] = hi;
    return true;
  }

  bool repair(const Compiled& k, std::vector<Integer>& x,
              const std::function<bool(const std::vector<Integer>&)>& ok) const {
    if (k.lead && raisable(*k.lead) && raise(*k.lead, x, ok)) return true;
    for (std::size_t i : k.vars)
      if (raisable(i) && (!k.lead || i != *k.lead) && raise(i, x, ok)) return true;
    return false;
  }

  ManifoldProfile pf_;
  Integer ceiling_;
  std::vector<HodgeVar> vars_;
  std::vector<bool> pinned_;
  std::vector<Integer> base_;
  std::size_t target_ = 0;
  std::vector<Compiled> compiled_;
};

HodgeDiamond witness_of(const ManifoldProfile& pf, const std::vector<HodgeVar>& vars, const std::vector<Integer>& x) {
  HodgeDiamond dm(pf.d);
  for (int p = 0; p <= pf.d; ++p)
    for (int j = 0; j <= pf.d; ++j) {
      HodgeVar v = canonical_var(HodgeVar{p, j}, pf.d);
      if (v.p == 0 && v.j == 0) {
        dm.set(p, j, 1);
      } else if (v.is_irregularity()) {
        dm.set(p, j, pf.q);
      } else {
        auto it = std::find(vars.begin(), vars.end(), v);
        dm.set(p, j, x[static_cast<std::size_t>(it - vars.begin())]);
      }
    }
  return dm;
}

}  // namespace

MinimizeResult minimize_hodge_number(HodgeVar target, const ManifoldProfile& pf,
                                     const std::vector<Constraint>& constraints,
                                     const std::map<std::pair<int, int>, Integer>& fixed,
                                     const MinimizeOptions& options) {
  validate_profile(pf);
  if (target.p < 0 || target.j < 0 || target.p > pf.d || target.j > pf.d)
    fail(ErrorCode::InvalidArgument, "target " + target.name() + " outside the diamond");
  HodgeVar canon = canonical_var(target, pf.d);
  MinimizeResult result{target, Integer(0), HodgeDiamond(pf.d), {}};
  if ((canon.p == 0 && canon.j == 0) || canon.is_irregularity()) {
    // Constant entries: only the pins and the profile decide them.
    result.value = canon.is_irregularity() ? Integer(pf.q) : Integer(1);
    std::map<std::pair<int, int>, Integer> pins = fixed;
    HodgeDiamond dm = partial_diamond(pf.d, pins);
    for (int p = 0; p <= pf.d; ++p)
      for (int j = 0; j <= pf.d; ++j) {
        HodgeVar v = canonical_var(HodgeVar{p, j}, pf.d);
        if (v.p == 0 && v.j == 0) dm.set(p, j, 1);
        if (v.is_irregularity()) dm.set(p, j, pf.q);
      }
    result.witness = dm;
    return result;
  }

  Integer ceiling = options.ceiling ? *options.ceiling : default_search_ceiling();
  Problem prob(canon, pf, constraints, fixed, ceiling);
  const std::size_t t = prob.target();

  std::optional<std::vector<Integer>> best;
  Integer value;
  if (prob.target_pinned()) {
    value = prob.pinned_value(t);
    best = prob.propagate(value);
    if (!best) fail(ErrorCode::SearchLimit, "no completion satisfies the constraints with the given pins");
  } else {
    // Gallop to the first feasible value, then bisect.
    Integer lo = -1;
    Integer hi = 0;
    for (Integer step = 1;; step *= 2) {
      if (auto x = prob.propagate(hi)) {
        best = std::move(x);
        break;
      }
      lo = hi;
      if (hi == ceiling)
        fail(ErrorCode::SearchLimit,
             "no feasible value of " + target.name() + " up to the search ceiling " + to_string(ceiling));
      hi = std::min(Integer(hi + step), ceiling);
    }
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (auto x = prob.propagate(mid)) {
        hi = mid;
        best = std::move(x);
      } else {
        lo = mid;
      }
    }
    value = hi;
  }
  std::vector<Integer> x = *best;
  if (!prob.all_satisfied(x)) fail(ErrorCode::Mismatch, "propagation returned a point that violates a constraint");

  if (options.verify && !prob.target_pinned() && value > 0) {
    int radius = options.radius >= 0 ? options.radius : (prob.free_count() <= 6 ? 2 : 1);
    int scan = 4 * std::max(radius, 1);
    for (Integer s = value - 1; s >= 0 && s >= value - scan; --s)
      if (prob.propagate(s))
        fail(ErrorCode::Mismatch, "greedy search is not monotone: " + target.name() + " = " + to_string(s) +
                                      " is feasible below " + to_string(value));
    if (prob.box_has_solution(x, value - 1, radius))
      fail(ErrorCode::Mismatch, "box sweep found a completion with " + target.name() + " = " +
                                    to_string(Integer(value - 1)));
  }

  result.value = value;
  result.witness = witness_of(pf, prob.vars(), x);
  if (value > 0) {
    std::vector<Integer> below = x;
    below[t] = value - 1;
    for (const Constraint* c : prob.violated(below)) result.binding.push_back(c->provenance);
  }
  return result;
}

}  // namespace hodge
