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

#include "hodge_bounds/poly.hpp"

#include <algorithm>
#include <cctype>

#include "hodge_bounds/error.hpp"

namespace hodge {

Monomial::Monomial(HodgeVar v, int exponent) {
  if (exponent < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

int Monomial::exponent(HodgeVar v) const noexcept {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  VarOrder less;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && less(a->first, b->first))) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || less(b->first, a->first)) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::without(HodgeVar v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Monomial::to_latex() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += ' ';
    std::string base = v.latex();
    if (e != 1) {
      if (!v.is_irregularity()) base = "(" + base + ")";
      base += "^{" + std::to_string(e) + "}";
    }
    out += base;
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  VarOrder less;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return less(fa[i].first, fb[i].first);
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(HodgeVar v) { return term(Rational(1), Monomial(v)); }

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly out;
  if (c != 0) out.terms_.emplace(m, c);
  return out;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int MultiPoly::degree_in(HodgeVar v) const noexcept {
  int out = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.exponent(v));
  return out;
}

std::set<HodgeVar> MultiPoly::variables() const {
  std::set<HodgeVar> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const Assignment& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) fail(ErrorCode::Unassigned, "no value for " + v.name());
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(e));
      t *= power;
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::map<HodgeVar, MultiPoly>& values) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::term(c, Monomial());
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        rest = rest * Monomial(v, e);
      else
        t *= it->second.pow(static_cast<unsigned>(e));
    }
    out += t * MultiPoly::term(Rational(1), rest);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const Assignment& values) const {
  std::map<HodgeVar, MultiPoly> polys;
  for (const auto& [v, n] : values) polys.emplace(v, MultiPoly(Rational(n)));
  return substitute(polys);
}

MultiPoly MultiPoly::rename(const std::function<HodgeVar(HodgeVar)>& f) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [v, e] : m.factors()) renamed = renamed * Monomial(f(v), e);
    out.add_term(renamed, c);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(HodgeVar v) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(v), 0)) + 1);
  for (const auto& [m, c] : terms_)
    out[static_cast<std::size_t>(m.exponent(v))].add_term(m.without(v), c);
  return out;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  return make_rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / content());
}

namespace {

// Coefficient text for a non-constant monomial; empty for +-1.
std::string coefficient_prefix(const Rational& magnitude, bool latex) {
  if (magnitude == 1) return "";
  if (!latex) return to_string(magnitude) + "*";
  if (is_integer(magnitude)) return to_string(magnitude);
  return "\\tfrac{" + to_string(Integer(magnitude.get_num())) + "}{" +
         to_string(Integer(magnitude.get_den())) + "}";
}

std::string constant_text(const Rational& magnitude, bool latex) {
  if (!latex || is_integer(magnitude)) return to_string(magnitude);
  return "\\tfrac{" + to_string(Integer(magnitude.get_num())) + "}{" +
         to_string(Integer(magnitude.get_den())) + "}";
}

std::string render(const MultiPoly::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool negative = c < 0;
    Rational magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one())
      out += constant_text(magnitude, latex);
    else
      out += coefficient_prefix(magnitude, latex) + (latex ? m.to_latex() : m.to_string());
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string() const { return render(terms_, false); }

std::string MultiPoly::to_latex() const { return render(terms_, true); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly out = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "polynomial '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly out;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    out = product();
    if (negate) out = -out;
    for (;;) {
      if (accept('+'))
        out += product();
      else if (accept('-'))
        out -= product();
      else
        return out;
    }
  }

  MultiPoly product() {
    MultiPoly out = power();
    for (;;) {
      if (accept('*')) {
        out *= power();
      } else if (accept('/')) {
        MultiPoly divisor = power();
        if (!divisor.is_constant() || divisor.is_zero()) error("division by a non-constant or zero");
        out *= Rational(1 / divisor.constant_term());
      } else {
        return out;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected exponent");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 64) error("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'q') {
      ++pos_;
      return MultiPoly::variable(HodgeVar::irregularity());
    }
    if (c == 'h') {
      std::size_t start = pos_++;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
        if (pos_ < text_.size()) ++pos_;
      } else {
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
      }
      auto v = parse_hodge_var(text_.substr(start, pos_ - start));
      if (!v) error("bad variable name");
      return MultiPoly::variable(*v);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

bool PolyLess::operator()(const MultiPoly& a, const MultiPoly& b) const {
  MonomialOrder order;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (order(ia->first, ib->first)) return true;
    if (order(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace hodge
