/* Copyright 2026 The mumall Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mumall/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace mumall {

struct Ordinal::Rep {
  std::vector<OrdinalTerm> terms;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

namespace {

std::atomic<std::size_t> g_depth_limit{64};

const std::vector<OrdinalTerm>& empty_terms() {
  static const std::vector<OrdinalTerm> kEmpty;
  return kEmpty;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceError("ordinal coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceError("ordinal coefficient overflow");
  return r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::size_t ordinal_depth_limit() { return g_depth_limit.load(); }
void set_ordinal_depth_limit(std::size_t limit) { g_depth_limit.store(limit); }

static Ordinal make_ordinal(std::vector<OrdinalTerm> terms);

Ordinal::Ordinal(std::uint64_t n) {
  if (n == 0) return;
  *this = make_ordinal({OrdinalTerm{Ordinal(), n}});
}

Ordinal Ordinal::omega() {
  static const Ordinal w = make_ordinal({OrdinalTerm{Ordinal(1), 1}});
  return w;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw DomainError("zero coefficient in CNF");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must be strictly descending");
  }
  return make_ordinal(std::move(terms));
}

Ordinal Ordinal::canonical(std::vector<OrdinalTerm> terms) {
  if (terms.empty()) return Ordinal();
  auto rep = std::make_shared<Rep>();
  std::size_t d = 0;
  std::size_t h = 0x51ed2705;
  for (const auto& term : terms) {
    d = std::max(d, term.exponent.depth());
    h = mix(h, term.exponent.hash());
    h = mix(h, std::hash<std::uint64_t>{}(term.coeff));
  }
  rep->depth = d + 1;
  if (rep->depth > ordinal_depth_limit())
    throw ResourceError("ordinal nesting depth exceeds the configured cap");
  rep->hash = h;
  rep->terms = std::move(terms);
  return Ordinal(std::shared_ptr<const Rep>(std::move(rep)));
}

static Ordinal make_ordinal(std::vector<OrdinalTerm> terms) {
  return Ordinal::canonical(std::move(terms));
}

const std::vector<OrdinalTerm>& Ordinal::terms() const {
  return rep_ ? rep_->terms : empty_terms();
}
std::size_t Ordinal::depth() const { return rep_ ? rep_->depth : 0; }
std::size_t Ordinal::hash() const { return rep_ ? rep_->hash : 0x2545f491; }

bool Ordinal::is_finite() const {
  return rep_ == nullptr ||
         (rep_->terms.size() == 1 && rep_->terms[0].exponent.is_zero());
}
bool Ordinal::is_successor() const {
  return rep_ != nullptr && rep_->terms.back().exponent.is_zero();
}
bool Ordinal::is_limit() const {
  return rep_ != nullptr && !rep_->terms.back().exponent.is_zero();
}
std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw DomainError("ordinal is not finite: " + str());
  return rep_ ? rep_->terms[0].coeff : 0;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (&x == &y) return std::strong_ordering::equal;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(x[i].exponent, y[i].exponent);
    if (c != 0) return c;
    if (x[i].coeff != y[i].coeff) return x[i].coeff <=> y[i].coeff;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}
std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto& bt = b.terms();
  const Ordinal& e = bt[0].exponent;
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    auto c = compare(t.exponent, e);
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back({e, checked_add(t.coeff, bt[0].coeff)});
        out.insert(out.end(), bt.begin() + 1, bt.end());
        return make_ordinal(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), bt.begin(), bt.end());
  return make_ordinal(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal result;
  const Ordinal& lead = a.terms()[0].exponent;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      std::vector<OrdinalTerm> ts = a.terms();
      ts[0].coeff = checked_mul(ts[0].coeff, t.coeff);
      part = make_ordinal(std::move(ts));
    } else {
      part = make_ordinal({OrdinalTerm{add(lead, t.exponent), t.coeff}});
    }
    result = add(result, part);
  }
  return result;
}

Ordinal omega_pow(const Ordinal& b) { return make_ordinal({OrdinalTerm{b, 1}}); }

Ordinal succ(const Ordinal& a) { return add(a, Ordinal(1)); }

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("pred of non-successor " + a.str());
  std::vector<OrdinalTerm> ts = a.terms();
  if (--ts.back().coeff == 0) ts.pop_back();
  return make_ordinal(std::move(ts));
}

static void merge_terms(std::vector<OrdinalTerm>& ts) {
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    return compare(x.exponent, y.exponent) > 0;
  });
  std::vector<OrdinalTerm> out;
  for (auto& t : ts) {
    if (!out.empty() && out.back().exponent == t.exponent)
      out.back().coeff = checked_add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
  }
  ts = std::move(out);
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<OrdinalTerm> ts = a.terms();
  ts.insert(ts.end(), b.terms().begin(), b.terms().end());
  merge_terms(ts);
  return make_ordinal(std::move(ts));
}

Ordinal natural_product(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  std::vector<OrdinalTerm> ts;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      ts.push_back({natural_sum(x.exponent, y.exponent),
                    checked_mul(x.coeff, y.coeff)});
  merge_terms(ts);
  return make_ordinal(std::move(ts));
}

Ordinal degree(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("degree of 0");
  return a.terms().front().exponent;
}

Ordinal lowest_degree(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("lowest degree of 0");
  return a.terms().back().exponent;
}

Ordinal alpha_omega_pow(const Ordinal& a) {
  if (a < Ordinal::omega()) throw DomainError("alpha_omega_pow needs a >= w");
  return omega_pow(mul(degree(a), Ordinal::omega()));
}

namespace {

// a^(x)n by repeated squaring.
Ordinal natural_power(const Ordinal& a, std::uint64_t n) {
  Ordinal result(1), base = a;
  while (n > 0) {
    if (n & 1) result = natural_product(result, base);
    n >>= 1;
    if (n > 0) base = natural_product(base, base);
  }
  return result;
}

// b = w*lambda + r with r finite; returns lambda.
Ordinal divide_by_omega(const Ordinal& b) {
  std::vector<OrdinalTerm> ts;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) break;
    Ordinal e = t.exponent.is_finite()
                    ? Ordinal(t.exponent.finite_value() - 1)
                    : t.exponent;
    ts.push_back({e, t.coeff});
  }
  return make_ordinal(std::move(ts));
}

bool is_omega_omega_power(const Ordinal& a) {
  const auto& ts = a.terms();
  if (ts.size() != 1 || ts[0].coeff != 1) return false;
  const auto& es = ts[0].exponent.terms();
  return es.size() == 1 && es[0].coeff == 1;
}

}  // namespace

IterProduct iter_natural_product(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return {Ordinal(1), false};
  if (b.is_finite()) return {natural_power(a, b.finite_value()), false};
  if (a.is_zero()) throw DomainError("0^(x)b with infinite b");
  if (a == Ordinal(1)) return {Ordinal(1), false};
  if (a.is_finite()) {
    // a^(x)(w*l + r) = w^l * a^r for finite a >= 2.
    Ordinal lam = divide_by_omega(b);
    std::uint64_t r = b.is_successor() ? b.terms().back().coeff : 0;
    Ordinal fin = natural_power(a, r);
    return {make_ordinal({OrdinalTerm{lam, fin.finite_value()}}), false};
  }
  if (is_omega_omega_power(a)) {
    const Ordinal& c = a.terms()[0].exponent.terms()[0].exponent;
    return {omega_pow(mul(omega_pow(c), b)), false};
  }
  Ordinal c = succ(degree(degree(a)));
  return {omega_pow(mul(omega_pow(c), b)), true};
}

// Printing -----------------------------------------------------------------

static std::string exponent_str(const Ordinal& e) {
  const auto& ts = e.terms();
  if (e.is_finite()) return std::to_string(e.finite_value());
  if (ts.size() == 1 && ts[0].coeff == 1) return e.str();
  return "(" + e.str() + ")";
}

std::string Ordinal::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : terms()) {
    if (!s.empty()) s += "+";
    if (t.exponent.is_zero()) {
      s += std::to_string(t.coeff);
      continue;
    }
    s += "w";
    if (t.exponent != Ordinal(1)) s += "^" + exponent_str(t.exponent);
    if (t.coeff != 1) s += "*" + std::to_string(t.coeff);
  }
  return s;
}

// Parsing ------------------------------------------------------------------

namespace {

struct OrdParser {
  std::string_view s;
  std::size_t& pos;

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("ordinal syntax error at " + std::to_string(pos) + ": " +
                      msg);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool is_omega_letter() {
    skip();
    if (pos >= s.size() || s[pos] != 'w') return false;
    return pos + 1 >= s.size() ||
           !(std::isalnum(static_cast<unsigned char>(s[pos + 1])) ||
             s[pos + 1] == '_');
  }
  std::uint64_t nat() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, d, &v))
        fail("natural number too large");
      ++pos;
    }
    return v;
  }
  Ordinal exponent() {
    skip();
    if (peek('(')) {
      ++pos;
      Ordinal o = ordinal(false);
      if (!peek(')')) fail("expected ')'");
      ++pos;
      return o;
    }
    if (is_omega_letter()) {
      ++pos;
      Ordinal e(1);
      if (peek('^')) {
        ++pos;
        e = exponent();
      }
      return omega_pow(e);
    }
    return Ordinal(nat());
  }
  OrdinalTerm term() {
    skip();
    if (is_omega_letter()) {
      ++pos;
      Ordinal e(1);
      if (peek('^')) {
        ++pos;
        e = exponent();
      }
      std::uint64_t c = 1;
      if (peek('*')) {
        ++pos;
        c = nat();
        if (c == 0) fail("zero coefficient");
      }
      return {e, c};
    }
    std::uint64_t n = nat();
    return {Ordinal(), n};
  }
  Ordinal ordinal(bool single) {
    std::vector<OrdinalTerm> ts;
    OrdinalTerm t = term();
    if (t.coeff == 0) return Ordinal();  // the literal 0 stands alone
    ts.push_back(t);
    while (!single && peek('+')) {
      ++pos;
      OrdinalTerm u = term();
      if (u.coeff == 0) fail("zero term in a sum");
      if (!(u.exponent < ts.back().exponent))
        fail("non-canonical form: exponents must strictly descend");
      ts.push_back(u);
    }
    return make_ordinal(std::move(ts));
  }
};

}  // namespace

Ordinal parse_ordinal_at(std::string_view text, std::size_t& pos,
                         bool single_term) {
  OrdParser p{text, pos};
  return p.ordinal(single_term);
}

Ordinal parse_ordinal(std::string_view text) {
  std::size_t pos = 0;
  Ordinal o = parse_ordinal_at(text, pos, false);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos != text.size())
    throw DomainError("ordinal syntax error at " + std::to_string(pos) +
                      ": trailing input");
  return o;
}

}  // namespace mumall
