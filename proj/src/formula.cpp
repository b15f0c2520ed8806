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

#include <algorithm>
#include <functional>

#include "mumall/syntax.hpp"

namespace mumall {

struct Formula::Node {
  Kind kind = Kind::One;
  std::uint32_t index = 0;
  std::string name;
  Annotation ann;
  Formula a, b;
  std::size_t hash = 0;
  std::uint32_t size = 1;
  std::uint32_t loose = 0;
  bool free = false;
  bool symbolic = false;
  bool finite = true;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Annotation Annotation::variable(std::string name) {
  Annotation a;
  a.var = std::move(name);
  return a;
}

std::string Annotation::str() const {
  if (symbolic()) return var;
  if (value.terms().size() > 1) return "(" + value.str() + ")";
  return value.str();
}

std::size_t Annotation::hash() const {
  return symbolic() ? mix(0x77, std::hash<std::string>{}(var)) : value.hash();
}

std::strong_ordering compare(const Annotation& a, const Annotation& b) {
  if (a.symbolic() != b.symbolic())
    return a.symbolic() ? std::strong_ordering::greater
                        : std::strong_ordering::less;
  if (a.symbolic()) return a.var <=> b.var;
  return compare(a.value, b.value);
}

Formula Formula::make(Node n) {
  std::size_t h = mix(0x1234, static_cast<std::size_t>(n.kind));
  switch (n.kind) {
    case Kind::Var:
      n.free = true;
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Bound:
      n.loose = n.index + 1;
      h = mix(h, n.index);
      break;
    case Kind::Atom:
    case Kind::NegAtom:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Tensor:
    case Kind::Par:
    case Kind::Plus:
    case Kind::With:
      n.size = 1 + n.a.size() + n.b.size();
      n.loose = std::max(n.a.loose(), n.b.loose());
      n.free = n.a.has_free_vars() || n.b.has_free_vars();
      n.symbolic = n.a.has_symbolic() || n.b.has_symbolic();
      n.finite = n.a.finite_annotations() && n.b.finite_annotations();
      h = mix(mix(h, n.a.hash()), n.b.hash());
      break;
    case Kind::Mu:
    case Kind::Nu:
      n.size = 1 + n.a.size();
      n.loose = n.a.loose() > 0 ? n.a.loose() - 1 : 0;
      n.free = n.a.has_free_vars();
      n.symbolic = n.ann.symbolic() || n.a.has_symbolic();
      n.finite = n.ann.finite() && n.a.finite_annotations();
      h = mix(mix(h, n.ann.hash()), n.a.hash());
      break;
    default:
      break;
  }
  n.hash = h;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::var(std::string name) {
  Node n;
  n.kind = Kind::Var;
  n.name = std::move(name);
  return make(std::move(n));
}

Formula Formula::bound(std::uint32_t index) {
  Node n;
  n.kind = Kind::Bound;
  n.index = index;
  return make(std::move(n));
}

Formula Formula::atom(std::string name) {
  Node n;
  n.kind = Kind::Atom;
  n.name = std::move(name);
  return make(std::move(n));
}

Formula Formula::neg_atom(std::string name) {
  Node n;
  n.kind = Kind::NegAtom;
  n.name = std::move(name);
  return make(std::move(n));
}

static Formula unit(Kind k) {
  static const Formula kOne = Formula::binary(Kind::One, {}, {});
  static const Formula kBot = Formula::binary(Kind::Bot, {}, {});
  static const Formula kZero = Formula::binary(Kind::Zero, {}, {});
  static const Formula kTop = Formula::binary(Kind::Top, {}, {});
  switch (k) {
    case Kind::One: return kOne;
    case Kind::Bot: return kBot;
    case Kind::Zero: return kZero;
    default: return kTop;
  }
}

Formula Formula::one() { return unit(Kind::One); }
Formula Formula::bot() { return unit(Kind::Bot); }
Formula Formula::zero() { return unit(Kind::Zero); }
Formula Formula::top() { return unit(Kind::Top); }

Formula Formula::binary(Kind k, Formula a, Formula b) {
  Node n;
  n.kind = k;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

Formula Formula::fix(Kind k, Annotation ann, std::string hint, Formula body) {
  Node n;
  n.kind = k;
  n.ann = std::move(ann);
  n.name = std::move(hint);
  n.a = std::move(body);
  return make(std::move(n));
}

Formula Formula::mu(Annotation ann, const std::string& x, const Formula& body) {
  return fix(Kind::Mu, std::move(ann), x, abstract(body, x));
}

Formula Formula::nu(Annotation ann, const std::string& x, const Formula& body) {
  return fix(Kind::Nu, std::move(ann), x, abstract(body, x));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::uint32_t Formula::index() const { return node_->index; }
const Annotation& Formula::annotation() const { return node_->ann; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
std::size_t Formula::size() const { return node_ ? node_->size : 0; }
std::uint32_t Formula::loose() const { return node_ ? node_->loose : 0; }
bool Formula::has_free_vars() const { return node_ && node_->free; }
bool Formula::has_symbolic() const { return node_ && node_->symbolic; }
bool Formula::finite_annotations() const { return !node_ || node_->finite; }

bool Formula::is_literal() const {
  return kind() == Kind::Atom || kind() == Kind::NegAtom;
}
bool Formula::is_binary() const {
  Kind k = kind();
  return k == Kind::Tensor || k == Kind::Par || k == Kind::Plus ||
         k == Kind::With;
}
bool Formula::is_fixpoint() const {
  return kind() == Kind::Mu || kind() == Kind::Nu;
}
bool Formula::is_unit() const {
  Kind k = kind();
  return k == Kind::One || k == Kind::Bot || k == Kind::Zero || k == Kind::Top;
}

static std::strong_ordering cmp(const Formula& x, const Formula& y) {
  if (x.ptr() == y.ptr()) return std::strong_ordering::equal;
  if (!x.ptr() || !y.ptr())
    return x.ptr() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (x.kind() != y.kind()) return x.kind() <=> y.kind();
  switch (x.kind()) {
    case Kind::Var:
    case Kind::Atom:
    case Kind::NegAtom:
      return x.name() <=> y.name();
    case Kind::Bound:
      return x.index() <=> y.index();
    case Kind::Tensor:
    case Kind::Par:
    case Kind::Plus:
    case Kind::With: {
      auto c = cmp(x.left(), y.left());
      if (c != 0) return c;
      return cmp(x.right(), y.right());
    }
    case Kind::Mu:
    case Kind::Nu: {
      auto c = compare(x.annotation(), y.annotation());
      if (c != 0) return c;
      return cmp(x.body(), y.body());
    }
    default:
      return std::strong_ordering::equal;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.ptr() == b.ptr()) return true;
  if (a.hash() != b.hash()) return false;
  return cmp(a, b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  return cmp(a, b);
}

Formula negate(const Formula& a) {
  switch (a.kind()) {
    case Kind::Var:
    case Kind::Bound:
      return a;
    case Kind::Atom:
      return Formula::neg_atom(a.name());
    case Kind::NegAtom:
      return Formula::atom(a.name());
    case Kind::One: return Formula::bot();
    case Kind::Bot: return Formula::one();
    case Kind::Zero: return Formula::top();
    case Kind::Top: return Formula::zero();
    case Kind::Tensor:
      return Formula::par(negate(a.left()), negate(a.right()));
    case Kind::Par:
      return Formula::tensor(negate(a.left()), negate(a.right()));
    case Kind::Plus:
      return Formula::with(negate(a.left()), negate(a.right()));
    case Kind::With:
      return Formula::plus(negate(a.left()), negate(a.right()));
    case Kind::Mu:
      return Formula::fix(Kind::Nu, a.annotation(), a.name(), negate(a.body()));
    case Kind::Nu:
      return Formula::fix(Kind::Mu, a.annotation(), a.name(), negate(a.body()));
  }
  return a;
}

namespace {

// Generic bottom-up rebuild that reuses unchanged nodes.
Formula rebuild(const Formula& a, const Formula& l, const Formula& r) {
  if (l.ptr() == a.left().ptr() && r.ptr() == a.right().ptr()) return a;
  return Formula::binary(a.kind(), l, r);
}

Formula rebuild_fix(const Formula& a, const Annotation& ann, const Formula& body) {
  if (body.ptr() == a.body().ptr() && ann == a.annotation()) return a;
  return Formula::fix(a.kind(), ann, a.name(), body);
}

Formula subst_rec(const Formula& a, const std::string& x, const Formula& b) {
  if (!a.has_free_vars()) return a;
  if (a.kind() == Kind::Var) return a.name() == x ? b : a;
  if (a.is_binary())
    return rebuild(a, subst_rec(a.left(), x, b), subst_rec(a.right(), x, b));
  if (a.is_fixpoint())
    return rebuild_fix(a, a.annotation(), subst_rec(a.body(), x, b));
  return a;
}

Formula open_rec(const Formula& a, std::uint32_t depth, const Formula& b) {
  if (a.loose() <= depth) return a;
  if (a.kind() == Kind::Bound) {
    if (a.index() == depth) return b;
    return Formula::bound(a.index() - 1);
  }
  if (a.is_binary())
    return rebuild(a, open_rec(a.left(), depth, b), open_rec(a.right(), depth, b));
  if (a.is_fixpoint())
    return rebuild_fix(a, a.annotation(), open_rec(a.body(), depth + 1, b));
  return a;
}

Formula abstract_rec(const Formula& a, const std::string& x, std::uint32_t depth) {
  if (!a.has_free_vars() && a.loose() <= depth) return a;
  switch (a.kind()) {
    case Kind::Var:
      return a.name() == x ? Formula::bound(depth) : a;
    case Kind::Bound:
      return a.index() >= depth ? Formula::bound(a.index() + 1) : a;
    case Kind::Mu:
    case Kind::Nu:
      return rebuild_fix(a, a.annotation(), abstract_rec(a.body(), x, depth + 1));
    default:
      if (a.is_binary())
        return rebuild(a, abstract_rec(a.left(), x, depth),
                       abstract_rec(a.right(), x, depth));
      return a;
  }
}

Formula ord_rec(const Formula& a, const std::string& v, const Annotation& r) {
  if (!a.has_symbolic()) return a;
  if (a.is_binary())
    return rebuild(a, ord_rec(a.left(), v, r), ord_rec(a.right(), v, r));
  if (a.is_fixpoint()) {
    Annotation ann = a.annotation().var == v ? r : a.annotation();
    return rebuild_fix(a, ann, ord_rec(a.body(), v, r));
  }
  return a;
}

void collect(const Formula& a, std::set<std::string>& out, Kind k1, Kind k2) {
  if (a.kind() == k1 || a.kind() == k2) out.insert(a.name());
  if (a.is_binary()) {
    collect(a.left(), out, k1, k2);
    collect(a.right(), out, k1, k2);
  } else if (a.is_fixpoint()) {
    collect(a.body(), out, k1, k2);
  }
}

}  // namespace

Formula substitute(const Formula& a, const std::string& x, const Formula& b) {
  if (b.loose() != 0) throw DomainError("substituted formula has loose indices");
  return subst_rec(a, x, b);
}

Formula instantiate(const Formula& body, const Formula& b) {
  if (b.loose() != 0) throw DomainError("instantiated formula has loose indices");
  return open_rec(body, 0, b);
}

Formula abstract(const Formula& a, const std::string& x) {
  return abstract_rec(a, x, 0);
}

Formula unfold(const Formula& fp, const Annotation& gamma) {
  if (!fp.is_fixpoint()) throw DomainError("unfold of a non-fixed-point");
  Formula smaller = Formula::fix(fp.kind(), gamma, fp.name(), fp.body());
  return instantiate(fp.body(), smaller);
}

Formula subst_ordinal_var(const Formula& a, const std::string& var,
                          const Annotation& repl) {
  return ord_rec(a, var, repl);
}

std::set<std::string> free_vars(const Formula& a) {
  std::set<std::string> out;
  if (a.has_free_vars()) collect(a, out, Kind::Var, Kind::Var);
  return out;
}

std::set<std::string> atoms(const Formula& a) {
  std::set<std::string> out;
  collect(a, out, Kind::Atom, Kind::NegAtom);
  return out;
}

std::set<std::string> ordinal_vars(const Formula& a) {
  std::set<std::string> out;
  std::function<void(const Formula&)> go = [&](const Formula& f) {
    if (!f.has_symbolic()) return;
    if (f.is_binary()) {
      go(f.left());
      go(f.right());
    } else if (f.is_fixpoint()) {
      if (f.annotation().symbolic()) out.insert(f.annotation().var);
      go(f.body());
    }
  };
  go(a);
  return out;
}

Polarity polarity(const Formula& a) {
  switch (a.kind()) {
    case Kind::Var:
    case Kind::Bound:
      throw DomainError("polarity of a bare variable");
    case Kind::Atom:
    case Kind::Zero:
    case Kind::One:
    case Kind::Plus:
    case Kind::Tensor:
    case Kind::Mu:
      return Polarity::Positive;
    default:
      return Polarity::Negative;
  }
}

bool is_positive(const Formula& a) { return polarity(a) == Polarity::Positive; }
bool is_negative(const Formula& a) { return polarity(a) == Polarity::Negative; }

// Printing -----------------------------------------------------------------

namespace {

int prec(Kind k) {
  switch (k) {
    case Kind::Plus: return 1;
    case Kind::With: return 2;
    case Kind::Par: return 3;
    case Kind::Tensor: return 4;
    case Kind::Mu:
    case Kind::Nu: return 0;
    default: return 5;
  }
}

const char* op_str(Kind k) {
  switch (k) {
    case Kind::Plus: return " + ";
    case Kind::With: return " & ";
    case Kind::Par: return " | ";
    default: return " * ";
  }
}

bool name_used(const Formula& a, const std::string& n) {
  if (a.kind() == Kind::Atom || a.kind() == Kind::NegAtom)
    return a.name() == n;
  if (a.is_binary()) return name_used(a.left(), n) || name_used(a.right(), n);
  if (a.is_fixpoint()) return name_used(a.body(), n);
  return false;
}

struct Printer {
  std::vector<std::string> scope;
  std::string out;

  std::string fresh(const Formula& fp) {
    std::string base = fp.name().empty() ? "x" : fp.name();
    auto clash = [&](const std::string& n) {
      if (n == "w" || n == "mu" || n == "nu" || n == "T" || n == "bot" ||
          n == "top")
        return true;
      if (std::find(scope.begin(), scope.end(), n) != scope.end()) return true;
      return name_used(fp.body(), n);
    };
    if (!clash(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!clash(cand)) return cand;
    }
  }

  void print(const Formula& a) {
    switch (a.kind()) {
      case Kind::Var: out += "$" + a.name(); return;
      case Kind::Bound:
        if (a.index() < scope.size())
          out += scope[scope.size() - 1 - a.index()];
        else
          out += "#" + std::to_string(a.index());
        return;
      case Kind::Atom: out += a.name(); return;
      case Kind::NegAtom: out += "~" + a.name(); return;
      case Kind::One: out += "1"; return;
      case Kind::Bot: out += "bot"; return;
      case Kind::Zero: out += "0"; return;
      case Kind::Top: out += "T"; return;
      case Kind::Mu:
      case Kind::Nu: {
        std::string n = fresh(a);
        out += a.kind() == Kind::Mu ? "mu^" : "nu^";
        out += a.annotation().str();
        out += " " + n + ". ";
        scope.push_back(n);
        bool paren = a.body().is_binary();
        if (paren) out += "(";
        print(a.body());
        if (paren) out += ")";
        scope.pop_back();
        return;
      }
      default: {
        int p = prec(a.kind());
        child(a.left(), prec(a.left().kind()) <= p);
        out += op_str(a.kind());
        child(a.right(), prec(a.right().kind()) < p);
        return;
      }
    }
  }

  void child(const Formula& c, bool paren) {
    if (paren) out += "(";
    print(c);
    if (paren) out += ")";
  }
};

}  // namespace

std::string to_string(const Formula& a) {
  Printer p;
  p.print(a);
  return p.out;
}

// Sequents -------------------------------------------------------------------

Sequent::Sequent(std::vector<Formula> fs) : fs_(std::move(fs)) {
  std::sort(fs_.begin(), fs_.end());
}

Sequent::Sequent(std::initializer_list<Formula> fs) : fs_(fs) {
  std::sort(fs_.begin(), fs_.end());
}

Sequent Sequent::with(const Formula& f) const {
  Sequent s;
  s.fs_ = fs_;
  s.fs_.insert(std::upper_bound(s.fs_.begin(), s.fs_.end(), f), f);
  return s;
}

Sequent Sequent::with(const std::vector<Formula>& fs) const {
  std::vector<Formula> v = fs_;
  v.insert(v.end(), fs.begin(), fs.end());
  return Sequent(std::move(v));
}

Sequent Sequent::without(std::size_t i) const {
  Sequent s;
  s.fs_ = fs_;
  s.fs_.erase(s.fs_.begin() + static_cast<long>(i));
  return s;
}

long Sequent::find(const Formula& f) const {
  auto it = std::lower_bound(fs_.begin(), fs_.end(), f);
  if (it != fs_.end() && *it == f) return it - fs_.begin();
  return -1;
}

std::size_t Sequent::count(const Formula& f) const {
  auto r = std::equal_range(fs_.begin(), fs_.end(), f);
  return static_cast<std::size_t>(r.second - r.first);
}

Sequent Sequent::plus(const Sequent& other) const {
  Sequent s;
  s.fs_.reserve(fs_.size() + other.fs_.size());
  std::merge(fs_.begin(), fs_.end(), other.fs_.begin(), other.fs_.end(),
             std::back_inserter(s.fs_));
  return s;
}

bool Sequent::minus(const Sequent& other, Sequent* out) const {
  std::vector<Formula> r;
  std::size_t j = 0;
  for (const auto& f : fs_) {
    if (j < other.fs_.size() && other.fs_[j] == f) {
      ++j;
      continue;
    }
    if (j < other.fs_.size() && other.fs_[j] < f) return false;
    r.push_back(f);
  }
  if (j != other.fs_.size()) return false;
  if (out) out->fs_ = std::move(r);
  return true;
}

std::size_t Sequent::hash() const {
  std::size_t h = 0xabcdef;
  for (const auto& f : fs_) h = mix(h, f.hash());
  return h;
}

bool operator==(const Sequent& a, const Sequent& b) { return a.fs_ == b.fs_; }

std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
  return std::lexicographical_compare_three_way(a.fs_.begin(), a.fs_.end(),
                                                b.fs_.begin(), b.fs_.end());
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return out;
}

}  // namespace mumall
