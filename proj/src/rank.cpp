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

#include "mumall/rank.hpp"

#include <unordered_map>
#include <vector>

namespace mumall {

Valuation Valuation::constant(Ordinal value) {
  Valuation v;
  v.default_ = std::move(value);
  return v;
}

Valuation& Valuation::set(const std::string& x, Ordinal v) {
  map_[x] = std::move(v);
  return *this;
}

std::optional<Ordinal> Valuation::lookup(const std::string& x) const {
  auto it = map_.find(x);
  if (it != map_.end()) return it->second;
  return default_;
}

Ordinal Valuation::at(const std::string& x) const {
  auto v = lookup(x);
  if (!v) throw DomainError("variable " + x + " is not in the valuation");
  return *v;
}

Valuation overlay(const Valuation& s1, const Valuation& s2) {
  Valuation r;
  if (s2.fallback())
    r = Valuation::constant(*s2.fallback());
  else if (s1.fallback())
    r = Valuation::constant(*s1.fallback());
  for (const auto& [x, v] : s1.entries()) r.set(x, v);
  for (const auto& [x, v] : s2.entries()) r.set(x, v);
  return r;
}

Valuation scale(const Ordinal& g, const Valuation& s) {
  Valuation r;
  if (s.fallback()) r = Valuation::constant(natural_product(g, *s.fallback()));
  for (const auto& [x, v] : s.entries()) r.set(x, natural_product(g, v));
  return r;
}

namespace {

struct RankEval {
  const Valuation& s;
  std::vector<Ordinal> env;
  std::unordered_map<const Formula::Node*, Ordinal> memo;

  Ordinal eval(const Formula& a) {
    bool cacheable = a.loose() == 0 && !a.has_free_vars() && a.is_fixpoint();
    if (cacheable) {
      auto it = memo.find(a.ptr());
      if (it != memo.end()) return it->second;
    }
    Ordinal r = compute(a);
    if (cacheable) memo.emplace(a.ptr(), r);
    return r;
  }

  Ordinal compute(const Formula& a) {
    switch (a.kind()) {
      case Kind::Var:
        return s.at(a.name());
      case Kind::Bound:
        if (a.index() >= env.size()) throw DomainError("loose bound variable");
        return env[env.size() - 1 - a.index()];
      case Kind::Mu:
      case Kind::Nu: {
        const Annotation& ann = a.annotation();
        if (!ann.finite())
          throw ExactModeUnsupported("exact rank needs finite annotations, got " +
                                     ann.str());
        std::uint64_t beta = ann.value.finite_value();
        Ordinal cur(1);  // [[eta^0 x.B]] = 1
        Ordinal best;
        for (std::uint64_t g = 0; g < beta; ++g) {
          env.push_back(cur);
          Ordinal v = succ(eval(a.body()));
          env.pop_back();
          if (best < v) best = v;
          cur = best;
        }
        return beta == 0 ? Ordinal(1) : best;
      }
      default:
        if (a.is_binary())
          return natural_sum(Ordinal(1),
                             natural_sum(eval(a.left()), eval(a.right())));
        return Ordinal(1);
    }
  }
};

IterProduct upper(const Formula& a) {
  if (a.is_binary()) {
    IterProduct l = upper(a.left()), r = upper(a.right());
    return {natural_sum(Ordinal(1), natural_sum(l.value, r.value)),
            l.upper_bound || r.upper_bound};
  }
  if (a.is_fixpoint()) {
    if (a.annotation().symbolic())
      throw DomainError("rank bound of a symbolic annotation");
    IterProduct b = upper(a.body());
    IterProduct p = iter_natural_product(succ(b.value), a.annotation().value);
    return {p.value, p.upper_bound || b.upper_bound};
  }
  return {Ordinal(1), false};
}

}  // namespace

Ordinal rank_val(const Formula& a, const Valuation& s) {
  RankEval ev{s, {}, {}};
  return ev.eval(a);
}

Ordinal rank(const Formula& a) { return rank_val(a, Valuation::one()); }

Ordinal rank_sequent(const Sequent& g) {
  Ordinal r;
  for (const auto& f : g) r = natural_sum(r, rank(f));
  return r;
}

IterProduct rank_upper_bound_flagged(const Formula& a) { return upper(a); }

Ordinal rank_upper_bound(const Formula& a) { return upper(a).value; }

Formula rho_formula(unsigned n, const Ordinal& a) {
  Formula r = Formula::var("x0");
  for (unsigned k = 0; k < n; ++k) {
    std::string xk = "x" + std::to_string(k);
    Formula next = Formula::var("x" + std::to_string(k + 1));
    r = Formula::mu(Annotation(a), xk, Formula::par(next, r));
  }
  return r;
}

}  // namespace mumall
