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

#include <map>
#include <set>

#include "mumall/kernel.hpp"

namespace mumall {

namespace {

// Builds proofs of {~T[B], T[B']} by recursion on the template T, where the
// free variable `hole` of T is replaced by B on the left and B' on the right.
class Congruence {
 public:
  Congruence(std::string hole, Formula b, Formula b2, Proof premise,
             std::set<std::string> taken)
      : hole_(std::move(hole)),
        b_(std::move(b)),
        b2_(std::move(b2)),
        premise_(std::move(premise)),
        taken_(std::move(taken)) {}

  Proof run(const Formula& t) { return go(t); }

 private:
  struct Scope {
    Kind kind;
    Formula body;
    std::string var;
  };

  std::string hole_;
  Formula b_, b2_;
  Proof premise_;
  std::set<std::string> taken_;
  std::vector<Scope> inds_;
  std::vector<Constraint> hyps_;
  int fresh_ = 0;

  std::string fresh(const char* prefix) {
    for (;;) {
      std::string n = prefix + std::to_string(fresh_++);
      if (!taken_.count(n)) {
        taken_.insert(n);
        return n;
      }
    }
  }

  Formula lhs(const Formula& t) const {
    return hole_.empty() ? t : substitute(t, hole_, b_);
  }
  Formula rhs(const Formula& t) const {
    return hole_.empty() ? t : substitute(t, hole_, b2_);
  }

  Proof go(const Formula& t) {
    if (!hole_.empty() && t.kind() == Kind::Var && t.name() == hole_)
      return premise_;
    switch (t.kind()) {
      case Kind::Atom:
      case Kind::NegAtom:
        return make_id(t.name());
      case Kind::One:
      case Kind::Bot:
        return make_bot(make_one());
      case Kind::Zero:
      case Kind::Top:
        return make_top(Sequent({Formula::zero(), Formula::top()}));
      case Kind::Tensor:
        return make_par(negate(lhs(t.left())), negate(lhs(t.right())),
                        make_tensor(rhs(t.left()), rhs(t.right()),
                                    go(t.left()), go(t.right())));
      case Kind::Par:
        return make_par(rhs(t.left()), rhs(t.right()),
                        make_tensor(negate(lhs(t.left())),
                                    negate(lhs(t.right())), go(t.left()),
                                    go(t.right())));
      case Kind::Plus:
        return make_with(negate(lhs(t.left())), negate(lhs(t.right())),
                         make_plus(rhs(t.left()), rhs(t.right()), 0,
                                   go(t.left())),
                         make_plus(rhs(t.left()), rhs(t.right()), 1,
                                   go(t.right())));
      case Kind::With:
        return make_with(rhs(t.left()), rhs(t.right()),
                         make_plus(negate(lhs(t.left())),
                                   negate(lhs(t.right())), 0, go(t.left())),
                         make_plus(negate(lhs(t.left())),
                                   negate(lhs(t.right())), 1, go(t.right())));
      case Kind::Mu:
      case Kind::Nu:
        return fixpoint(t);
      default:
        throw DomainError("congruence: unexpected variable in " +
                          to_string(t));
    }
  }

  Sequent goal(const Formula& t) const {
    return Sequent({negate(lhs(t)), rhs(t)});
  }

  Proof fixpoint(const Formula& t) {
    const Annotation& beta = t.annotation();
    for (std::size_t i = inds_.size(); i-- > 0;) {
      const Scope& s = inds_[i];
      if (s.kind == t.kind() && s.body == t.body() &&
          entails(hyps_, beta, Annotation::variable(s.var), true))
        return make_ih(s.var, beta, goal(t));
    }
    if (beta.finite()) {
      std::vector<Proof> prems;
      for (std::uint64_t g = 0; g < beta.value.finite_value(); ++g)
        prems.push_back(step(t, Annotation(Ordinal(g))));
      return make_nu(nu_side(t), prems, Sequent({mu_side(t)}));
    }
    std::string u = fresh("u");
    Annotation ua = Annotation::variable(u);
    Formula tu = Formula::fix(t.kind(), ua, t.name(), t.body());
    hyps_.push_back({ua, beta, false});
    inds_.push_back({t.kind(), t.body(), u});
    std::string v = fresh("v");
    Annotation va = Annotation::variable(v);
    hyps_.push_back({va, ua, true});
    Proof body = step(tu, va);
    hyps_.pop_back();
    Proof nu = make_nu_schematic(nu_side(tu), v, body);
    inds_.pop_back();
    hyps_.pop_back();
    return make_ind(u, beta, nu);
  }

  // The nu-formula of the goal {~T[B], T[B']} and the other one.
  Formula nu_side(const Formula& t) const {
    return t.kind() == Kind::Mu ? negate(lhs(t)) : rhs(t);
  }
  Formula mu_side(const Formula& t) const {
    return t.kind() == Kind::Mu ? rhs(t) : negate(lhs(t));
  }

  // Premise gamma of the nu step: the mu step at gamma above the recursion.
  Proof step(const Formula& t, const Annotation& gamma) {
    return make_mu(mu_side(t), gamma, go(unfold(t, gamma)));
  }
};

std::set<std::string> names_in(std::initializer_list<Formula> fs) {
  std::set<std::string> out;
  for (const auto& f : fs)
    if (f)
      for (const auto& n : ordinal_vars(f)) out.insert(n);
  return out;
}

}  // namespace

Proof eta_expand_identity(const Formula& a) {
  if (a.has_free_vars())
    throw DomainError("eta expansion needs a closed formula");
  return Congruence("", Formula(), Formula(), nullptr, names_in({a})).run(a);
}

Proof functoriality(const Formula& ax, const std::string& hole,
                    const Formula& b, const Formula& b2, const Proof& premise) {
  if (!(premise->conclusion == Sequent({negate(b), b2})))
    throw DomainError("functoriality: premise must prove ~B, B'");
  for (const auto& v : free_vars(ax))
    if (v != hole)
      throw DomainError("functoriality: unexpected free variable " + v);
  return Congruence(hole, b, b2, premise, names_in({ax, b, b2})).run(ax);
}

Proof monotonicity_proof(Kind eta, const Formula& ax, const std::string& x,
                         const Ordinal& g, const Ordinal& b) {
  if (g > b) throw DomainError("monotonicity needs g <= b");
  if (eta != Kind::Mu && eta != Kind::Nu)
    throw DomainError("monotonicity needs mu or nu");
  // For nu the sequent {mu^b x.~A, nu^g x.A} is the mu case for ~A.
  Formula fg, fb;
  if (eta == Kind::Mu) {
    fg = Formula::mu(g, x, ax);
    fb = Formula::mu(b, x, ax);
  } else {
    fg = negate(Formula::nu(g, x, ax));
    fb = negate(Formula::nu(b, x, ax));
  }
  Formula left = negate(fg);
  auto step = [&](const Annotation& d) {
    return make_mu(fb, d, eta_expand_identity(unfold(fb, d)));
  };
  if (g.is_finite()) {
    std::vector<Proof> prems;
    for (std::uint64_t d = 0; d < g.finite_value(); ++d)
      prems.push_back(step(Annotation(Ordinal(d))));
    return make_nu(left, prems, Sequent({fb}));
  }
  std::string d = "d";
  Annotation da = Annotation::variable(d);
  return make_nu_schematic(left, d, step(da), {{da, Annotation(b), true}});
}

Proof additive_units_proof(const Ordinal& beta) {
  Formula zero = Formula::zero();
  auto nu_at = [](const Annotation& a) {
    return Formula::fix(Kind::Nu, a, "x", Formula::bound(0));
  };
  if (beta.is_finite()) {
    std::vector<Proof> built;
    for (std::uint64_t g = 0; g <= beta.finite_value(); ++g)
      built.push_back(make_nu(nu_at(Annotation(Ordinal(g))),
                              std::vector<Proof>(built.begin(), built.end()),
                              Sequent({zero})));
    return built.back();
  }
  Annotation u = Annotation::variable("u"), v = Annotation::variable("v");
  Proof ih = make_ih("u", v, Sequent({zero, nu_at(v)}));
  return make_ind("u", beta, make_nu_schematic(nu_at(u), "v", ih));
}

}  // namespace mumall
