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

#include <functional>
#include <stdexcept>

#include "mumall/transform.hpp"

namespace mumall {

namespace {

bool neg_or_literal(const Formula& a) { return a.is_literal() || is_negative(a); }

Sequent drop(const Sequent& s, const Formula& f) {
  long i = s.find(f);
  if (i < 0) throw std::logic_error("focus: " + to_string(f) + " not in context");
  return s.without(static_cast<std::size_t>(i));
}

FocusProof with_context(const FocusNode& n, const Sequent& ctx,
                        std::vector<FocusProof> premises) {
  auto m = std::make_shared<FocusNode>(n);
  m->context = ctx;
  m->premises = std::move(premises);
  return m;
}

// Builds a proof of Sigma + cedent => . from Sigma and a proof of Sigma => F.
using FocusRepair = std::function<FocusProof(const Sequent&, const FocusProof&)>;

// Replaces a stored copy of F throughout p by the cedent; decisions on it are
// rebuilt by `repair`.
FocusProof replace_stored(const FocusProof& p, const Formula& f,
                          const std::vector<Formula>& cedent,
                          const FocusRepair& repair) {
  const FocusNode& n = *p;
  Sequent ctx = drop(n.context, f).with(cedent);
  auto rec = [&](const FocusProof& q) {
    return replace_stored(q, f, cedent, repair);
  };
  if (!n.down) {
    if (n.rule == FRule::Decide && n.premises[0]->focus == f)
      return repair(n.premises[0]->context, n.premises[0]);
    std::vector<FocusProof> prems;
    for (const auto& q : n.premises) prems.push_back(rec(q));
    return with_context(n, ctx, std::move(prems));
  }
  switch (n.rule) {
    case FRule::Plus:
    case FRule::Mu:
    case FRule::Release:
      return with_context(n, ctx, {rec(n.premises[0])});
    case FRule::Tensor:
      if (n.premises[0]->context.find(f) >= 0)
        return with_context(n, ctx, {rec(n.premises[0]), n.premises[1]});
      return with_context(n, ctx, {n.premises[0], rec(n.premises[1])});
    default:
      throw std::logic_error("focus: stored formula reached an axiom");
  }
}

class Focuser {
 public:
  FocusProof up(const Sequent& ctx, std::vector<Formula> zone, const Proof& p) {
    if (zone.empty()) return decide(ctx, p);
    Formula a = zone.back();
    std::vector<Formula> rest(zone.begin(), zone.end() - 1);
    long i = p->conclusion.find(a);
    if (i < 0) throw std::logic_error("focus: zone formula not in proof");
    auto idx = static_cast<std::size_t>(i);
    auto extend = [&](std::vector<Formula> more) {
      std::vector<Formula> z = rest;
      z.insert(z.end(), more.begin(), more.end());
      return z;
    };
    switch (a.kind()) {
      case Kind::Top:
        return make_up(ctx, zone, FRule::Top, {});
      case Kind::Bot:
        return make_up(ctx, zone, FRule::Bot, {up(ctx, rest, invert(p, idx))});
      case Kind::Par:
        return make_up(ctx, zone, FRule::Par,
                       {up(ctx, extend({a.left(), a.right()}), invert(p, idx))});
      case Kind::With:
        return make_up(ctx, zone, FRule::With,
                       {up(ctx, extend({a.left()}), invert(p, idx, 0)),
                        up(ctx, extend({a.right()}), invert(p, idx, 1))});
      case Kind::Nu: {
        if (!a.annotation().finite())
          throw UnsupportedProof("focus: nu with an infinite annotation");
        std::vector<FocusProof> prems;
        for (std::uint64_t g = 0; g < a.annotation().value.finite_value(); ++g) {
          Annotation ga{Ordinal(g)};
          prems.push_back(up(ctx, extend({unfold(a, ga)}), invert(p, idx, 0, ga)));
        }
        return make_up(ctx, zone, FRule::Nu, std::move(prems));
      }
      default:
        return make_up(ctx, zone, FRule::Store, {up(ctx.with(a), rest, p)});
    }
  }

 private:
  FocusProof release(const Sequent& ctx, const Formula& b, const Proof& p) {
    return make_down(ctx, b, FRule::Release, {up(ctx, {b}, p)});
  }

  static FocusProof decided(const Sequent& sigma, const Formula& f,
                            const FocusProof& down) {
    return make_up(sigma.with(f), {}, FRule::Decide, {down});
  }

  // Proof of ctx => . where the last rule of p is positive with a single
  // premise proving Sigma, b, and `wrap` turns Sigma' => b into Sigma' => P.
  FocusProof single(const Sequent& ctx, const Formula& pf, const Formula& b,
                    const Proof& prem,
                    const std::function<FocusProof(const Sequent&,
                                                   const FocusProof&)>& wrap) {
    Sequent sigma = drop(ctx, pf);
    if (neg_or_literal(b)) return decided(sigma, pf, wrap(sigma, release(sigma, b, prem)));
    FocusProof q = up(sigma.with(b), {}, prem);
    return replace_stored(q, b, {pf}, [&](const Sequent& s, const FocusProof& d) {
      return decided(s, pf, wrap(s, d));
    });
  }

  FocusProof tensor(const Formula& pf, const ProofNode& n) {
    const Formula a0 = pf.left(), a1 = pf.right();
    const Proof& p0 = n.premises[0];
    const Proof& p1 = n.premises[1];
    Sequent g0 = drop(p0->conclusion, a0), g1 = drop(p1->conclusion, a1);
    auto join = [&](const Sequent& s0, const FocusProof& d0, const Sequent& s1,
                    const FocusProof& d1) {
      return decided(s0.plus(s1), pf,
                     make_down(s0.plus(s1), pf, FRule::Tensor, {d0, d1}));
    };
    bool n0 = neg_or_literal(a0), n1 = neg_or_literal(a1);
    if (n0 && n1)
      return join(g0, release(g0, a0, p0), g1, release(g1, a1, p1));
    if (!n0) {
      FocusProof q0 = up(g0.with(a0), {}, p0);
      std::vector<Formula> c0(g1.begin(), g1.end());
      c0.push_back(pf);
      if (n1) {
        FocusProof d1 = release(g1, a1, p1);
        return replace_stored(q0, a0, c0,
                              [&](const Sequent& s, const FocusProof& d0) {
                                return join(s, d0, g1, d1);
                              });
      }
      FocusProof q1 = up(g1.with(a1), {}, p1);
      return replace_stored(
          q0, a0, c0, [&](const Sequent& s, const FocusProof& d0) {
            std::vector<Formula> c1(s.begin(), s.end());
            c1.push_back(pf);
            return replace_stored(q1, a1, c1,
                                  [&](const Sequent& t, const FocusProof& d1) {
                                    return join(s, d0, t, d1);
                                  });
          });
    }
    FocusProof d0 = release(g0, a0, p0);
    FocusProof q1 = up(g1.with(a1), {}, p1);
    std::vector<Formula> c1(g0.begin(), g0.end());
    c1.push_back(pf);
    return replace_stored(q1, a1, c1,
                          [&](const Sequent& t, const FocusProof& d1) {
                            return join(g0, d0, t, d1);
                          });
  }

  FocusProof decide(const Sequent& ctx, const Proof& p) {
    const ProofNode& n = *p;
    switch (n.rule) {
      case Rule::Id: {
        const std::string& x = n.conclusion[0].name();
        Sequent at({Formula::atom(x)});
        return decided(at, Formula::neg_atom(x),
                       make_down(at, Formula::neg_atom(x), FRule::Id, {}));
      }
      case Rule::One:
        return decided({}, Formula::one(),
                       make_down({}, Formula::one(), FRule::One, {}));
      case Rule::Plus: {
        Formula pf = principal_formula(n);
        int side = n.side;
        return single(ctx, pf, side ? pf.right() : pf.left(), n.premises[0],
                      [&](const Sequent& s, const FocusProof& d) {
                        return make_down(s, pf, FRule::Plus, {d}, side);
                      });
      }
      case Rule::Mu: {
        Formula pf = principal_formula(n);
        Annotation g = n.gamma;
        return single(ctx, pf, unfold(pf, g), n.premises[0],
                      [&](const Sequent& s, const FocusProof& d) {
                        return make_down(s, pf, FRule::Mu, {d}, 0, g);
                      });
      }
      case Rule::Tensor:
        return tensor(principal_formula(n), n);
      default:
        throw std::logic_error(std::string("focus: unexpected rule ") +
                               rule_name(n.rule) + " on a positive sequent");
    }
  }
};

}  // namespace

FocusProof focus(const Proof& p) {
  if (has_cut(p)) throw DomainError("focus needs a cut-free proof");
  Proof q = expand_finite(p);
  if (has_schematic(q))
    throw UnsupportedProof("focus: schematic region with an infinite bound");
  return Focuser().up({}, std::vector<Formula>(q->conclusion.begin(),
                                               q->conclusion.end()),
                      q);
}

}  // namespace mumall
