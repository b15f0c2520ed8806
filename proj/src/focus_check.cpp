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

#include "mumall/kernel.hpp"

namespace mumall {

namespace {

const char* const kFRuleNames[] = {"id",  "store", "decide", "release", "top",
                                   "bot", "par",   "with",   "nu",      "one",
                                   "plus", "tensor", "mu"};

bool positive_compound(const Formula& a) {
  return !a.is_literal() && is_positive(a);
}

class FocusChecker {
 public:
  explicit FocusChecker(const FocusCheckOptions& o) : opts_(o) {}

  CheckResult run(const FocusProof& p) {
    check(p, "");
    return result_;
  }

 private:
  const FocusCheckOptions& opts_;
  CheckResult result_;

  bool fail(const std::string& path, const std::string& reason,
            const std::string& detail) {
    if (result_.valid) {
      result_.valid = false;
      result_.path = path.empty() ? "/" : path;
      result_.reason = reason;
      result_.detail = detail;
    }
    return false;
  }

  bool count(const FocusNode& n, std::size_t k, const std::string& path) {
    if (n.premises.size() == k) return true;
    return fail(path, "wrong-premise-count",
                std::string(frule_name(n.rule)) + " expects " +
                    std::to_string(k) + " premises");
  }

  bool up_premise(const FocusNode& n, std::size_t k, const Sequent& ctx,
                  const std::vector<Formula>& zone, const std::string& path) {
    const FocusNode& q = *n.premises[k];
    if (q.down || !(q.context == ctx) || q.zone != zone)
      return fail(path, "bad-premise", "premise " + std::to_string(k));
    return true;
  }

  bool down_premise(const FocusNode& n, std::size_t k, const Sequent& ctx,
                    const Formula& focus, const std::string& path) {
    const FocusNode& q = *n.premises[k];
    if (!q.down || !(q.context == ctx) || !(q.focus == focus))
      return fail(path, "bad-premise", "premise " + std::to_string(k));
    return true;
  }

  bool check_up(const FocusNode& n, const std::string& path) {
    const Sequent& g = n.context;
    if (n.rule == FRule::Decide) {
      if (!n.zone.empty())
        return fail(path, "bad-zone", "decide needs an empty zone");
      if (!count(n, 1, path)) return false;
      const FocusNode& q = *n.premises[0];
      if (!q.down) return fail(path, "bad-premise", "decide premise is not focussed");
      const Formula& a = q.focus;
      bool ok = positive_compound(a) || a.kind() == Kind::Atom ||
                (opts_.decide_negative_literals && a.kind() == Kind::NegAtom);
      if (!ok)
        return fail(path, "polarity-violation", "decide on " + to_string(a));
      if (g.find(a) < 0 || !(q.context == g.without(static_cast<std::size_t>(g.find(a)))))
        return fail(path, "bad-premise", "decide premise context");
      return true;
    }
    if (n.zone.empty())
      return fail(path, "bad-zone", std::string(frule_name(n.rule)) +
                                        " needs a nonempty zone");
    const Formula& a = n.zone.back();
    std::vector<Formula> rest(n.zone.begin(), n.zone.end() - 1);
    auto with_last = [&](std::vector<Formula> extra) {
      std::vector<Formula> z = rest;
      for (auto& f : extra) z.push_back(std::move(f));
      return z;
    };
    auto expect = [&](Kind k) {
      if (a.kind() == k) return true;
      return fail(path, "bad-principal",
                  std::string(frule_name(n.rule)) + " on " + to_string(a));
    };
    switch (n.rule) {
      case FRule::Store:
        if (!(a.is_literal() || is_positive(a)))
          return fail(path, "polarity-violation", "store of " + to_string(a));
        return count(n, 1, path) && up_premise(n, 0, g.with(a), rest, path);
      case FRule::Top:
        return expect(Kind::Top) && count(n, 0, path);
      case FRule::Bot:
        return expect(Kind::Bot) && count(n, 1, path) &&
               up_premise(n, 0, g, rest, path);
      case FRule::Par:
        return expect(Kind::Par) && count(n, 1, path) &&
               up_premise(n, 0, g, with_last({a.left(), a.right()}), path);
      case FRule::With:
        return expect(Kind::With) && count(n, 2, path) &&
               up_premise(n, 0, g, with_last({a.left()}), path) &&
               up_premise(n, 1, g, with_last({a.right()}), path);
      case FRule::Nu: {
        if (!expect(Kind::Nu)) return false;
        if (!a.annotation().finite())
          return fail(path, "annotation-violation",
                      "nu needs a finite annotation");
        std::uint64_t beta = a.annotation().value.finite_value();
        if (!count(n, beta, path)) return false;
        for (std::uint64_t k = 0; k < beta; ++k)
          if (!up_premise(n, k, g,
                          with_last({unfold(a, Annotation(Ordinal(k)))}), path))
            return false;
        return true;
      }
      default:
        return fail(path, "bad-rule",
                    std::string(frule_name(n.rule)) + " on an unfocussed sequent");
    }
  }

  bool check_down(const FocusNode& n, const std::string& path) {
    const Sequent& g = n.context;
    const Formula& a = n.focus;
    auto expect = [&](Kind k) {
      if (a.kind() == k) return true;
      return fail(path, "bad-principal",
                  std::string(frule_name(n.rule)) + " on " + to_string(a));
    };
    switch (n.rule) {
      case FRule::Id:
        if (!count(n, 0, path)) return false;
        if (a.kind() == Kind::NegAtom && g.size() == 1 &&
            g[0].kind() == Kind::Atom && g[0].name() == a.name())
          return true;
        return fail(path, "bad-context", "id needs p => ~p");
      case FRule::Release: {
        bool ok = opts_.release == ReleaseCondition::LiteralOnly
                      ? a.is_literal()
                      : a.is_literal() || is_negative(a);
        if (!ok)
          return fail(path, "polarity-violation", "release of " + to_string(a));
        return count(n, 1, path) && up_premise(n, 0, g, {a}, path);
      }
      case FRule::One:
        if (!expect(Kind::One) || !count(n, 0, path)) return false;
        if (!g.empty()) return fail(path, "bad-context", "1 needs an empty context");
        return true;
      case FRule::Plus:
        if (!expect(Kind::Plus) || !count(n, 1, path)) return false;
        if (n.side != 0 && n.side != 1) return fail(path, "bad-side", "plus side");
        return down_premise(n, 0, g, n.side ? a.right() : a.left(), path);
      case FRule::Tensor: {
        if (!expect(Kind::Tensor) || !count(n, 2, path)) return false;
        const FocusNode& l = *n.premises[0];
        const FocusNode& r = *n.premises[1];
        if (!(l.context.plus(r.context) == g))
          return fail(path, "bad-split", "tensor contexts do not partition");
        return down_premise(n, 0, l.context, a.left(), path) &&
               down_premise(n, 1, r.context, a.right(), path);
      }
      case FRule::Mu:
        if (!expect(Kind::Mu) || !count(n, 1, path)) return false;
        if (n.gamma.symbolic() || a.annotation().symbolic() ||
            !(n.gamma.value < a.annotation().value))
          return fail(path, "annotation-violation",
                      n.gamma.str() + " < " + a.annotation().str() +
                          " does not hold");
        return down_premise(n, 0, g, unfold(a, n.gamma), path);
      default:
        return fail(path, "bad-rule",
                    std::string(frule_name(n.rule)) + " on a focussed sequent");
    }
  }

  bool check(const FocusProof& p, const std::string& path) {
    const FocusNode& n = *p;
    if (!(n.down ? check_down(n, path) : check_up(n, path))) return false;
    for (std::size_t k = 0; k < n.premises.size(); ++k)
      if (!check(n.premises[k], path + "/" + std::to_string(k))) return false;
    return true;
  }
};

}  // namespace

const char* frule_name(FRule r) {
  return kFRuleNames[static_cast<int>(r)];
}

bool frule_from_name(const std::string& s, FRule* out) {
  for (int i = 0; i < static_cast<int>(std::size(kFRuleNames)); ++i)
    if (s == kFRuleNames[i]) {
      *out = static_cast<FRule>(i);
      return true;
    }
  if (s == "s" || s == "d" || s == "r") {
    *out = s == "s" ? FRule::Store : s == "d" ? FRule::Decide : FRule::Release;
    return true;
  }
  return false;
}

Sequent FocusNode::erased() const {
  if (down) return context.with(focus);
  return context.with(zone);
}

FocusProof make_up(const Sequent& ctx, std::vector<Formula> zone, FRule r,
                   std::vector<FocusProof> premises) {
  auto n = std::make_shared<FocusNode>();
  n->context = ctx;
  n->zone = std::move(zone);
  n->rule = r;
  n->premises = std::move(premises);
  return n;
}

FocusProof make_down(const Sequent& ctx, const Formula& focus, FRule r,
                     std::vector<FocusProof> premises, int side,
                     Annotation gamma) {
  auto n = std::make_shared<FocusNode>();
  n->context = ctx;
  n->down = true;
  n->focus = focus;
  n->rule = r;
  n->side = side;
  n->gamma = std::move(gamma);
  n->premises = std::move(premises);
  return n;
}

CheckResult check_focus_proof(const FocusProof& p,
                              const FocusCheckOptions& opts) {
  FocusChecker c(opts);
  return c.run(p);
}

Proof erase_focus(const FocusProof& p) {
  const FocusNode& n = *p;
  auto sub = [&](std::size_t k) { return erase_focus(n.premises[k]); };
  switch (n.rule) {
    case FRule::Store:
    case FRule::Decide:
    case FRule::Release:
      return sub(0);
    case FRule::Id:
      return make_id(n.focus.name());
    case FRule::One:
      return make_one();
    case FRule::Top:
      return make_top(n.erased());
    case FRule::Bot:
      return make_bot(sub(0));
    case FRule::Par:
      return make_par(n.zone.back().left(), n.zone.back().right(), sub(0));
    case FRule::With:
      return make_with(n.zone.back().left(), n.zone.back().right(), sub(0),
                       sub(1));
    case FRule::Nu: {
      std::vector<Proof> prems;
      for (std::size_t k = 0; k < n.premises.size(); ++k) prems.push_back(sub(k));
      Sequent ctx = n.erased();
      ctx = ctx.without(static_cast<std::size_t>(ctx.find(n.zone.back())));
      return make_nu(n.zone.back(), prems, ctx);
    }
    case FRule::Plus:
      return make_plus(n.focus.left(), n.focus.right(), n.side, sub(0));
    case FRule::Tensor:
      return make_tensor(n.focus.left(), n.focus.right(), sub(0), sub(1));
    case FRule::Mu:
      return make_mu(n.focus, n.gamma, sub(0));
  }
  throw DomainError("erase_focus: unknown rule");
}

std::size_t focus_proof_size(const FocusProof& p) {
  std::size_t s = 1;
  for (const auto& q : p->premises) s += focus_proof_size(q);
  return s;
}

}  // namespace mumall
