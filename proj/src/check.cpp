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
#include "mumall/rank.hpp"

namespace mumall {

bool entails(const std::vector<Constraint>& hyps, const Annotation& lhs,
             const Annotation& rhs, bool strict) {
  auto done = [&](const Annotation& u, bool s) {
    if (u == rhs && (s || !strict)) return true;
    if (!u.symbolic() && !rhs.symbolic()) {
      auto c = compare(u.value, rhs.value);
      return c < 0 || (c == 0 && (s || !strict));
    }
    return false;
  };
  std::vector<Annotation> nodes{lhs, rhs};
  for (const auto& h : hyps) {
    nodes.push_back(h.lhs);
    nodes.push_back(h.rhs);
  }
  std::vector<std::pair<Annotation, bool>> stack{{lhs, false}};
  std::vector<std::pair<Annotation, bool>> seen;
  auto visit = [&](const Annotation& a, bool s) {
    for (const auto& [b, t] : seen)
      if (b == a && t == s) return;
    seen.push_back({a, s});
    stack.push_back({a, s});
  };
  seen.push_back({lhs, false});
  while (!stack.empty()) {
    auto [u, s] = stack.back();
    stack.pop_back();
    if (done(u, s)) return true;
    for (const auto& h : hyps)
      if (h.lhs == u) visit(h.rhs, s || h.strict);
    if (!u.symbolic())
      for (const auto& v : nodes)
        if (!v.symbolic()) {
          auto c = compare(u.value, v.value);
          if (c < 0) visit(v, true);
          else if (c == 0) visit(v, s);
        }
  }
  return false;
}

namespace {

struct Env {
  std::vector<Constraint> hyps;
  std::set<std::string> vars;
  std::map<std::string, Sequent> inds;
};

Sequent subst_seq(const Sequent& s, const std::string& v, const Annotation& a) {
  std::vector<Formula> fs;
  for (const auto& f : s) fs.push_back(subst_ordinal_var(f, v, a));
  return Sequent(std::move(fs));
}

bool var_occurs(const Sequent& s, const std::string& v) {
  for (const auto& f : s)
    if (ordinal_vars(f).count(v)) return true;
  return false;
}

class Checker {
 public:
  explicit Checker(const CheckOptions& o) : opts_(o) {}

  CheckResult run(const Proof& p) {
    Env env;
    check(p, "", env);
    return result_;
  }

 private:
  const CheckOptions& opts_;
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

  static Kind kind_of(Rule r) {
    switch (r) {
      case Rule::Bot: return Kind::Bot;
      case Rule::Top: return Kind::Top;
      case Rule::Tensor: return Kind::Tensor;
      case Rule::Par: return Kind::Par;
      case Rule::Plus: return Kind::Plus;
      case Rule::With: return Kind::With;
      case Rule::Mu: return Kind::Mu;
      case Rule::Nu: return Kind::Nu;
      default: return Kind::One;
    }
  }

  // Checks the rule instance with principal occurrence i; returns a reason
  // code or the empty string.
  std::string local(const ProofNode& n, std::size_t i, const Env& env,
                    std::string* detail) {
    const Sequent& c = n.conclusion;
    const Formula& p = c[i];
    Sequent ctx = c.without(i);
    auto prem = [&](std::size_t k) -> const Sequent& {
      return n.premises[k]->conclusion;
    };
    auto need = [&](std::size_t k) {
      if (n.premises.size() != k) {
        *detail = "expected " + std::to_string(k) + " premises";
        return false;
      }
      return true;
    };
    switch (n.rule) {
      case Rule::Top:
        return need(0) ? "" : "wrong-premise-count";
      case Rule::Bot:
        if (!need(1)) return "wrong-premise-count";
        return prem(0) == ctx ? "" : "bad-premise";
      case Rule::Par:
        if (!need(1)) return "wrong-premise-count";
        return prem(0) == ctx.with({p.left(), p.right()}) ? "" : "bad-premise";
      case Rule::With:
        if (!need(2)) return "wrong-premise-count";
        return prem(0) == ctx.with(p.left()) && prem(1) == ctx.with(p.right())
                   ? ""
                   : "bad-premise";
      case Rule::Plus:
        if (!need(1)) return "wrong-premise-count";
        if (n.side != 0 && n.side != 1) return "bad-side";
        return prem(0) == ctx.with(n.side ? p.right() : p.left())
                   ? ""
                   : "bad-premise";
      case Rule::Mu:
        if (!need(1)) return "wrong-premise-count";
        if (!entails(env.hyps, n.gamma, p.annotation(), true)) {
          *detail = n.gamma.str() + " < " + p.annotation().str() +
                    " does not hold";
          return "annotation-violation";
        }
        return prem(0) == ctx.with(unfold(p, n.gamma)) ? "" : "bad-premise";
      case Rule::Nu: {
        if (n.schematic) {
          if (!need(0)) return "wrong-premise-count";
          const Schematic& s = *n.schematic;
          if (s.var.empty() || s.var == "w" || env.vars.count(s.var) ||
              var_occurs(c, s.var)) {
            *detail = "schematic variable is not fresh";
            return "bad-schematic";
          }
          if (!(s.bound == p.annotation())) {
            *detail = "schematic bound differs from the annotation";
            return "bad-schematic";
          }
          Annotation g = Annotation::variable(s.var);
          std::vector<Constraint> hyps = env.hyps;
          hyps.push_back({g, s.bound, true});
          for (const auto& k : s.constraints)
            if (!entails(hyps, k.lhs, k.rhs, k.strict)) {
              *detail = "constraint " + k.lhs.str() + " < " + k.rhs.str() +
                        " is not entailed";
              return "bad-schematic";
            }
          return s.body->conclusion == ctx.with(unfold(p, g)) ? ""
                                                               : "bad-premise";
        }
        if (!p.annotation().finite()) {
          *detail = "explicit nu needs a finite annotation";
          return "annotation-violation";
        }
        std::uint64_t beta = p.annotation().value.finite_value();
        if (n.premises.size() != beta) {
          *detail = "expected " + std::to_string(beta) + " premises";
          return "wrong-premise-count";
        }
        for (std::uint64_t g = 0; g < beta; ++g)
          if (!(prem(g) == ctx.with(unfold(p, Annotation(Ordinal(g))))))
            return "bad-premise";
        return "";
      }
      default:
        return "bad-rule";
    }
  }

  bool check_tensor_or_cut(const ProofNode& n, const std::string& path,
                           const Env& env) {
    const Sequent& c = n.conclusion;
    if (n.premises.size() != 2)
      return fail(path, "wrong-premise-count", "expected 2 premises");
    if (n.split.size() != 2) return fail(path, "bad-split", "need two lists");
    std::vector<int> owner(c.size(), -1);
    for (int k = 0; k < 2; ++k)
      for (int i : n.split[static_cast<std::size_t>(k)]) {
        if (i < 0 || static_cast<std::size_t>(i) >= c.size() ||
            owner[static_cast<std::size_t>(i)] != -1)
          return fail(path, "bad-split", "index out of range or repeated");
        owner[static_cast<std::size_t>(i)] = k;
      }
    Formula a, b;
    if (n.rule == Rule::Tensor) {
      int missing = -1, count = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (owner[i] == -1) {
          missing = static_cast<int>(i);
          ++count;
        }
      if (count != 1)
        return fail(path, "bad-split", "split must omit exactly the principal");
      if (n.principal >= 0 && n.principal != missing)
        return fail(path, "bad-split", "split covers the principal formula");
      const Formula& p = c[static_cast<std::size_t>(missing)];
      if (p.kind() != Kind::Tensor)
        return fail(path, "bad-principal", "principal is not a tensor");
      a = p.left();
      b = p.right();
    } else {
      if (opts_.mode == CheckMode::CutFree)
        return fail(path, "cut-not-allowed", "cut in cut-free mode");
      for (int o : owner)
        if (o == -1) return fail(path, "bad-split", "split must cover all");
      if (!n.cut) return fail(path, "bad-premise", "missing cut formula");
      a = n.cut;
      b = negate(n.cut);
      if (opts_.mode == CheckMode::CutBound) {
        if (!n.cut.finite_annotations())
          return fail(path, "rank-inexpressible", to_string(n.cut));
        Ordinal r = rank(n.cut);
        if (!(r < opts_.delta))
          return fail(path, "cut-rank-exceeded",
                      "rank " + r.str() + " >= " + opts_.delta.str());
      }
    }
    (void)env;
    for (int k = 0; k < 2; ++k) {
      std::vector<Formula> part;
      for (int i : n.split[static_cast<std::size_t>(k)])
        part.push_back(c[static_cast<std::size_t>(i)]);
      part.push_back(k == 0 ? a : b);
      if (!(Sequent(part) == n.premises[static_cast<std::size_t>(k)]->conclusion))
        return fail(path, "bad-premise", "premise " + std::to_string(k));
    }
    return true;
  }

  bool check_node(const ProofNode& n, const std::string& path, const Env& env) {
    const Sequent& c = n.conclusion;
    switch (n.rule) {
      case Rule::Id:
        if (!n.premises.empty())
          return fail(path, "wrong-premise-count", "id has no premises");
        if (c.size() == 2 && c[0].kind() == Kind::Atom &&
            c[1].kind() == Kind::NegAtom && c[0].name() == c[1].name())
          return true;
        return fail(path, "bad-context", "id needs exactly p, ~p");
      case Rule::One:
        if (!n.premises.empty())
          return fail(path, "wrong-premise-count", "1 has no premises");
        if (c.size() == 1 && c[0].kind() == Kind::One) return true;
        return fail(path, "bad-context", "1 needs exactly {1}");
      case Rule::Tensor:
      case Rule::Cut:
        return check_tensor_or_cut(n, path, env);
      case Rule::Ind:
      case Rule::Ih:
        return true;  // handled in check()
      default:
        break;
    }
    Kind k = kind_of(n.rule);
    std::vector<std::size_t> cands;
    if (n.principal >= 0) {
      if (static_cast<std::size_t>(n.principal) >= c.size())
        return fail(path, "bad-principal", "principal index out of range");
      cands.push_back(static_cast<std::size_t>(n.principal));
    } else {
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].kind() == k && (i == 0 || !(c[i] == c[i - 1])))
          cands.push_back(i);
    }
    std::string first_reason, first_detail;
    for (std::size_t i : cands) {
      if (c[i].kind() != k) {
        if (first_reason.empty()) first_reason = "bad-principal";
        continue;
      }
      std::string detail;
      std::string r = local(n, i, env, &detail);
      if (r.empty()) return true;
      if (first_reason.empty()) {
        first_reason = r;
        first_detail = detail;
      }
    }
    if (first_reason.empty()) first_reason = "bad-principal";
    return fail(path, first_reason,
                first_detail.empty() ? std::string("rule ") + rule_name(n.rule)
                                     : first_detail);
  }

  bool check(const Proof& p, const std::string& path, const Env& env) {
    const ProofNode& n = *p;
    if (n.rule == Rule::Ind) {
      if (n.premises.size() != 1)
        return fail(path, "wrong-premise-count", "ind has one premise");
      if (n.var.empty() || env.vars.count(n.var) ||
          var_occurs(n.conclusion, n.var))
        return fail(path, "bad-schematic", "induction variable is not fresh");
      const Sequent& tmpl = n.premises[0]->conclusion;
      if (!(subst_seq(tmpl, n.var, n.gamma) == n.conclusion))
        return fail(path, "bad-premise", "ind template does not instantiate");
      Env e2 = env;
      e2.vars.insert(n.var);
      e2.hyps.push_back({Annotation::variable(n.var), n.gamma, false});
      e2.inds[n.var] = tmpl;
      return check(n.premises[0], path + "/0", e2);
    }
    if (n.rule == Rule::Ih) {
      if (!n.premises.empty())
        return fail(path, "wrong-premise-count", "ih has no premises");
      auto it = env.inds.find(n.var);
      if (it == env.inds.end())
        return fail(path, "bad-ih", "no enclosing induction on " + n.var);
      if (!(subst_seq(it->second, n.var, n.gamma) == n.conclusion))
        return fail(path, "bad-ih", "conclusion is not an instance");
      if (!entails(env.hyps, n.gamma, Annotation::variable(n.var), true))
        return fail(path, "annotation-violation",
                    n.gamma.str() + " < " + n.var + " does not hold");
      return true;
    }
    if (!check_node(n, path, env)) return false;
    for (std::size_t k = 0; k < n.premises.size(); ++k)
      if (!check(n.premises[k], path + "/" + std::to_string(k), env))
        return false;
    if (n.schematic) {
      Env e2 = env;
      const Schematic& s = *n.schematic;
      e2.vars.insert(s.var);
      e2.hyps.push_back({Annotation::variable(s.var), s.bound, true});
      return check(s.body, path + "/schematic", e2);
    }
    return true;
  }
};

}  // namespace

CheckResult check_proof(const Proof& p, const CheckOptions& opts) {
  Checker c(opts);
  return c.run(p);
}

}  // namespace mumall
