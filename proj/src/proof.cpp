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

#include "mumall/kernel.hpp"

namespace mumall {

namespace {

const struct {
  Rule rule;
  const char* name;
} kRuleNames[] = {
    {Rule::Id, "id"},       {Rule::One, "1"},     {Rule::Bot, "bot"},
    {Rule::Top, "top"},     {Rule::Tensor, "tensor"}, {Rule::Par, "par"},
    {Rule::Plus, "plus"},   {Rule::With, "with"}, {Rule::Cut, "cut"},
    {Rule::Mu, "mu"},       {Rule::Nu, "nu"},     {Rule::Ind, "ind"},
    {Rule::Ih, "ih"},
};

Sequent remove_one(const Sequent& s, const Formula& f) {
  long i = s.find(f);
  if (i < 0)
    throw DomainError("proof builder: " + to_string(f) + " not in " +
                      to_string(s));
  return s.without(static_cast<std::size_t>(i));
}

// Greedily assigns each formula of `part` to an unused occurrence in c.
std::vector<int> assign(const Sequent& c, std::vector<bool>& used,
                        const Sequent& part) {
  std::vector<int> out;
  for (const auto& f : part) {
    long i = c.find(f);
    if (i < 0) throw DomainError("proof builder: context mismatch");
    auto j = static_cast<std::size_t>(i);
    while (j < c.size() && c[j] == f && used[j]) ++j;
    if (j >= c.size() || !(c[j] == f))
      throw DomainError("proof builder: context mismatch");
    used[j] = true;
    out.push_back(static_cast<int>(j));
  }
  return out;
}

Proof finalize(ProofNode n, const Formula& principal) {
  if (principal) {
    long i = n.conclusion.find(principal);
    if (i < 0) throw DomainError("proof builder: principal not in conclusion");
    n.principal = static_cast<int>(i);
  }
  if (n.rule == Rule::Tensor || n.rule == Rule::Cut) {
    Formula a, b;
    if (n.rule == Rule::Tensor) {
      a = principal.left();
      b = principal.right();
    } else {
      a = n.cut;
      b = negate(n.cut);
    }
    std::vector<bool> used(n.conclusion.size(), false);
    if (n.principal >= 0) used[static_cast<std::size_t>(n.principal)] = true;
    n.split.clear();
    n.split.push_back(assign(n.conclusion, used,
                             remove_one(n.premises[0]->conclusion, a)));
    n.split.push_back(assign(n.conclusion, used,
                             remove_one(n.premises[1]->conclusion, b)));
    for (bool u : used)
      if (!u) throw DomainError("proof builder: context mismatch");
  }
  return std::make_shared<const ProofNode>(std::move(n));
}

ProofNode node(Rule r, Sequent c, std::vector<Proof> premises = {}) {
  ProofNode n;
  n.rule = r;
  n.conclusion = std::move(c);
  n.premises = std::move(premises);
  return n;
}

Sequent subst_seq(const Sequent& s, const std::string& v, const Annotation& a) {
  std::vector<Formula> fs;
  for (const auto& f : s) fs.push_back(subst_ordinal_var(f, v, a));
  return Sequent(std::move(fs));
}

Annotation subst_ann(const Annotation& x, const std::string& v,
                     const Annotation& a) {
  return x.var == v ? a : x;
}

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& e : kRuleNames)
    if (e.rule == r) return e.name;
  return "?";
}

bool rule_from_name(const std::string& s, Rule* out) {
  for (const auto& e : kRuleNames)
    if (s == e.name) {
      *out = e.rule;
      return true;
    }
  return false;
}

Proof make_id(const std::string& p) {
  return finalize(node(Rule::Id, {Formula::atom(p), Formula::neg_atom(p)}),
                  Formula::atom(p));
}

Proof make_one() {
  return finalize(node(Rule::One, {Formula::one()}), Formula::one());
}

Proof make_top(const Sequent& c) {
  return finalize(node(Rule::Top, c), Formula::top());
}

Proof make_bot(const Proof& prem) {
  return finalize(node(Rule::Bot, prem->conclusion.with(Formula::bot()), {prem}),
                  Formula::bot());
}

Proof make_par(const Formula& a, const Formula& b, const Proof& prem) {
  Formula p = Formula::par(a, b);
  Sequent c = remove_one(remove_one(prem->conclusion, a), b).with(p);
  return finalize(node(Rule::Par, c, {prem}), p);
}

Proof make_with(const Formula& a, const Formula& b, const Proof& p0,
                const Proof& p1) {
  Formula p = Formula::with(a, b);
  Sequent c = remove_one(p0->conclusion, a).with(p);
  if (!(remove_one(p1->conclusion, b).with(p) == c))
    throw DomainError("proof builder: with premises disagree");
  return finalize(node(Rule::With, c, {p0, p1}), p);
}

Proof make_plus(const Formula& a, const Formula& b, int side, const Proof& prem) {
  Formula p = Formula::plus(a, b);
  Sequent c = remove_one(prem->conclusion, side ? b : a).with(p);
  ProofNode n = node(Rule::Plus, c, {prem});
  n.side = side;
  return finalize(std::move(n), p);
}

Proof make_tensor(const Formula& a, const Formula& b, const Proof& p0,
                  const Proof& p1) {
  Formula p = Formula::tensor(a, b);
  Sequent c = remove_one(p0->conclusion, a)
                  .plus(remove_one(p1->conclusion, b))
                  .with(p);
  return finalize(node(Rule::Tensor, c, {p0, p1}), p);
}

Proof make_cut(const Formula& a, const Proof& p0, const Proof& p1) {
  Sequent c = remove_one(p0->conclusion, a)
                  .plus(remove_one(p1->conclusion, negate(a)));
  ProofNode n = node(Rule::Cut, c, {p0, p1});
  n.cut = a;
  return finalize(std::move(n), Formula());
}

Proof make_mu(const Formula& fp, const Annotation& gamma, const Proof& prem) {
  Sequent c = remove_one(prem->conclusion, unfold(fp, gamma)).with(fp);
  ProofNode n = node(Rule::Mu, c, {prem});
  n.gamma = gamma;
  return finalize(std::move(n), fp);
}

Proof make_nu(const Formula& fp, const std::vector<Proof>& prems,
              const Sequent& ctx) {
  Sequent c = prems.empty()
                  ? ctx.with(fp)
                  : remove_one(prems[0]->conclusion, unfold(fp, Ordinal(0)))
                        .with(fp);
  return finalize(node(Rule::Nu, c, prems), fp);
}

Proof make_nu_schematic(const Formula& fp, const std::string& var,
                        const Proof& body, std::vector<Constraint> extra) {
  Sequent c = remove_one(body->conclusion,
                         unfold(fp, Annotation::variable(var)))
                  .with(fp);
  auto s = std::make_shared<Schematic>();
  s->var = var;
  s->bound = fp.annotation();
  s->constraints.push_back({Annotation::variable(var), fp.annotation(), true});
  for (auto& k : extra) s->constraints.push_back(std::move(k));
  s->body = body;
  ProofNode n = node(Rule::Nu, c);
  n.schematic = std::move(s);
  return finalize(std::move(n), fp);
}

Proof make_ind(const std::string& var, const Annotation& value,
               const Proof& prem) {
  ProofNode n = node(Rule::Ind, subst_seq(prem->conclusion, var, value), {prem});
  n.var = var;
  n.gamma = value;
  return finalize(std::move(n), Formula());
}

Proof make_ih(const std::string& var, const Annotation& value,
              const Sequent& c) {
  ProofNode n = node(Rule::Ih, c);
  n.var = var;
  n.gamma = value;
  return finalize(std::move(n), Formula());
}

Proof rebuild(const ProofNode& like, const Sequent& c, const Formula& pf,
              std::vector<Proof> premises) {
  ProofNode n = like;
  n.conclusion = c;
  n.premises = std::move(premises);
  n.principal = -1;
  bool uses_principal = like.rule != Rule::Cut && like.rule != Rule::Ind &&
                        like.rule != Rule::Ih;
  return finalize(std::move(n), uses_principal ? pf : Formula());
}

Formula principal_formula(const ProofNode& n) {
  if (n.principal < 0) return Formula();
  return n.conclusion[static_cast<std::size_t>(n.principal)];
}

std::vector<std::vector<int>> context_map(const ProofNode& n) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < n.premises.size(); ++k) {
    std::vector<int> m(n.conclusion.size(), -1);
    std::vector<int> src;
    if (n.rule == Rule::Tensor || n.rule == Rule::Cut) {
      src = n.split[k];
    } else {
      for (std::size_t i = 0; i < n.conclusion.size(); ++i)
        if (static_cast<int>(i) != n.principal) src.push_back(static_cast<int>(i));
    }
    const Sequent& pc = n.premises[k]->conclusion;
    std::vector<bool> used(pc.size(), false);
    for (int i : src) {
      const Formula& f = n.conclusion[static_cast<std::size_t>(i)];
      long j = pc.find(f);
      if (j < 0) continue;
      auto u = static_cast<std::size_t>(j);
      while (u < pc.size() && pc[u] == f && used[u]) ++u;
      if (u < pc.size() && pc[u] == f) {
        used[u] = true;
        m[static_cast<std::size_t>(i)] = static_cast<int>(u);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& q : p->premises) n += proof_size(q);
  if (p->schematic) n += proof_size(p->schematic->body);
  return n;
}

bool has_cut(const Proof& p) {
  if (p->rule == Rule::Cut) return true;
  for (const auto& q : p->premises)
    if (has_cut(q)) return true;
  return p->schematic && has_cut(p->schematic->body);
}

bool has_schematic(const Proof& p) {
  if (p->schematic || p->rule == Rule::Ind || p->rule == Rule::Ih) return true;
  for (const auto& q : p->premises)
    if (has_schematic(q)) return true;
  return false;
}

Proof subst_ordinal_var(const Proof& p, const std::string& v,
                        const Annotation& a) {
  ProofNode n = *p;
  Formula pf = principal_formula(*p);
  if (pf) pf = subst_ordinal_var(pf, v, a);
  n.conclusion = subst_seq(p->conclusion, v, a);
  n.gamma = subst_ann(p->gamma, v, a);
  if (n.cut) n.cut = subst_ordinal_var(n.cut, v, a);
  for (auto& q : n.premises) q = subst_ordinal_var(q, v, a);
  if (p->schematic) {
    auto s = std::make_shared<Schematic>(*p->schematic);
    s->bound = subst_ann(s->bound, v, a);
    for (auto& k : s->constraints) {
      k.lhs = subst_ann(k.lhs, v, a);
      k.rhs = subst_ann(k.rhs, v, a);
    }
    s->body = subst_ordinal_var(s->body, v, a);
    n.schematic = std::move(s);
  }
  std::vector<Proof> prem = n.premises;
  return rebuild(n, n.conclusion, pf, std::move(prem));
}

namespace {

using IndEnv = std::map<std::string, Proof>;

Proof expand(const Proof& p, IndEnv& env);

Proof expand_ind(const std::string& v, const Proof& tmpl, const Annotation& e,
                 IndEnv& env) {
  return expand(subst_ordinal_var(tmpl, v, e), env);
}

Proof expand(const Proof& p, IndEnv& env) {
  if (p->rule == Rule::Nu && p->schematic && p->schematic->bound.finite()) {
    const Schematic& s = *p->schematic;
    Formula fp = principal_formula(*p);
    std::uint64_t n = s.bound.value.finite_value();
    std::vector<Proof> prems;
    for (std::uint64_t g = 0; g < n; ++g)
      prems.push_back(
          expand(subst_ordinal_var(s.body, s.var, Annotation(Ordinal(g))), env));
    return make_nu(fp, prems,
                   p->conclusion.without(static_cast<std::size_t>(p->principal)));
  }
  if (p->rule == Rule::Ind && p->gamma.finite()) {
    auto saved = env.find(p->var) != env.end() ? env[p->var] : nullptr;
    env[p->var] = p->premises[0];
    Proof r = expand_ind(p->var, p->premises[0], p->gamma, env);
    if (saved)
      env[p->var] = saved;
    else
      env.erase(p->var);
    return r;
  }
  if (p->rule == Rule::Ih && p->gamma.finite()) {
    auto it = env.find(p->var);
    if (it != env.end()) return expand_ind(p->var, it->second, p->gamma, env);
  }
  ProofNode n = *p;
  bool changed = false;
  for (auto& q : n.premises) {
    Proof e = expand(q, env);
    changed |= e != q;
    q = e;
  }
  if (p->schematic) {
    auto s = std::make_shared<Schematic>(*p->schematic);
    s->body = expand(s->body, env);
    changed |= s->body != p->schematic->body;
    n.schematic = std::move(s);
  }
  if (!changed) return p;
  return std::make_shared<const ProofNode>(std::move(n));
}

}  // namespace

Proof expand_finite(const Proof& p) {
  IndEnv env;
  return expand(p, env);
}

Proof instantiate_schematic(const ProofNode& nu, const Annotation& gamma) {
  if (!nu.schematic) throw DomainError("not a schematic node");
  return expand_finite(
      subst_ordinal_var(nu.schematic->body, nu.schematic->var, gamma));
}

}  // namespace mumall
