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

#include <optional>
#include <stdexcept>

#include "ancestry.hpp"
#include "mumall/rank.hpp"
#include "mumall/transform.hpp"

namespace mumall {

namespace {

bool positive_for_cut(const Formula& a) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::One:
    case Kind::Zero:
    case Kind::Plus:
    case Kind::Tensor:
    case Kind::Mu:
      return true;
    default:
      return false;
  }
}

void collect_cuts(const Proof& p, std::vector<Formula>& out) {
  if (p->rule == Rule::Cut) out.push_back(p->cut);
  for (const auto& q : p->premises) collect_cuts(q, out);
  if (p->schematic) collect_cuts(p->schematic->body, out);
}

}  // namespace

Proof reduce_cut(const Proof& p0, const Proof& p1, const Formula& a) {
  if (!positive_for_cut(a)) return reduce_cut(p1, p0, negate(a));
  long i0 = p0->conclusion.find(a);
  long j = p1->conclusion.find(negate(a));
  if (i0 < 0 || j < 0)
    throw DomainError("reduce_cut: endsequents do not contain the cut pair");
  auto j1 = static_cast<std::size_t>(j);
  const Sequent& d1 = p1->conclusion;
  std::vector<Formula> delta(d1.begin(), d1.end());
  delta.erase(delta.begin() + static_cast<long>(j1));

  std::optional<Proof> inv_cache[2];
  auto inv = [&](int side) {
    auto& slot = inv_cache[side];
    if (!slot) slot = invert(p1, j1, side);
    return *slot;
  };
  auto expect = [](const ProofNode& n, Rule r) {
    if (n.rule != r)
      throw DomainError(std::string("reduce_cut: unexpected origin ") +
                        rule_name(n.rule));
  };
  Repair repair;
  switch (a.kind()) {
    case Kind::Atom:
      repair = [&](const ProofNode& n, std::size_t) {
        expect(n, Rule::Id);
        return p1;
      };
      break;
    case Kind::One:
      repair = [&](const ProofNode& n, std::size_t) {
        expect(n, Rule::One);
        return inv(0);
      };
      break;
    case Kind::Zero:
      repair = [&](const ProofNode& n, std::size_t) -> Proof {
        throw DomainError(std::string("reduce_cut: 0 has no origin, found ") +
                          rule_name(n.rule));
      };
      break;
    case Kind::Plus:
      repair = [&](const ProofNode& n, std::size_t) {
        expect(n, Rule::Plus);
        int s = n.side;
        return make_cut(s ? a.right() : a.left(), n.premises[0], inv(s));
      };
      break;
    case Kind::Tensor:
      repair = [&](const ProofNode& n, std::size_t) {
        expect(n, Rule::Tensor);
        Proof inner = make_cut(a.right(), n.premises[1], inv(0));
        return make_cut(a.left(), n.premises[0], inner);
      };
      break;
    case Kind::Mu:
      repair = [&](const ProofNode& n, std::size_t) {
        expect(n, Rule::Mu);
        Formula u = unfold(a, n.gamma);
        return make_cut(u, n.premises[0], invert(p1, j1, 0, n.gamma));
      };
      break;
    default:
      throw DomainError("reduce_cut: unexpected cut formula");
  }
  return replace_ancestors(p0, static_cast<std::size_t>(i0), delta, repair);
}

namespace {

class Eliminator {
 public:
  explicit Eliminator(ElimStats* stats) : stats_(stats) {}

  Proof run(const Proof& p) {
    if (p->schematic || p->rule == Rule::Ind || p->rule == Rule::Ih) {
      if (has_cut(p))
        throw UnsupportedProof("cut inside a schematic region");
      return p;
    }
    if (p->rule == Rule::Cut) {
      Proof e0 = run(p->premises[0]);
      Proof e1 = run(p->premises[1]);
      Proof r = reduce_cut(e0, e1, p->cut);
      if (stats_) ++stats_->reductions;
      if (p->cut.finite_annotations()) {
        Ordinal bound = rank(p->cut);
        std::vector<Formula> cuts;
        collect_cuts(r, cuts);
        for (const auto& c : cuts)
          if (!(rank(c) < bound))
            throw std::logic_error("cut reduction did not lower the rank of " +
                                   to_string(p->cut));
        if (stats_) ++stats_->rank_checks;
      }
      return run(r);
    }
    std::vector<Proof> prems;
    bool changed = false;
    for (const auto& q : p->premises) {
      prems.push_back(run(q));
      changed = changed || prems.back() != q;
    }
    if (!changed) return p;
    ProofNode n = *p;
    n.premises = std::move(prems);
    return std::make_shared<const ProofNode>(std::move(n));
  }

 private:
  ElimStats* stats_;
};

}  // namespace

Proof eliminate_cuts(const Proof& p, ElimStats* stats) {
  if (!has_cut(p)) return p;
  return Eliminator(stats).run(expand_finite(p));
}

}  // namespace mumall
