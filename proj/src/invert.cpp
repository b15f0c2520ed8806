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

#include "ancestry.hpp"
#include "mumall/transform.hpp"

namespace mumall {

namespace {

Sequent replaced(const Sequent& c, std::size_t occ,
                 const std::vector<Formula>& cedent) {
  return c.without(occ).with(cedent);
}

}  // namespace

Proof replace_ancestors(const Proof& p, std::size_t occ,
                        const std::vector<Formula>& cedent,
                        const Repair& repair) {
  const ProofNode& n = *p;
  if (occ >= n.conclusion.size())
    throw DomainError("replace_ancestors: occurrence out of range");
  if (n.rule == Rule::Id || n.rule == Rule::One ||
      (n.principal >= 0 && static_cast<std::size_t>(n.principal) == occ &&
       n.rule != Rule::Cut))
    return repair(n, occ);
  if (n.rule == Rule::Ind || n.rule == Rule::Ih || n.schematic)
    throw UnsupportedProof("ancestor tracing through a schematic region");
  Sequent c = replaced(n.conclusion, occ, cedent);
  if (n.rule == Rule::Top) return make_top(c);
  auto maps = context_map(n);
  std::vector<Proof> prems = n.premises;
  bool found = false;
  for (std::size_t k = 0; k < prems.size(); ++k) {
    int j = maps[k][occ];
    if (j < 0) continue;
    found = true;
    prems[k] = replace_ancestors(prems[k], static_cast<std::size_t>(j),
                                 cedent, repair);
  }
  if (!found && !prems.empty())
    throw DomainError("replace_ancestors: occurrence lost");
  return rebuild(n, c, principal_formula(n), std::move(prems));
}

Proof invert(const Proof& p, std::size_t index, int side,
             const Annotation& gamma) {
  if (index >= p->conclusion.size())
    throw DomainError("invert: index out of range");
  const Formula a = p->conclusion[index];
  std::vector<Formula> cedent;
  Repair repair;
  switch (a.kind()) {
    case Kind::Bot:
      repair = [](const ProofNode& n, std::size_t) { return n.premises[0]; };
      break;
    case Kind::Par:
      cedent = {a.left(), a.right()};
      repair = [](const ProofNode& n, std::size_t) { return n.premises[0]; };
      break;
    case Kind::With:
      if (side != 0 && side != 1) throw DomainError("invert: bad side");
      cedent = {side ? a.right() : a.left()};
      repair = [side](const ProofNode& n, std::size_t) {
        return n.premises[static_cast<std::size_t>(side)];
      };
      break;
    case Kind::Nu: {
      if (gamma.symbolic() || a.annotation().symbolic() ||
          !(gamma.value < a.annotation().value))
        throw DomainError("invert: gamma must be below the annotation");
      cedent = {unfold(a, gamma)};
      repair = [gamma](const ProofNode& n, std::size_t) {
        if (n.schematic) return instantiate_schematic(n, gamma);
        return n.premises[gamma.value.finite_value()];
      };
      break;
    }
    default:
      throw DomainError("invert: " + to_string(a) + " is not invertible");
  }
  Repair guarded = [&](const ProofNode& n, std::size_t i) {
    if (n.rule == Rule::Id || n.rule == Rule::One)
      throw DomainError("invert: origin is an axiom");
    return repair(n, i);
  };
  return replace_ancestors(p, index, cedent, guarded);
}

}  // namespace mumall
