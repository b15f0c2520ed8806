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
#include <deque>
#include <unordered_set>

#include "mumall/encode.hpp"
#include "mumall/rank.hpp"

namespace mumall {

Formula lock(const Formula& a) {
  return Formula::plus(pass(), Formula::tensor(Formula::neg_atom("key1"), a));
}

Formula aug(const Formula& a, const Formula& ind) {
  if (ind.loose() > 0) throw DomainError("aug: Ind must not have loose indices");
  switch (a.kind()) {
    case Kind::Var:
    case Kind::Bound:
    case Kind::Atom:
    case Kind::NegAtom:
    case Kind::One:
    case Kind::Bot:
    case Kind::Zero:
    case Kind::Top:
      return lock(a);
    case Kind::Par:
      return lock(Formula::par(
          ind, Formula::par(aug(a.left(), ind), aug(a.right(), ind))));
    case Kind::Mu:
      return lock(Formula::fix(Kind::Mu, a.annotation(), a.name(),
                               Formula::par(ind, aug(a.body(), ind))));
    default:
      throw DomainError("aug: formula outside the | / mu fragment: " +
                        to_string(a));
  }
}

Formula hat(const Formula& a, const Formula& ind) {
  Formula out = aug(a, ind);
  for (const auto& x : free_vars(out)) out = substitute(out, x, ind);
  return out;
}

std::vector<Formula> rewrites(const Formula& a,
                              const std::vector<Ordinal>& probes) {
  std::vector<Formula> out;
  auto add = [&](const Formula& f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  if (a.kind() == Kind::Par) {
    add(a.left());
    add(a.right());
  } else if (a.kind() == Kind::Mu) {
    const Annotation& b = a.annotation();
    if (b.symbolic())
      throw DomainError("rewrites: symbolic annotation in " + to_string(a));
    if (b.finite()) {
      for (std::uint64_t g = 0; g < b.value.finite_value(); ++g)
        add(unfold(a, Annotation(Ordinal(g))));
    } else {
      for (const auto& g : probes)
        if (g < b.value) add(unfold(a, Annotation(g)));
    }
  }
  return out;
}

bool in_E(const Formula& f, unsigned n_max, const Ordinal& a,
          const std::vector<Ordinal>& probes, std::size_t max_size) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::deque<Formula> queue;
  for (unsigned n = 0; n <= n_max; ++n) {
    Formula r = rho_formula(n, a);
    if (seen.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Formula g = queue.front();
    queue.pop_front();
    if (g == f) return true;
    for (const auto& h : rewrites(g, probes))
      if (seen.insert(h).second) {
        if (seen.size() > max_size)
          throw ResourceError("in_E: closure exceeds the size limit");
        queue.push_back(h);
      }
  }
  return false;
}

}  // namespace mumall
