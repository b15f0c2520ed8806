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

#include <deque>

#include "multiset.hpp"
#include "mumall/search.hpp"

namespace mumall {

std::vector<std::vector<Sequent>> rule_instances(const Sequent& g) {
  std::vector<std::vector<Sequent>> out;
  if (g.size() == 2 && g[0].kind() == Kind::Atom &&
      g[1].kind() == Kind::NegAtom && g[0].name() == g[1].name())
    out.push_back({});
  if (g.size() == 1 && g[0].kind() == Kind::One) out.push_back({});
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Formula& f = g[i];
    if (i > 0 && g[i - 1] == f) continue;
    Sequent ctx = g.without(i);
    switch (f.kind()) {
      case Kind::Top:
        out.push_back({});
        break;
      case Kind::Bot:
        out.push_back({ctx});
        break;
      case Kind::Par:
        out.push_back({ctx.with({f.left(), f.right()})});
        break;
      case Kind::With:
        out.push_back({ctx.with(f.left()), ctx.with(f.right())});
        break;
      case Kind::Plus:
        out.push_back({ctx.with(f.left())});
        out.push_back({ctx.with(f.right())});
        break;
      case Kind::Nu:
        if (f.annotation().finite()) {
          std::vector<Sequent> prems;
          for (std::uint64_t k = 0; k < f.annotation().value.finite_value(); ++k)
            prems.push_back(ctx.with(unfold(f, Annotation(Ordinal(k)))));
          out.push_back(std::move(prems));
        }
        break;
      case Kind::Mu:
        if (f.annotation().finite())
          for (std::uint64_t k = 0; k < f.annotation().value.finite_value(); ++k)
            out.push_back({ctx.with(unfold(f, Annotation(Ordinal(k))))});
        break;
      case Kind::Tensor:
        for_each_split(ctx, [&](const Sequent& l, const Sequent& r) {
          out.push_back({l.with(f.left()), r.with(f.right())});
          return false;
        });
        break;
      default:
        break;
    }
  }
  return out;
}

SequentSet one_step_closure(const SequentSet& s,
                            const std::vector<Sequent>& universe) {
  SequentSet out;
  for (const auto& g : universe) {
    if (!decision_mode(g))
      throw DomainError("closure: infinite annotation in " + to_string(g));
    for (const auto& prems : rule_instances(g)) {
      bool all = true;
      for (const auto& p : prems)
        if (!s.count(p)) {
          all = false;
          break;
        }
      if (all) {
        out.insert(g);
        break;
      }
    }
  }
  return out;
}

SequentSet closure_fixpoint(const std::vector<Sequent>& universe,
                            std::size_t* rounds) {
  SequentSet cur;
  std::size_t n = 0;
  for (;;) {
    SequentSet next = one_step_closure(cur, universe);
    ++n;
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  if (rounds) *rounds = n;
  return cur;
}

std::vector<Sequent> premise_closure(const std::vector<Sequent>& seeds,
                                     std::size_t max_size) {
  SequentSet seen;
  std::vector<Sequent> out;
  std::deque<Sequent> queue;
  for (const auto& g : seeds)
    if (seen.insert(g).second) {
      out.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty()) {
    Sequent g = queue.front();
    queue.pop_front();
    for (const auto& prems : rule_instances(g))
      for (const auto& p : prems)
        if (seen.insert(p).second) {
          if (out.size() >= max_size)
            throw ResourceError("premise closure exceeds the size limit");
          out.push_back(p);
          queue.push_back(p);
        }
  }
  return out;
}

}  // namespace mumall
