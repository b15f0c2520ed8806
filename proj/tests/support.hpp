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

#ifndef MUMALL_TESTS_SUPPORT_HPP
#define MUMALL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mumall/encode.hpp"
#include "mumall/kernel.hpp"
#include "mumall/ordinal.hpp"
#include "mumall/rank.hpp"
#include "mumall/syntax.hpp"

namespace support {

using namespace mumall;

// Naive ordinals --------------------------------------------------------------
// A CNF ordinal as a plain tree, with textbook operations.  Independent of
// the library's representation.

struct Naive {
  std::vector<Naive> exps;  // strictly descending
  std::vector<std::uint64_t> coeffs;
};

inline int ncmp(const Naive& a, const Naive& b) {
  std::size_t n = std::min(a.exps.size(), b.exps.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ncmp(a.exps[i], b.exps[i]);
    if (c) return c;
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i] ? -1 : 1;
  }
  if (a.exps.size() == b.exps.size()) return 0;
  return a.exps.size() < b.exps.size() ? -1 : 1;
}

inline Naive nnat(std::uint64_t n) {
  Naive a;
  if (n) {
    a.exps.push_back(Naive{});
    a.coeffs.push_back(n);
  }
  return a;
}

inline Naive nsum(const Naive& a, const Naive& b) {
  std::vector<std::pair<Naive, std::uint64_t>> ts;
  auto add = [&](const Naive& e, std::uint64_t c) {
    for (auto& t : ts)
      if (ncmp(t.first, e) == 0) {
        t.second += c;
        return;
      }
    ts.push_back({e, c});
  };
  for (std::size_t i = 0; i < a.exps.size(); ++i) add(a.exps[i], a.coeffs[i]);
  for (std::size_t i = 0; i < b.exps.size(); ++i) add(b.exps[i], b.coeffs[i]);
  std::sort(ts.begin(), ts.end(),
            [](const auto& x, const auto& y) { return ncmp(x.first, y.first) > 0; });
  Naive out;
  for (auto& t : ts) {
    out.exps.push_back(t.first);
    out.coeffs.push_back(t.second);
  }
  return out;
}

inline Naive nprod(const Naive& a, const Naive& b) {
  Naive out;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    for (std::size_t j = 0; j < b.exps.size(); ++j) {
      Naive t;
      t.exps.push_back(nsum(a.exps[i], b.exps[j]));
      t.coeffs.push_back(a.coeffs[i] * b.coeffs[j]);
      out = nsum(out, t);
    }
  return out;
}

// Classical ordinal addition.
inline Naive nadd(const Naive& a, const Naive& b) {
  if (b.exps.empty()) return a;
  Naive out;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    int c = ncmp(a.exps[i], b.exps[0]);
    if (c > 0) {
      out.exps.push_back(a.exps[i]);
      out.coeffs.push_back(a.coeffs[i]);
    } else if (c == 0) {
      out.exps.push_back(b.exps[0]);
      out.coeffs.push_back(a.coeffs[i] + b.coeffs[0]);
      for (std::size_t j = 1; j < b.exps.size(); ++j) {
        out.exps.push_back(b.exps[j]);
        out.coeffs.push_back(b.coeffs[j]);
      }
      return out;
    } else {
      break;
    }
  }
  for (std::size_t j = 0; j < b.exps.size(); ++j) {
    out.exps.push_back(b.exps[j]);
    out.coeffs.push_back(b.coeffs[j]);
  }
  return out;
}

// Classical ordinal multiplication.
inline Naive nmul(const Naive& a, const Naive& b) {
  if (a.exps.empty() || b.exps.empty()) return Naive{};
  Naive out;
  for (std::size_t j = 0; j < b.exps.size(); ++j) {
    Naive part;
    if (b.exps[j].exps.empty()) {
      part = a;
      part.coeffs[0] *= b.coeffs[j];
    } else {
      part.exps.push_back(nadd(a.exps[0], b.exps[j]));
      part.coeffs.push_back(b.coeffs[j]);
    }
    out = nadd(out, part);
  }
  return out;
}

inline Naive to_naive(const Ordinal& o) {
  Naive out;
  for (const auto& t : o.terms()) {
    out.exps.push_back(to_naive(t.exponent));
    out.coeffs.push_back(t.coeff);
  }
  return out;
}

inline Ordinal from_naive(const Naive& a) {
  std::vector<OrdinalTerm> ts;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    ts.push_back({from_naive(a.exps[i]), a.coeffs[i]});
  return Ordinal::from_terms(std::move(ts));
}

// Random generation ------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Ordinal with nesting depth at most `depth` (finite values have depth 1).
inline Ordinal random_ordinal(Rng& rng, int depth, std::uint64_t max_coeff = 4,
                              std::size_t max_terms = 3) {
  if (depth <= 0 || uniform(rng, 0, 5) == 0) return Ordinal();
  if (depth == 1) return Ordinal(uniform(rng, 0, max_coeff * 3));
  std::size_t n = uniform(rng, 1, max_terms);
  std::vector<Ordinal> exps;
  for (std::size_t i = 0; i < n; ++i) exps.push_back(random_ordinal(rng, depth - 1, max_coeff, max_terms));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdinalTerm> ts;
  for (auto& e : exps) ts.push_back({e, uniform(rng, 1, max_coeff)});
  return Ordinal::from_terms(std::move(ts));
}

inline Formula random_leaf(Rng& rng, const std::vector<std::string>& vars,
                           unsigned bound) {
  std::size_t choices = 8 + vars.size() + bound;
  std::size_t c = uniform(rng, 0, choices - 1);
  static const char* names[] = {"p", "q"};
  if (c < 2) return Formula::atom(names[c]);
  if (c < 4) return Formula::neg_atom(names[c - 2]);
  if (c == 4) return Formula::one();
  if (c == 5) return Formula::bot();
  if (c == 6) return Formula::zero();
  if (c == 7) return Formula::top();
  c -= 8;
  if (c < vars.size()) return Formula::var(vars[c]);
  return Formula::bound(static_cast<std::uint32_t>(c - vars.size()));
}

// Formula with about `size` nodes and annotations <= max_ann.  Free variables
// are drawn from `vars`.
inline Formula random_formula(Rng& rng, int size, std::uint64_t max_ann,
                              const std::vector<std::string>& vars = {},
                              unsigned bound = 0) {
  if (size <= 1) return random_leaf(rng, vars, bound);
  std::uint64_t c = uniform(rng, 0, 5);
  if (c < 4) {
    static const Kind ks[] = {Kind::Tensor, Kind::Par, Kind::Plus, Kind::With};
    int l = static_cast<int>(uniform(rng, 1, static_cast<std::uint64_t>(size - 1)));
    return Formula::binary(ks[c], random_formula(rng, l, max_ann, vars, bound),
                           random_formula(rng, size - 1 - l, max_ann, vars, bound));
  }
  Annotation a(Ordinal(uniform(rng, 0, max_ann)));
  return Formula::fix(c == 4 ? Kind::Mu : Kind::Nu, a, "x",
                      random_formula(rng, size - 1, max_ann, vars, bound + 1));
}

// Exact finite rank by direct recursion over naturals ----------------------------

inline std::uint64_t naive_rank(const Formula& a,
                                const std::map<std::string, std::uint64_t>& s,
                                std::vector<std::uint64_t>& env) {
  switch (a.kind()) {
    case Kind::Var:
      return s.count(a.name()) ? s.at(a.name()) : 1;
    case Kind::Bound:
      return env[env.size() - 1 - a.index()];
    case Kind::Tensor:
    case Kind::Par:
    case Kind::Plus:
    case Kind::With:
      return 1 + naive_rank(a.left(), s, env) + naive_rank(a.right(), s, env);
    case Kind::Mu:
    case Kind::Nu: {
      std::uint64_t beta = a.annotation().value.finite_value();
      // v[g] is the value at annotation g; v[0] = 1.
      std::vector<std::uint64_t> v{1};
      for (std::uint64_t b = 1; b <= beta; ++b) {
        std::uint64_t best = 0;
        for (std::uint64_t g = 0; g < b; ++g) {
          env.push_back(v[g]);
          best = std::max(best, naive_rank(a.body(), s, env) + 1);
          env.pop_back();
        }
        v.push_back(best);
      }
      return v[beta];
    }
    default:
      return 1;
  }
}

inline std::uint64_t naive_rank(const Formula& a,
                                const std::map<std::string, std::uint64_t>& s = {}) {
  std::vector<std::uint64_t> env;
  return naive_rank(a, s, env);
}

// The small exhaustive universe ------------------------------------------------
// Formulas over {p, q} with annotations <= max_ann and exactly `size` nodes
// whose loose indices are below nb.

inline std::vector<Formula> formulas_of_size(int size, unsigned nb,
                                             std::uint64_t max_ann) {
  std::vector<Formula> out;
  if (size == 1) {
    for (const char* n : {"p", "q"}) {
      out.push_back(Formula::atom(n));
      out.push_back(Formula::neg_atom(n));
    }
    out.push_back(Formula::one());
    out.push_back(Formula::bot());
    out.push_back(Formula::zero());
    out.push_back(Formula::top());
    for (unsigned i = 0; i < nb; ++i) out.push_back(Formula::bound(i));
    return out;
  }
  for (int l = 1; l < size - 1; ++l) {
    auto ls = formulas_of_size(l, nb, max_ann);
    auto rs = formulas_of_size(size - 1 - l, nb, max_ann);
    for (Kind k : {Kind::Tensor, Kind::Par, Kind::Plus, Kind::With})
      for (const auto& a : ls)
        for (const auto& b : rs) out.push_back(Formula::binary(k, a, b));
  }
  for (const auto& b : formulas_of_size(size - 1, nb + 1, max_ann))
    for (Kind k : {Kind::Mu, Kind::Nu})
      for (std::uint64_t a = 0; a <= max_ann; ++a)
        out.push_back(Formula::fix(k, Annotation(Ordinal(a)), "x", b));
  return out;
}

// Every sequent of rank <= max_rank and total size <= max_size.
inline std::vector<Sequent> small_universe(int max_size = 5,
                                           std::uint64_t max_rank = 5,
                                           std::uint64_t max_ann = 2) {
  struct Item {
    Formula f;
    std::uint64_t r;
    int s;
  };
  std::vector<Item> items;
  for (int s = 1; s <= max_size; ++s)
    for (const auto& f : formulas_of_size(s, 0, max_ann)) {
      std::uint64_t r = naive_rank(f);
      if (r <= max_rank) items.push_back({f, r, s});
    }
  std::vector<Sequent> out;
  std::vector<Formula> cur;
  std::function<void(std::size_t, int, std::uint64_t)> rec =
      [&](std::size_t from, int size, std::uint64_t rk) {
        if (!cur.empty()) out.push_back(Sequent(cur));
        for (std::size_t i = from; i < items.size(); ++i) {
          if (size + items[i].s > max_size) break;  // items ascend in size
          if (rk + items[i].r > max_rank) continue;
          cur.push_back(items[i].f);
          rec(i, size + items[i].s, rk + items[i].r);
          cur.pop_back();
        }
      };
  rec(0, 0, 0);
  return out;
}

// Naive provability ---------------------------------------------------------------
// Tries every rule on every occurrence, every context split by bitmask and
// every mu choice, memoized on the sequent.

class NaiveProver {
 public:
  bool provable(const Sequent& g) {
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
    bool r = search(g);
    memo_.emplace(g, r);
    return r;
  }

 private:
  std::map<Sequent, bool> memo_;

  static Sequent remove_at(const Sequent& g, std::size_t i) {
    std::vector<Formula> fs(g.begin(), g.end());
    fs.erase(fs.begin() + static_cast<long>(i));
    return Sequent(fs);
  }

  static Sequent add(const Sequent& g, std::vector<Formula> more) {
    std::vector<Formula> fs(g.begin(), g.end());
    fs.insert(fs.end(), more.begin(), more.end());
    return Sequent(fs);
  }

  bool search(const Sequent& g) {
    if (g.size() == 1 && g[0].kind() == Kind::One) return true;
    if (g.size() == 2) {
      const Formula& a = g[0];
      const Formula& b = g[1];
      if (a.kind() == Kind::Atom && b.kind() == Kind::NegAtom && a.name() == b.name())
        return true;
      if (b.kind() == Kind::Atom && a.kind() == Kind::NegAtom && a.name() == b.name())
        return true;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      Sequent ctx = remove_at(g, i);
      switch (f.kind()) {
        case Kind::Top:
          return true;
        case Kind::Bot:
          if (provable(ctx)) return true;
          break;
        case Kind::Par:
          if (provable(add(ctx, {f.left(), f.right()}))) return true;
          break;
        case Kind::With:
          if (provable(add(ctx, {f.left()})) && provable(add(ctx, {f.right()})))
            return true;
          break;
        case Kind::Plus:
          if (provable(add(ctx, {f.left()})) || provable(add(ctx, {f.right()})))
            return true;
          break;
        case Kind::Tensor: {
          std::size_t n = ctx.size();
          for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Formula> l{f.left()}, r{f.right()};
            for (std::size_t j = 0; j < n; ++j)
              ((mask >> j) & 1 ? l : r).push_back(ctx[j]);
            if (provable(Sequent(l)) && provable(Sequent(r))) return true;
          }
          break;
        }
        case Kind::Mu: {
          std::uint64_t b = f.annotation().value.finite_value();
          for (std::uint64_t k = 0; k < b; ++k)
            if (provable(add(ctx, {unfold(f, Annotation(Ordinal(k)))}))) return true;
          break;
        }
        case Kind::Nu: {
          std::uint64_t b = f.annotation().value.finite_value();
          bool all = true;
          for (std::uint64_t k = 0; k < b && all; ++k)
            all = provable(add(ctx, {unfold(f, Annotation(Ordinal(k)))}));
          if (all) return true;
          break;
        }
        default:
          break;
      }
    }
    return false;
  }
};


// Proofs with cuts ------------------------------------------------------------------
// Compositions of monotonicity and functoriality derivations at finite
// annotations, cut against each other and against eta-expanded identities.

inline std::vector<Formula> monotone_bodies() {
  Formula x = Formula::var("x");
  Formula p = Formula::atom("p");
  return {x,
          Formula::plus(x, Formula::one()),
          Formula::plus(Formula::one(), x),
          Formula::par(x, Formula::bot()),
          Formula::plus(Formula::tensor(p, x), Formula::one()),
          Formula::with(x, Formula::top()),
          Formula::plus(Formula::tensor(x, x), Formula::one())};
}

inline std::vector<Formula> hole_contexts() {
  Formula z = Formula::var("z");
  return {Formula::tensor(z, Formula::one()), Formula::par(z, Formula::atom("q")),
          Formula::plus(z, Formula::atom("q")), Formula::with(Formula::top(), z),
          Formula::nu(Annotation(Ordinal(2)), "y", Formula::par(z, Formula::var("y"))),
          Formula::mu(Annotation(Ordinal(2)), "y", Formula::plus(z, Formula::var("y")))};
}

inline Formula fix_of(Kind k, const Formula& body, std::uint64_t b) {
  return Formula::fix(k, Annotation(Ordinal(b)), "x", abstract(body, "x"));
}

struct CutCase {
  Proof proof;
  std::string label;
};

// Proof of {~eta^{b0}, eta^{bn}} for the chain b0, ..., bn composed by cuts;
// ascending for mu, descending for nu.
inline Proof mono_chain(Kind k, const Formula& body, const std::vector<std::uint64_t>& bs) {
  auto step = [&](std::uint64_t from, std::uint64_t to) {
    return k == Kind::Mu ? monotonicity_proof(k, body, "x", Ordinal(from), Ordinal(to))
                         : monotonicity_proof(k, body, "x", Ordinal(to), Ordinal(from));
  };
  Proof acc = step(bs[0], bs[1]);
  for (std::size_t i = 2; i < bs.size(); ++i)
    acc = make_cut(fix_of(k, body, bs[i - 1]), acc, step(bs[i - 1], bs[i]));
  return acc;
}

inline std::vector<CutCase> cut_corpus(Rng& rng, std::size_t n) {
  std::vector<CutCase> out;
  auto bodies = monotone_bodies();
  auto holes = hole_contexts();
  while (out.size() < n) {
    const Formula& body = bodies[uniform(rng, 0, bodies.size() - 1)];
    Kind k = uniform(rng, 0, 1) ? Kind::Mu : Kind::Nu;
    std::size_t len = uniform(rng, 3, 4);
    std::vector<std::uint64_t> bs;
    for (std::size_t i = 0; i < len; ++i) bs.push_back(uniform(rng, 0, 3));
    std::sort(bs.begin(), bs.end());
    if (k == Kind::Nu) std::reverse(bs.begin(), bs.end());
    Proof chain = mono_chain(k, body, bs);
    std::string label = std::string(k == Kind::Mu ? "mu" : "nu") + " chain";
    switch (uniform(rng, 0, 3)) {
      case 0:
        break;
      case 1: {
        // Wrap the chain in a context and cut against the identity.
        const Formula& ctx = holes[uniform(rng, 0, holes.size() - 1)];
        Formula lo = fix_of(k, body, bs.front());
        Formula hi = fix_of(k, body, bs.back());
        Proof f = functoriality(ctx, "z", lo, hi, chain);
        Formula top = substitute(ctx, "z", hi);
        chain = make_cut(top, f, eta_expand_identity(top));
        label += " in context";
        break;
      }
      case 2: {
        // Two functoriality steps composed by a cut.
        const Formula& ctx = holes[uniform(rng, 0, holes.size() - 1)];
        Formula a = fix_of(Kind::Mu, body, 0), b = fix_of(Kind::Mu, body, 1),
                c = fix_of(Kind::Mu, body, 2);
        Proof f1 = functoriality(ctx, "z", a, b,
                                 monotonicity_proof(Kind::Mu, body, "x", Ordinal(0), Ordinal(1)));
        Proof f2 = functoriality(ctx, "z", b, c,
                                 monotonicity_proof(Kind::Mu, body, "x", Ordinal(1), Ordinal(2)));
        chain = make_cut(substitute(ctx, "z", b), f1, f2);
        label = "functoriality composition";
        break;
      }
      default: {
        // Identity cut on the end formula.
        Formula end = chain->conclusion[0];
        chain = make_cut(end, chain, eta_expand_identity(end));
        label += " against identity";
        break;
      }
    }
    out.push_back({chain, label});
  }
  return out;
}

// Minsky machines --------------------------------------------------------------
// Breadth-first simulation written directly from the machine semantics:
// every configuration reachable from (start, input) in fewer than k steps.

inline std::set<std::pair<std::string, std::vector<std::uint64_t>>> bfs(
    const MinskyMachine& m, const std::vector<std::uint64_t>& input, std::uint64_t k) {
  using C = std::pair<std::string, std::vector<std::uint64_t>>;
  std::set<C> seen;
  if (k == 0) return seen;
  std::vector<std::uint64_t> v = input;
  v.resize(m.counters, 0);
  std::deque<std::pair<C, std::uint64_t>> q{{{m.start, v}, 0}};
  seen.insert({m.start, v});
  while (!q.empty()) {
    auto [c, d] = q.front();
    q.pop_front();
    if (d + 1 >= k) continue;
    for (const auto& ins : m.instructions) {
      if (ins.p != c.first) continue;
      C n = c;
      if (ins.op == Instruction::Op::Inc) {
        n.first = ins.q;
        ++n.second[ins.i];
      } else if (c.second[ins.i] > 0) {
        n.first = ins.q;
        --n.second[ins.i];
      } else {
        n.first = ins.r;
      }
      if (seen.insert(n).second) q.push_back({n, d + 1});
    }
  }
  return seen;
}

}  // namespace support

#endif  // MUMALL_TESTS_SUPPORT_HPP
