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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mumall/encode.hpp"
#include "mumall/kernel.hpp"
#include "mumall/rank.hpp"
#include "mumall/search.hpp"
#include "mumall/transform.hpp"
#include "support.hpp"

using namespace mumall;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string summary;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
    if (!cond) ++violations;
  }
  std::size_t violations = 0;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_time = secs < limit_s;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", id, name,
              o.summary.c_str(), secs, limit_s);
  if (!o.ok)
    std::printf("       %zu violation(s); first: %s\n", o.violations, o.first_failure.c_str());
  if (!in_time) std::printf("       time limit exceeded\n");
  std::fflush(stdout);
}


// Shared exhaustive universe.
const std::vector<Sequent>& universe() {
  static const std::vector<Sequent> u = support::small_universe(6, 5, 2);
  return u;
}

Ordinal random_value(support::Rng& rng) {
  switch (support::uniform(rng, 0, 6)) {
    case 0: return Ordinal::omega();
    case 1: return parse_ordinal("w+1");
    case 2: return parse_ordinal("w*2");
    default: return Ordinal(support::uniform(rng, 1, 4));
  }
}

Valuation random_valuation(support::Rng& rng, const std::vector<std::string>& vars) {
  Valuation s = Valuation::one();
  for (const auto& v : vars) s.set(v, random_value(rng));
  return s;
}

// --- 1 ------------------------------------------------------------------------

void ordinal_algebra(Outcome& o) {
  support::Rng rng(101);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    Ordinal a = support::random_ordinal(rng, 3), b = support::random_ordinal(rng, 3),
            c = support::random_ordinal(rng, 3);
    std::string ctx = a.str() + ", " + b.str() + ", " + c.str();
    o.expect(natural_sum(a, b) == natural_sum(b, a), "sum commutes: " + ctx);
    o.expect(natural_product(a, b) == natural_product(b, a), "product commutes: " + ctx);
    o.expect(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)),
             "sum associates: " + ctx);
    o.expect(natural_product(natural_product(a, b), c) ==
                 natural_product(a, natural_product(b, c)),
             "product associates: " + ctx);
    o.expect(natural_product(a, natural_sum(b, c)) ==
                 natural_sum(natural_product(a, b), natural_product(a, c)),
             "distributes: " + ctx);
    if (a < b) {
      o.expect(natural_sum(a, c) < natural_sum(b, c), "sum monotone: " + ctx);
      o.expect(natural_sum(c, a) < natural_sum(c, b), "sum monotone right: " + ctx);
      if (!c.is_zero()) {
        o.expect(natural_product(a, c) < natural_product(b, c), "product monotone: " + ctx);
        o.expect(natural_product(c, a) < natural_product(c, b), "product monotone right: " + ctx);
      }
    }
    // Closure below omega^g.
    Ordinal g = support::random_ordinal(rng, 2);
    Ordinal cap = omega_pow(g);
    if (a < cap && b < cap)
      o.expect(natural_sum(a, b) < cap, "closure below w^" + g.str() + ": " + ctx);
    // Against the naive oracle.
    auto na = support::to_naive(a), nb = support::to_naive(b);
    o.expect(natural_sum(a, b) == support::from_naive(support::nsum(na, nb)), "naive sum: " + ctx);
    o.expect(natural_product(a, b) == support::from_naive(support::nprod(na, nb)),
             "naive product: " + ctx);
  }
  // Closure below omega^g on ordinals built just under the cap.
  for (int i = 0; i < 2000; ++i) {
    Ordinal g = support::random_ordinal(rng, 2);
    if (g.is_zero()) continue;
    std::vector<OrdinalTerm> ta, tb;
    Ordinal ra = support::random_ordinal(rng, 2), rb = support::random_ordinal(rng, 2);
    for (const auto& t : ra.terms())
      if (t.exponent < g) ta.push_back(t);
    for (const auto& t : rb.terms())
      if (t.exponent < g) tb.push_back(t);
    Ordinal a = Ordinal::from_terms(ta), b = Ordinal::from_terms(tb);
    o.expect(natural_sum(a, b) < omega_pow(g), "closure: " + a.str() + ", " + b.str());
  }
  // Exhaustive comparison against the naive structural oracle: every
  // ordinal of nesting depth <= 3 with coefficients <= 3 and at most 5 CNF
  // terms counted across all levels.
  std::vector<Ordinal> all;
  std::function<void(int, int, std::vector<std::pair<Ordinal, int>>&)> gen =
      [&](int depth, int budget, std::vector<std::pair<Ordinal, int>>& out) {
        out.push_back({Ordinal(), 0});
        if (depth == 0) return;
        std::vector<std::pair<Ordinal, int>> exps;
        gen(depth - 1, budget - 1, exps);
        std::sort(exps.begin(), exps.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
        std::function<void(std::size_t, int, std::vector<OrdinalTerm>&)> rec =
            [&](std::size_t from, int used, std::vector<OrdinalTerm>& ts) {
              for (std::size_t i = from; i < exps.size(); ++i) {
                int cost = used + 1 + exps[i].second;
                if (cost > budget) continue;
                for (std::uint64_t c = 1; c <= 3; ++c) {
                  ts.push_back({exps[i].first, c});
                  out.push_back({Ordinal::from_terms(ts), cost});
                  rec(i + 1, cost, ts);
                  ts.pop_back();
                }
              }
            };
        std::vector<OrdinalTerm> ts;
        rec(0, 0, ts);
      };
  std::vector<std::pair<Ordinal, int>> tagged;
  gen(3, 5, tagged);
  for (const auto& t : tagged) all.push_back(t.first);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<support::Naive> naive;
  for (const auto& a : all) naive.push_back(support::to_naive(a));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      int c = support::ncmp(naive[i], naive[j]);
      auto r = compare(all[i], all[j]);
      if ((r < 0) != (c < 0) || (r == 0) != (c == 0))
        o.expect(false, "compare " + all[i].str() + " vs " + all[j].str());
    }
  o.summary = std::to_string(n) + " random triples, " + std::to_string(all.size()) +
              " ordinals compared exhaustively";
}

// --- 2 ------------------------------------------------------------------------

void rank_laws(Outcome& o) {
  support::Rng rng(202);
  const int n = 10000;
  const std::vector<std::string> vars{"y", "z"};
  std::size_t mono = 0, subst = 0, scal = 0, fix = 0;
  for (int i = 0; i < n; ++i) {
    Formula a = support::random_formula(rng, 7, 3, vars);
    // (1) Monotonicity in the valuation, and ranks are at least 1.
    Valuation lo = random_valuation(rng, vars), hi = Valuation::one();
    for (const auto& v : vars) {
      Ordinal base = lo.at(v);
      hi.set(v, support::uniform(rng, 0, 1) ? base : natural_sum(base, random_value(rng)));
    }
    Ordinal rlo = rank_val(a, lo), rhi = rank_val(a, hi);
    o.expect(rlo <= rhi, "monotone: " + to_string(a));
    o.expect(Ordinal(1) <= rlo, "at least 1: " + to_string(a));
    ++mono;
    // (2) Substitution identity.
    Formula b = support::random_formula(rng, 4, 3, {"z"});
    Valuation s = random_valuation(rng, vars);
    Valuation sx = s;
    sx.set("y", rank_val(b, s));
    o.expect(rank_val(substitute(a, "y", b), s) == rank_val(a, sx),
             "substitution: " + to_string(a) + " [" + to_string(b) + "/y]");
    ++subst;
    // (3) Scaling: [A]_{s, g.s'} <= g (x) [A]_{s, s'}.
    Ordinal g = random_value(rng);
    Valuation s1 = random_valuation(rng, {"z"});
    Valuation s2;
    s2.set("y", random_value(rng));
    Ordinal lhs = rank_val(a, overlay(s1, scale(g, s2)));
    Ordinal rhs = natural_product(g, rank_val(a, overlay(s1, s2)));
    o.expect(lhs <= rhs, "scaling: " + to_string(a) + " g=" + g.str());
    ++scal;
    // (4) Fixed-point bound rk(eta^b y.C) <= (rk(C) + 1)^{(x) b}.
    Formula cbody = support::random_formula(rng, 6, 3, {"y"});
    std::uint64_t beta = support::uniform(rng, 0, 6);
    Kind k = support::uniform(rng, 0, 1) ? Kind::Mu : Kind::Nu;
    Formula fp = Formula::fix(k, Annotation(Ordinal(beta)), "y", abstract(cbody, "y"));
    Ordinal bound = iter_natural_product(succ(rank_val(cbody, Valuation::one())), Ordinal(beta)).value;
    o.expect(rank_val(fp, Valuation::one()) <= bound,
             "fixed-point bound: " + to_string(fp));
    ++fix;
  }
  o.summary = "monotonicity " + std::to_string(mono) + ", substitution " +
              std::to_string(subst) + ", scaling " + std::to_string(scal) +
              ", fixed-point bound " + std::to_string(fix) + " instances";
}

// --- 3 ------------------------------------------------------------------------

void rank_decrease(Outcome& o) {
  support::Rng rng(303);
  std::size_t sequents = 0, instances = 0;
  while (sequents < 10000) {
    std::vector<Formula> fs;
    std::size_t m = support::uniform(rng, 1, 3);
    for (std::size_t i = 0; i < m; ++i)
      fs.push_back(support::random_formula(rng, static_cast<int>(support::uniform(rng, 1, 8)), 3));
    Sequent g(fs);
    Ordinal r = rank_sequent(g);
    for (const auto& prems : rule_instances(g)) {
      ++instances;
      for (const auto& p : prems)
        o.expect(rank_sequent(p) < r, to_string(p) + " from " + to_string(g));
    }
    ++sequents;
  }
  o.summary = std::to_string(sequents) + " sequents, " + std::to_string(instances) +
              " rule instances";
}

// --- 4 ------------------------------------------------------------------------

void rho_growth(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t k = 0; k <= 8; ++k)
    for (std::uint64_t g = 1; g <= 5; ++g) {
      Valuation s = Valuation::one();
      s.set("x1", Ordinal(g));
      Ordinal r = rank_val(rho_formula(1, Ordinal(k)), s);
      o.expect(Ordinal(g * k) <= r, "R1 k=" + std::to_string(k) + " g=" + std::to_string(g));
      o.expect(r == Ordinal(support::naive_rank(rho_formula(1, Ordinal(k)), {{"x1", g}})),
               "R1 naive k=" + std::to_string(k));
      ++checked;
    }
  // Transfinite values of x1 as well.
  for (std::uint64_t k = 1; k <= 8; ++k) {
    Valuation s = Valuation::one();
    s.set("x1", Ordinal::omega());
    o.expect(mul(Ordinal::omega(), Ordinal(k)) <= rank_val(rho_formula(1, Ordinal(k)), s),
             "R1 at x1=w, k=" + std::to_string(k));
  }
  Ordinal cap = omega_pow(omega_pow(Ordinal::omega()));
  std::string bounds;
  for (unsigned n = 0; n <= 4; ++n) {
    Formula r = rho_formula(n, Ordinal::omega());
    Formula closed = substitute(r, "x" + std::to_string(n), Formula::one());
    Ordinal ub = rank_upper_bound(closed);
    o.expect(ub < cap, "R" + std::to_string(n) + " bound " + ub.str());
    bounds += (n ? ", " : "") + ub.str();
  }
  o.summary = std::to_string(checked) + " finite instances; bounds " + bounds;
}

// --- 5, 6 ---------------------------------------------------------------------

void search_vs_oracle(Outcome& o) {
  support::NaiveProver np;
  std::size_t provable = 0;
  for (const auto& g : universe()) {
    SearchResult r = decide(g);
    bool p = r.verdict == Verdict::Provable;
    o.expect(r.verdict != Verdict::ResourceExceeded, "inconclusive: " + to_string(g));
    o.expect(p == np.provable(g), "disagreement: " + to_string(g));
    provable += p;
  }
  o.summary = std::to_string(universe().size()) + " sequents (size <= 6, rank <= 5), " +
              std::to_string(provable) + " provable";
}

void focussing(Outcome& o) {
  std::size_t proofs = 0;
  for (const auto& g : universe()) {
    SearchResult r = decide(g);
    FocusSearchResult f = focused_decide(g);
    bool p = r.verdict == Verdict::Provable;
    o.expect(p == (f.verdict == Verdict::Provable), "equiprovability: " + to_string(g));
    if (!p) continue;
    ++proofs;
    FocusProof fp = focus(r.proof);
    o.expect(check_focus_proof(fp).valid, "focus invalid: " + to_string(g));
    o.expect(fp->erased() == g, "focus endsequent: " + to_string(g));
    o.expect(erase_focus(fp)->conclusion == g, "erase endsequent: " + to_string(g));
    o.expect(check_focus_proof(f.proof).valid, "focused search proof invalid: " + to_string(g));
  }
  o.summary = std::to_string(universe().size()) + " sequents agree; " + std::to_string(proofs) +
              " proofs focussed and checked";
}

// --- 7 ------------------------------------------------------------------------

void cut_elimination(Outcome& o) {
  support::Rng rng(707);
  auto corpus = support::cut_corpus(rng, 240);
  std::size_t reductions = 0, cuts = 0;
  for (const auto& cc : corpus) {
    CheckResult in = check_proof(cc.proof);
    o.expect(in.valid && has_cut(cc.proof), "input not a valid cut proof: " + cc.label);
    std::function<void(const Proof&)> count = [&](const Proof& p) {
      if (p->rule == Rule::Cut) ++cuts;
      for (const auto& q : p->premises) count(q);
      if (p->schematic) count(p->schematic->body);
    };
    count(cc.proof);
    ElimStats st;
    Proof cf = eliminate_cuts(cc.proof, &st);
    reductions += st.reductions;
    o.expect(check_proof(cf, {CheckMode::CutFree, {}}).valid, "output invalid: " + cc.label);
    o.expect(cf->conclusion == cc.proof->conclusion, "endsequent changed: " + cc.label);
    o.expect(st.rank_checks == st.reductions, "unchecked reduction: " + cc.label);
  }
  o.summary = std::to_string(corpus.size()) + " proofs, " + std::to_string(cuts) + " cuts, " +
              std::to_string(reductions) + " rank-checked reductions";
}

// --- 8 ------------------------------------------------------------------------

void closure_operator(Outcome& o) {
  std::vector<Sequent> seeds = support::small_universe(5, 5, 2);
  std::vector<Sequent> u = premise_closure(seeds);
  std::size_t rounds = 0;
  SequentSet fp = closure_fixpoint(u, &rounds);
  std::size_t provable = 0;
  for (const auto& g : u) {
    bool p = decide(g).verdict == Verdict::Provable;
    provable += p;
    o.expect(p == (fp.count(g) == 1), "closure vs decide: " + to_string(g));
  }
  o.expect(provable == fp.size(), "fixpoint size");
  o.summary = std::to_string(u.size()) + " premise-closed sequents, " + std::to_string(rounds) +
              " rounds, " + std::to_string(fp.size()) + " derivable";
}

// --- 9 ------------------------------------------------------------------------

void minsky(Outcome& o) {
  support::NaiveProver np;
  const std::uint64_t max_input = 3, max_k = 8;
  std::size_t cases = 0, provable = 0, machines = 0;
  std::size_t focused_nodes = 0, plain_nodes = 0, larger = 0;
  for (const auto& [name, m] : machine_suite()) {
    ++machines;
    std::uint64_t sink = max_input * m.counters + max_k + 2;
    std::vector<std::vector<Formula>> gammas{
        {}, {locked_zero()}, {locked_sink(m.counters, Ordinal(sink))}};
    std::vector<std::vector<std::uint64_t>> inputs;
    std::vector<std::uint64_t> v(m.counters, 0);
    std::function<void(std::size_t)> all = [&](std::size_t i) {
      if (i == v.size()) {
        inputs.push_back(v);
        return;
      }
      for (std::uint64_t x = 0; x <= max_input; ++x) {
        v[i] = x;
        all(i + 1);
      }
    };
    all(0);
    for (const auto& in : inputs)
      for (std::uint64_t k = 0; k <= max_k; ++k)
        for (const auto& g : gammas) {
          DiffReport r = comp_provability_matches_reachability({{m}, 0, in, k, g}, {}, true);
          // Independent expectation: simulation plus the naive prover on
          // Gamma, tup(m), t for each accept configuration.
          bool expect = false;
          for (const auto& [state, counts] : support::bfs(m, in, k)) {
            if (state != m.accept) continue;
            std::vector<Formula> fs = g;
            for (const auto& f : tup(counts)) fs.push_back(f);
            fs.push_back(Formula::atom("t"));
            if (np.provable(Sequent(fs))) expect = true;
          }
          std::ostringstream what;
          what << name << " input " << (in.empty() ? 0 : in[0]) << " k=" << k
               << " |Gamma|=" << g.size();
          o.expect(r.verdict != Verdict::ResourceExceeded, "inconclusive: " + what.str());
          o.expect(r.provable == expect, "disagreement: " + what.str());
          o.expect(r.expected == expect, "library oracle: " + what.str());
          if (r.stats.nodes > r.plain_nodes) ++larger;
          focused_nodes += r.stats.nodes;
          plain_nodes += r.plain_nodes;
          provable += r.provable;
          ++cases;
        }
  }
  o.expect(focused_nodes <= plain_nodes, "focused search visited more nodes in total");
  o.summary = std::to_string(machines) + " machines, " + std::to_string(cases) + " cases, " +
              std::to_string(provable) + " provable; nodes focused " +
              std::to_string(focused_nodes) + " vs plain " + std::to_string(plain_nodes) +
              " (focused larger in " + std::to_string(larger) + " cases)";
}

// --- 10 -----------------------------------------------------------------------

void demo_gallery(Outcome& o) {
  std::size_t proofs = 0;
  auto valid = [&](const Proof& p, const Sequent& expect, const std::string& what) {
    CheckResult r = check_proof(p);
    o.expect(r.valid, what + ": " + r.reason + " at " + r.path);
    o.expect(p->conclusion == expect, what + ": endsequent");
    ++proofs;
  };
  std::vector<Ordinal> betas;
  for (std::uint64_t b = 0; b <= 5; ++b) betas.push_back(Ordinal(b));
  betas.push_back(Ordinal::omega());
  for (const auto& b : betas)
    valid(additive_units_proof(b),
          Sequent({Formula::zero(), Formula::fix(Kind::Nu, Annotation(b), "x", Formula::bound(0))}),
          "additive units " + b.str());
  for (const auto& body : support::monotone_bodies())
    for (std::uint64_t b = 0; b <= 4; ++b)
      for (std::uint64_t g = 0; g <= b; ++g)
        for (Kind k : {Kind::Mu, Kind::Nu}) {
          Formula lo = support::fix_of(k, body, g), hi = support::fix_of(k, body, b);
          Sequent expect = k == Kind::Mu ? Sequent({negate(lo), hi}) : Sequent({negate(hi), lo});
          valid(monotonicity_proof(k, body, "x", Ordinal(g), Ordinal(b)), expect,
                "monotonicity " + to_string(hi) + " from " + std::to_string(g));
        }
  // Eta-expansion: every closed formula of size <= 5 over {p, q} with
  // annotations <= 2, and random ones of size 6 and 7.
  std::size_t eta = 0;
  for (int size = 1; size <= 5; ++size)
    for (const auto& a : support::formulas_of_size(size, 0, 2)) {
      Proof e = eta_expand_identity(a);
      o.expect(check_proof(e, {CheckMode::CutFree, {}}).valid, "eta " + to_string(a));
      o.expect(e->conclusion == Sequent({negate(a), a}), "eta endsequent " + to_string(a));
      ++eta;
    }
  support::Rng rng(1010);
  for (int i = 0; i < 5000; ++i) {
    Formula a = support::random_formula(rng, static_cast<int>(support::uniform(rng, 6, 7)), 3);
    Proof e = eta_expand_identity(a);
    o.expect(check_proof(e, {CheckMode::CutFree, {}}).valid, "eta " + to_string(a));
    o.expect(e->conclusion == Sequent({negate(a), a}), "eta endsequent " + to_string(a));
    ++eta;
  }
  o.summary = std::to_string(proofs) + " unit/monotonicity proofs, " + std::to_string(eta) +
              " eta-expansions";
}

}  // namespace

int main() {
  criterion(1, "ordinal algebra", 10, ordinal_algebra);
  criterion(2, "rank laws", 60, rank_laws);
  criterion(3, "rank decrease", 60, rank_decrease);
  criterion(4, "R_n growth and bounds", 10, rho_growth);
  criterion(5, "search vs naive oracle", 600, search_vs_oracle);
  criterion(6, "focussing", 600, focussing);
  criterion(7, "cut elimination", 300, cut_elimination);
  criterion(8, "closure operator", 300, closure_operator);
  criterion(9, "Minsky differential", 900, minsky);
  criterion(10, "demo gallery", 60, demo_gallery);
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
