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

#include <gtest/gtest.h>

#include "mumall/rank.hpp"
#include "mumall/search.hpp"
#include "support.hpp"

using namespace mumall;

namespace {

Sequent S(const char* s) { return parse_sequent(s); }

Verdict plain(const char* s) { return decide(S(s)).verdict; }
Verdict focused(const char* s) { return focused_decide(S(s)).verdict; }

}  // namespace

TEST(Decide, Examples) {
  EXPECT_EQ(plain("1"), Verdict::Provable);
  EXPECT_EQ(plain("0"), Verdict::Unprovable);
  EXPECT_EQ(plain("p"), Verdict::Unprovable);
  EXPECT_EQ(plain("T => nu^3 x. x"), Verdict::Provable);
  EXPECT_EQ(plain("mu^2 x. (x + 1) => mu^3 x. (x + 1)"), Verdict::Provable);
  // mu^b x.(1 + p * x) holds lists of fewer than b copies of p.
  EXPECT_EQ(plain("mu^2 x. (1 + p * x) => mu^3 x. (1 + p * x)"), Verdict::Provable);
  EXPECT_EQ(plain("mu^3 x. (1 + p * x) => mu^2 x. (1 + p * x)"), Verdict::Unprovable);
  EXPECT_EQ(plain("p * q => q * p"), Verdict::Provable);
  EXPECT_EQ(plain("p + q => p"), Verdict::Unprovable);
}

TEST(Decide, ProofsCheck) {
  for (const char* s : {"T => nu^3 x. x", "mu^2 x. (x + 1) => mu^3 x. (x + 1)",
                        "p * q => q * p", "p & q => p + q"}) {
    SearchResult r = decide(S(s));
    ASSERT_EQ(r.verdict, Verdict::Provable) << s;
    EXPECT_EQ(r.proof->conclusion, S(s));
    EXPECT_TRUE(check_proof(r.proof, {CheckMode::CutFree, {}}).valid) << s;
    EXPECT_GT(r.stats.nodes, 0u);
  }
}

TEST(Decide, Limits) {
  SearchLimits l;
  l.max_rank = Ordinal(2);
  SearchResult r = decide(S("p * q => q * p"), l);
  EXPECT_EQ(r.verdict, Verdict::ResourceExceeded);
  EXPECT_FALSE(r.reason.empty());
  SearchLimits tiny;
  tiny.max_nodes = 2;
  EXPECT_EQ(decide(S("mu^3 x. (1 + p * x) => mu^2 x. (1 + p * x)"), tiny).verdict,
            Verdict::ResourceExceeded);
  EXPECT_EQ(exit_code(Verdict::Provable), 0);
  EXPECT_EQ(exit_code(Verdict::Unprovable), 1);
  EXPECT_EQ(exit_code(Verdict::ResourceExceeded), 2);
}

TEST(Decide, InfiniteAnnotations) {
  EXPECT_FALSE(decision_mode(S("mu^w x. (x + 1)")));
  EXPECT_TRUE(decision_mode(S("mu^3 x. (x + 1)")));
  // With probes, a mu^w instance is found; without them search is
  // inconclusive rather than wrong.
  SearchLimits l;
  l.gamma_probe = {Ordinal(0), Ordinal(1), Ordinal(2)};
  SearchResult r = decide(S("mu^w x. (x + 1)"), l);
  EXPECT_EQ(r.verdict, Verdict::Provable);
  EXPECT_TRUE(check_proof(r.proof).valid);
  SearchResult n = decide(S("mu^w x. (p * x)"), l);
  EXPECT_EQ(n.verdict, Verdict::ResourceExceeded);
}

TEST(Decide, AgreesWithNaiveProver) {
  support::NaiveProver np;
  std::size_t provable = 0;
  auto u = support::small_universe(5, 5, 2);
  ASSERT_EQ(u.size(), 250142u);
  for (const auto& g : u) {
    SearchResult r = decide(g);
    ASSERT_NE(r.verdict, Verdict::ResourceExceeded) << to_string(g);
    bool p = r.verdict == Verdict::Provable;
    ASSERT_EQ(p, np.provable(g)) << to_string(g);
    provable += p;
  }
  EXPECT_EQ(provable, 101475u);
}

TEST(FocusedDecide, Examples) {
  FocusSearchResult f = focused_decide(S("p * 1, ~p"));
  EXPECT_EQ(f.verdict, Verdict::Provable);
  EXPECT_TRUE(check_focus_proof(f.proof).valid);
  EXPECT_EQ(f.proof->erased(), S("p * 1, ~p"));
  EXPECT_EQ(plain("p * 1, ~p"), Verdict::Provable);
  EXPECT_EQ(focused("p | q"), Verdict::Unprovable);
  EXPECT_EQ(focused("T => nu^3 x. x"), Verdict::Provable);
}

TEST(FocusedDecide, AgreesWithDecide) {
  for (const auto& g : support::small_universe(5, 5, 2)) {
    bool a = decide(g).verdict == Verdict::Provable;
    FocusSearchResult f = focused_decide(g);
    ASSERT_EQ(a, f.verdict == Verdict::Provable) << to_string(g);
    if (a) ASSERT_EQ(f.proof->erased(), g);
  }
}

TEST(Closure, Examples) {
  std::vector<Sequent> u{S("1"), S("0"), S("T, p"), S("p, ~p"), S("nu^0 x. x"),
                         S("1, bot"), S("p")};
  SequentSet s = one_step_closure({}, u);
  SequentSet expect{S("1"), S("T, p"), S("p, ~p"), S("nu^0 x. x")};
  EXPECT_EQ(s, expect);
  std::size_t rounds = 0;
  SequentSet fp = closure_fixpoint(u, &rounds);
  EXPECT_TRUE(fp.count(S("1, bot")));
  EXPECT_FALSE(fp.count(S("p")));
  EXPECT_EQ(rounds, 3u);
  EXPECT_THROW(one_step_closure({}, {S("mu^w x. x")}), DomainError);
}

TEST(Closure, FixpointIsProvability) {
  std::vector<Sequent> seeds = support::small_universe(4, 5, 2);
  std::vector<Sequent> u = premise_closure(seeds);
  EXPECT_GE(u.size(), seeds.size());
  SequentSet fp = closure_fixpoint(u);
  for (const auto& g : u)
    ASSERT_EQ(fp.count(g) == 1, decide(g).verdict == Verdict::Provable) << to_string(g);
}

TEST(Closure, PremisesHaveSmallerRank) {
  for (const auto& g : support::small_universe(5, 5, 2))
    for (const auto& prems : rule_instances(g))
      for (const auto& p : prems) ASSERT_LT(rank_sequent(p), rank_sequent(g));
}
