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

#include <functional>

#include "mumall/ordinal.hpp"
#include "support.hpp"

using namespace mumall;
using support::Naive;

namespace {

Ordinal w() { return Ordinal::omega(); }
Ordinal O(const char* s) { return parse_ordinal(s); }

// All canonical ordinals with nesting depth <= depth, coefficients <= 3, and at
// most `budget` CNF terms counted across every nesting level.
void enumerate(int depth, int budget, std::vector<std::pair<Ordinal, int>>& out) {
  out.push_back({Ordinal(), 0});
  if (depth == 0) return;
  std::vector<std::pair<Ordinal, int>> exps;
  enumerate(depth - 1, budget - 1, exps);
  std::sort(exps.begin(), exps.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
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
}

}  // namespace

TEST(Ordinal, CompareExamples) {
  EXPECT_EQ(compare(Ordinal(0), Ordinal(0)), std::strong_ordering::equal);
  EXPECT_EQ(compare(Ordinal(2), w()), std::strong_ordering::less);
  EXPECT_EQ(compare(O("w*2+1"), O("w^2")), std::strong_ordering::less);
}

TEST(Ordinal, ClassicalArithmetic) {
  EXPECT_EQ(add(Ordinal(1), w()), w());
  EXPECT_EQ(add(w(), Ordinal(1)), O("w+1"));
  EXPECT_EQ(mul(w(), Ordinal(2)), O("w*2"));
  EXPECT_EQ(mul(Ordinal(2), w()), w());
  EXPECT_EQ(omega_pow(O("w+1")), O("w^(w+1)"));
  EXPECT_EQ(omega_pow(O("w+1")).terms().size(), 1u);
}

TEST(Ordinal, NaturalSumExamples) {
  Ordinal a = O("w^2*3+w+4");
  EXPECT_EQ(natural_sum(a, Ordinal()), a);
  EXPECT_EQ(natural_sum(O("w+1"), w()), O("w*2+1"));
  EXPECT_EQ(natural_sum(O("w^2"), O("w*3")), O("w^2+w*3"));
}

TEST(Ordinal, NaturalProductExamples) {
  Ordinal a = O("w^2*3+w+4");
  EXPECT_EQ(natural_product(a, Ordinal(1)), a);
  EXPECT_EQ(natural_product(w(), Ordinal(2)), O("w*2"));
  EXPECT_EQ(natural_product(O("w+1"), O("w+1")), O("w^2+w*2+1"));
}

TEST(Ordinal, IterNaturalProduct) {
  EXPECT_EQ(iter_natural_product(O("w^3+1"), Ordinal()).value, Ordinal(1));
  EXPECT_EQ(iter_natural_product(Ordinal(5), Ordinal(3)).value, Ordinal(125));
  IterProduct p = iter_natural_product(O("w^w"), w());
  EXPECT_EQ(p.value, O("w^(w^2)"));
  EXPECT_FALSE(p.upper_bound);
  // Finite base, limit exponent: sup of finite powers.
  EXPECT_EQ(iter_natural_product(Ordinal(2), w()).value, w());
  EXPECT_THROW(iter_natural_product(Ordinal(0), w()), DomainError);
}

TEST(Ordinal, IterNaturalProductFiniteMatchesFold) {
  support::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = support::random_ordinal(rng, 2, 3, 2);
    if (a.is_zero()) continue;
    std::uint64_t n = support::uniform(rng, 0, 4);
    Naive acc = support::nnat(1);
    for (std::uint64_t k = 0; k < n; ++k) acc = support::nprod(acc, support::to_naive(a));
    EXPECT_EQ(iter_natural_product(a, Ordinal(n)).value, support::from_naive(acc));
  }
}

TEST(Ordinal, Degrees) {
  EXPECT_EQ(degree(Ordinal(5)), Ordinal(0));
  EXPECT_EQ(degree(O("w^2*3+w")), Ordinal(2));
  EXPECT_EQ(lowest_degree(O("w^2*3+w")), Ordinal(1));
  EXPECT_EQ(lowest_degree(O("w^w")), w());
  EXPECT_THROW(degree(Ordinal()), DomainError);
  EXPECT_THROW(lowest_degree(Ordinal()), DomainError);
}

TEST(Ordinal, AlphaOmegaPow) {
  EXPECT_EQ(alpha_omega_pow(w()), O("w^w"));
  EXPECT_EQ(alpha_omega_pow(O("w*2")), O("w^w"));
  // deg = 2 and 2*w = w, so (w^2)^w = w^w.
  EXPECT_EQ(alpha_omega_pow(O("w^2")), O("w^w"));
  EXPECT_EQ(alpha_omega_pow(O("w^w")), O("w^(w^2)"));
  EXPECT_THROW(alpha_omega_pow(Ordinal(7)), DomainError);
}

TEST(Ordinal, ParsePrintRoundTrip) {
  support::Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = support::random_ordinal(rng, 3);
    EXPECT_EQ(parse_ordinal(a.str()), a) << a.str();
  }
  EXPECT_EQ(O("w^2*3+w+1").str(), "w^2*3+w+1");
  EXPECT_THROW(O("1+w"), DomainError);
  EXPECT_THROW(O("w+w^2"), DomainError);
  EXPECT_THROW(O("w^"), DomainError);
}

TEST(Ordinal, AgreesWithNaiveOracle) {
  support::Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    Ordinal a = support::random_ordinal(rng, 3);
    Ordinal b = support::random_ordinal(rng, 3);
    Naive na = support::to_naive(a), nb = support::to_naive(b);
    EXPECT_EQ(support::from_naive(na), a);
    int c = support::ncmp(na, nb);
    EXPECT_EQ(compare(a, b) < 0, c < 0);
    EXPECT_EQ(compare(a, b) == 0, c == 0);
    EXPECT_EQ(natural_sum(a, b), support::from_naive(support::nsum(na, nb)));
    EXPECT_EQ(natural_product(a, b), support::from_naive(support::nprod(na, nb)));
    EXPECT_EQ(add(a, b), support::from_naive(support::nadd(na, nb)));
    EXPECT_EQ(mul(a, b), support::from_naive(support::nmul(na, nb)));
  }
}

TEST(Ordinal, FiniteValuesMatchIntegers) {
  for (std::uint64_t a = 0; a < 20; ++a)
    for (std::uint64_t b = 0; b < 20; ++b) {
      EXPECT_EQ(natural_sum(Ordinal(a), Ordinal(b)), Ordinal(a + b));
      EXPECT_EQ(natural_product(Ordinal(a), Ordinal(b)), Ordinal(a * b));
      EXPECT_EQ(add(Ordinal(a), Ordinal(b)), Ordinal(a + b));
      EXPECT_EQ(mul(Ordinal(a), Ordinal(b)), Ordinal(a * b));
      EXPECT_EQ(Ordinal(a) < Ordinal(b), a < b);
    }
}

TEST(Ordinal, ExhaustiveCompare) {
  std::vector<std::pair<Ordinal, int>> all;
  enumerate(3, 4, all);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return support::ncmp(support::to_naive(a.first), support::to_naive(b.first)) < 0;
  });
  ASSERT_GT(all.size(), 100u);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      int c = support::ncmp(support::to_naive(all[i].first),
                            support::to_naive(all[j].first));
      auto r = compare(all[i].first, all[j].first);
      ASSERT_EQ(r < 0, c < 0);
      ASSERT_EQ(r == 0, c == 0);
    }
}

TEST(Ordinal, SuccessorAndLimit) {
  EXPECT_TRUE(O("w+1").is_successor());
  EXPECT_TRUE(w().is_limit());
  EXPECT_FALSE(Ordinal().is_limit());
  EXPECT_EQ(pred(O("w+1")), w());
  EXPECT_THROW(pred(w()), DomainError);
  EXPECT_EQ(succ(O("w*2")), O("w*2+1"));
}

TEST(Ordinal, DepthCap) {
  std::size_t old = ordinal_depth_limit();
  set_ordinal_depth_limit(3);
  Ordinal a = O("w^w");
  EXPECT_THROW(omega_pow(omega_pow(a)), ResourceError);
  set_ordinal_depth_limit(old);
}
