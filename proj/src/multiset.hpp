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

#ifndef MUMALL_SRC_MULTISET_HPP
#define MUMALL_SRC_MULTISET_HPP

#include <functional>
#include <utility>
#include <vector>

#include "mumall/syntax.hpp"

namespace mumall {

// Calls f(left, right) for every split of s into two sub-multisets, each
// distinct split once; stops early when f returns true.
inline bool for_each_split(
    const Sequent& s,
    const std::function<bool(const Sequent&, const Sequent&)>& f) {
  std::vector<std::pair<Formula, std::size_t>> groups;
  for (const auto& x : s) {
    if (!groups.empty() && groups.back().first == x)
      ++groups.back().second;
    else
      groups.push_back({x, 1});
  }
  std::vector<std::size_t> take(groups.size(), 0);
  for (;;) {
    std::vector<Formula> l, r;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t k = 0; k < take[i]; ++k) l.push_back(groups[i].first);
      for (std::size_t k = take[i]; k < groups[i].second; ++k)
        r.push_back(groups[i].first);
    }
    if (f(Sequent(std::move(l)), Sequent(std::move(r)))) return true;
    std::size_t i = 0;
    while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
    if (i == groups.size()) return false;
    ++take[i];
  }
}

// True when a is a sub-multiset of b.
inline bool submultiset(const Sequent& a, const Sequent& b) {
  std::size_t j = 0;
  for (const auto& x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || !(b[j] == x)) return false;
    ++j;
  }
  return true;
}

}  // namespace mumall

#endif  // MUMALL_SRC_MULTISET_HPP
