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

#ifndef MUMALL_SEARCH_HPP
#define MUMALL_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mumall/kernel.hpp"

namespace mumall {

struct SearchLimits {
  std::optional<Ordinal> max_rank;  // reject conclusions of larger rank
  std::size_t max_nodes = 2'000'000;
  // Choices tried, in increasing order, for mu with an infinite annotation.
  std::vector<Ordinal> gamma_probe;
  // Check that ranks decrease along every branch.
  bool instrument = true;
};

enum class Verdict { Provable, Unprovable, ResourceExceeded };

const char* verdict_name(Verdict v);
int exit_code(Verdict v);  // 0, 1, 2

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
  std::size_t max_depth = 0;
  std::size_t rank_checks = 0;
};

struct SearchResult {
  Verdict verdict = Verdict::Unprovable;
  Proof proof;
  SearchStats stats;
  std::string reason;  // why the search was inconclusive
};

struct FocusSearchResult {
  Verdict verdict = Verdict::Unprovable;
  FocusProof proof;
  SearchStats stats;
  std::string reason;
};

// True when every annotation is a finite constant.
bool decision_mode(const Sequent& g);

SearchResult decide(const Sequent& g, const SearchLimits& limits = {});
FocusSearchResult focused_decide(const Sequent& g,
                                 const SearchLimits& limits = {});

using SequentSet = std::unordered_set<Sequent, SequentHash>;

// Sequents of the universe concluding some cut-free rule instance whose
// premises all lie in s.  Annotations must be finite.
SequentSet one_step_closure(const SequentSet& s,
                            const std::vector<Sequent>& universe);
// The least fixed point of one_step_closure over the universe, with the
// number of rounds taken.
SequentSet closure_fixpoint(const std::vector<Sequent>& universe,
                            std::size_t* rounds = nullptr);
// All sequents reachable from the seeds by taking premises of cut-free rule
// instances, seeds included, in breadth-first order.
std::vector<Sequent> premise_closure(const std::vector<Sequent>& seeds,
                                     std::size_t max_size = 1'000'000);

// Every cut-free rule instance concluding g, as premise lists.  Nu with an
// infinite annotation and mu choices above the finite range are skipped.
std::vector<std::vector<Sequent>> rule_instances(const Sequent& g);

}  // namespace mumall

#endif  // MUMALL_SEARCH_HPP
