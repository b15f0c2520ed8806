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

#include <stdexcept>
#include <unordered_map>

#include "multiset.hpp"
#include "mumall/rank.hpp"
#include "mumall/search.hpp"

namespace mumall {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Provable: return "provable";
    case Verdict::Unprovable: return "unprovable";
    case Verdict::ResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Provable: return 0;
    case Verdict::Unprovable: return 1;
    default: return 2;
  }
}

bool decision_mode(const Sequent& g) {
  for (const auto& f : g)
    if (!f.finite_annotations()) return false;
  return true;
}

namespace {

struct BudgetExceeded {};

class PlainSearch {
 public:
  PlainSearch(const SearchLimits& limits, bool exact)
      : limits_(limits), exact_(exact) {}

  Proof prove(const Sequent& g, std::size_t depth) {
    if (++stats.nodes > limits_.max_nodes) throw BudgetExceeded{};
    if (depth > stats.max_depth) stats.max_depth = depth;
    auto it = memo_.find(g);
    if (it != memo_.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    std::size_t before = incomplete_;
    Proof p = search(g, depth);
    if (p || incomplete_ == before) memo_.emplace(g, p);
    return p;
  }

  SearchStats stats;
  std::size_t incomplete_ = 0;
  std::string reason;

  Ordinal seq_rank(const Sequent& g) {
    Ordinal r;
    for (const auto& f : g) {
      auto it = ranks_.find(f);
      if (it == ranks_.end()) it = ranks_.emplace(f, rank(f)).first;
      r = natural_sum(r, it->second);
    }
    return r;
  }

 private:
  const SearchLimits& limits_;
  bool exact_;
  std::unordered_map<Sequent, Proof, SequentHash> memo_;
  std::unordered_map<Formula, Ordinal, FormulaHash> ranks_;

  Proof sub(const Sequent& parent, const Sequent& g, std::size_t depth) {
    if (exact_ && limits_.instrument) {
      ++stats.rank_checks;
      if (!(seq_rank(g) < seq_rank(parent)))
        throw std::logic_error("search: rank did not decrease from " +
                               to_string(parent) + " to " + to_string(g));
    }
    return prove(g, depth + 1);
  }

  void give_up(const std::string& why) {
    ++incomplete_;
    if (reason.empty()) reason = why;
  }

  Proof search(const Sequent& g, std::size_t depth) {
    for (const auto& f : g)
      if (f.kind() == Kind::Top) return make_top(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      Sequent ctx = g.without(i);
      switch (f.kind()) {
        case Kind::Bot: {
          Proof p = sub(g, ctx, depth);
          return p ? make_bot(p) : nullptr;
        }
        case Kind::Par: {
          Proof p = sub(g, ctx.with({f.left(), f.right()}), depth);
          return p ? make_par(f.left(), f.right(), p) : nullptr;
        }
        case Kind::With: {
          Proof p0 = sub(g, ctx.with(f.left()), depth);
          if (!p0) return nullptr;
          Proof p1 = sub(g, ctx.with(f.right()), depth);
          return p1 ? make_with(f.left(), f.right(), p0, p1) : nullptr;
        }
        case Kind::Nu: {
          if (!f.annotation().finite()) {
            give_up("nu with an infinite annotation: " + to_string(f));
            return nullptr;
          }
          std::vector<Proof> prems;
          for (std::uint64_t k = 0; k < f.annotation().value.finite_value(); ++k) {
            Proof p = sub(g, ctx.with(unfold(f, Annotation(Ordinal(k)))), depth);
            if (!p) return nullptr;
            prems.push_back(p);
          }
          return make_nu(f, prems, ctx);
        }
        default:
          break;
      }
    }
    if (g.size() == 2 && g[0].kind() == Kind::Atom &&
        g[1].kind() == Kind::NegAtom && g[0].name() == g[1].name())
      return make_id(g[0].name());
    if (g.size() == 1 && g[0].kind() == Kind::One) return make_one();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      if (i > 0 && g[i - 1] == f) continue;
      Sequent ctx = g.without(i);
      switch (f.kind()) {
        case Kind::Plus:
          for (int side = 0; side < 2; ++side) {
            Proof p = sub(g, ctx.with(side ? f.right() : f.left()), depth);
            if (p) return make_plus(f.left(), f.right(), side, p);
          }
          break;
        case Kind::Mu: {
          const Annotation& b = f.annotation();
          if (b.finite()) {
            for (std::uint64_t k = b.value.finite_value(); k-- > 0;) {
              Annotation gk{Ordinal(k)};
              Proof p = sub(g, ctx.with(unfold(f, gk)), depth);
              if (p) return make_mu(f, gk, p);
            }
          } else if (!b.symbolic()) {
            for (const auto& o : limits_.gamma_probe) {
              if (!(o < b.value)) continue;
              Proof p = sub(g, ctx.with(unfold(f, Annotation(o))), depth);
              if (p) return make_mu(f, Annotation(o), p);
            }
            give_up("mu with an infinite annotation tried only at probes: " +
                    to_string(f));
          } else {
            throw DomainError("search: symbolic annotation in " + to_string(f));
          }
          break;
        }
        case Kind::Tensor: {
          Proof found;
          for_each_split(ctx, [&](const Sequent& l, const Sequent& r) {
            Proof p0 = sub(g, l.with(f.left()), depth);
            if (!p0) return false;
            Proof p1 = sub(g, r.with(f.right()), depth);
            if (!p1) return false;
            found = make_tensor(f.left(), f.right(), p0, p1);
            return true;
          });
          if (found) return found;
          break;
        }
        default:
          break;
      }
    }
    return nullptr;
  }
};

void check_input(const Sequent& g) {
  for (const auto& f : g) {
    if (f.has_free_vars())
      throw DomainError("search: free variable in " + to_string(f));
    if (f.has_symbolic())
      throw DomainError("search: symbolic annotation in " + to_string(f));
  }
}

}  // namespace

SearchResult decide(const Sequent& g, const SearchLimits& limits) {
  check_input(g);
  bool exact = decision_mode(g);
  SearchResult out;
  PlainSearch s(limits, exact);
  if (limits.max_rank && exact && s.seq_rank(g) > *limits.max_rank) {
    out.verdict = Verdict::ResourceExceeded;
    out.reason = "rank exceeds the limit";
    return out;
  }
  try {
    Proof p = s.prove(g, 0);
    if (p) {
      out.verdict = Verdict::Provable;
      out.proof = p;
    } else if (s.incomplete_ > 0) {
      out.verdict = Verdict::ResourceExceeded;
      out.reason = s.reason;
    } else {
      out.verdict = Verdict::Unprovable;
    }
  } catch (const BudgetExceeded&) {
    out.verdict = Verdict::ResourceExceeded;
    out.reason = "node budget exhausted";
  }
  if (exact && limits.instrument) {
    Ordinal r = s.seq_rank(g);
    if (r.is_finite() && Ordinal(s.stats.max_depth) > r)
      throw std::logic_error("search: depth exceeded the sequent rank");
  }
  out.stats = s.stats;
  return out;
}

}  // namespace mumall
