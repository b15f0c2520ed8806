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

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "multiset.hpp"
#include "mumall/rank.hpp"
#include "mumall/search.hpp"

namespace mumall {

namespace {

struct BudgetExceeded {};

struct DownKey {
  Sequent ctx;
  Formula focus;
  bool operator==(const DownKey& o) const {
    return focus == o.focus && ctx == o.ctx;
  }
};

struct DownKeyHash {
  std::size_t operator()(const DownKey& k) const {
    return k.ctx.hash() * 31 + k.focus.hash();
  }
};

constexpr std::size_t kFootprintCap = 256;

// For formulas built from ~p, 1, 0, + and *, the contexts Gamma (multisets
// of atoms) for which Gamma => A is provable.
using Footprint = std::optional<std::vector<Sequent>>;

class FocusedSearch {
 public:
  FocusedSearch(const SearchLimits& limits, bool exact)
      : limits_(limits), exact_(exact) {}

  SearchStats stats;
  std::size_t incomplete = 0;
  std::string reason;

  FocusProof up(const Sequent& ctx, const std::vector<Formula>& zone,
                std::size_t depth) {
    if (zone.empty()) return decide(ctx, depth);
    if (is_negative(zone.back()) && !zone.back().is_literal()) tick(depth);
    const Formula a = zone.back();
    std::vector<Formula> rest(zone.begin(), zone.end() - 1);
    auto extend = [&](const Formula& x) {
      std::vector<Formula> z = rest;
      z.push_back(x);
      return z;
    };
    switch (a.kind()) {
      case Kind::Top:
        return make_up(ctx, zone, FRule::Top, {});
      case Kind::Bot: {
        FocusProof p = up(ctx, rest, depth + 1);
        return p ? make_up(ctx, zone, FRule::Bot, {p}) : nullptr;
      }
      case Kind::Par: {
        check_rank(a, a.left());
        check_rank(a, a.right());
        std::vector<Formula> z = extend(a.left());
        z.push_back(a.right());
        FocusProof p = up(ctx, z, depth + 1);
        return p ? make_up(ctx, zone, FRule::Par, {p}) : nullptr;
      }
      case Kind::With: {
        check_rank(a, a.left());
        check_rank(a, a.right());
        FocusProof p0 = up(ctx, extend(a.left()), depth + 1);
        if (!p0) return nullptr;
        FocusProof p1 = up(ctx, extend(a.right()), depth + 1);
        return p1 ? make_up(ctx, zone, FRule::With, {p0, p1}) : nullptr;
      }
      case Kind::Nu: {
        if (!a.annotation().finite()) {
          give_up("nu with an infinite annotation: " + to_string(a));
          return nullptr;
        }
        std::vector<FocusProof> prems;
        for (std::uint64_t k = 0; k < a.annotation().value.finite_value(); ++k) {
          Formula u = unfold(a, Annotation(Ordinal(k)));
          check_rank(a, u);
          FocusProof p = up(ctx, extend(u), depth + 1);
          if (!p) return nullptr;
          prems.push_back(p);
        }
        return make_up(ctx, zone, FRule::Nu, std::move(prems));
      }
      default: {
        FocusProof p = up(ctx.with(a), rest, depth + 1);
        return p ? make_up(ctx, zone, FRule::Store, {p}) : nullptr;
      }
    }
  }

 private:
  const SearchLimits& limits_;
  bool exact_;
  std::unordered_map<Sequent, FocusProof, SequentHash> decide_memo_;
  std::unordered_map<DownKey, FocusProof, DownKeyHash> down_memo_;
  std::unordered_map<Formula, Ordinal, FormulaHash> ranks_;
  std::unordered_map<Formula, Footprint, FormulaHash> footprints_;

  void tick(std::size_t depth) {
    if (++stats.nodes > limits_.max_nodes) throw BudgetExceeded{};
    if (depth > stats.max_depth) stats.max_depth = depth;
  }

  void give_up(const std::string& why) {
    ++incomplete;
    if (reason.empty()) reason = why;
  }

  const Ordinal& rank_of(const Formula& f) {
    auto it = ranks_.find(f);
    if (it == ranks_.end()) it = ranks_.emplace(f, rank(f)).first;
    return it->second;
  }

  void check_rank(const Formula& parent, const Formula& child) {
    if (!exact_ || !limits_.instrument) return;
    ++stats.rank_checks;
    if (!(rank_of(child) < rank_of(parent)))
      throw std::logic_error("focused search: rank did not decrease from " +
                             to_string(parent) + " to " + to_string(child));
  }

  const Footprint& footprint(const Formula& f) {
    auto it = footprints_.find(f);
    if (it != footprints_.end()) return it->second;
    Footprint fp;
    switch (f.kind()) {
      case Kind::NegAtom:
        fp = std::vector<Sequent>{Sequent({Formula::atom(f.name())})};
        break;
      case Kind::One:
        fp = std::vector<Sequent>{Sequent()};
        break;
      case Kind::Zero:
        fp = std::vector<Sequent>{};
        break;
      case Kind::Plus: {
        const Footprint& l = footprint(f.left());
        const Footprint& r = footprint(f.right());
        if (l && r) {
          SequentSet seen;
          std::vector<Sequent> out;
          for (const auto* side : {&*l, &*r})
            for (const auto& s : *side)
              if (seen.insert(s).second) out.push_back(s);
          if (out.size() <= kFootprintCap) fp = std::move(out);
        }
        break;
      }
      case Kind::Tensor: {
        const Footprint& l = footprint(f.left());
        const Footprint& r = footprint(f.right());
        if (l && r && l->size() * r->size() <= kFootprintCap * 4) {
          SequentSet seen;
          std::vector<Sequent> out;
          for (const auto& a : *l)
            for (const auto& b : *r) {
              Sequent s = a.plus(b);
              if (seen.insert(s).second) out.push_back(s);
            }
          if (out.size() <= kFootprintCap) fp = std::move(out);
        }
        break;
      }
      default:
        break;
    }
    return footprints_.emplace(f, std::move(fp)).first->second;
  }

  static bool contains(const std::vector<Sequent>& fp, const Sequent& s) {
    for (const auto& x : fp)
      if (x == s) return true;
    return false;
  }

  FocusProof decide(const Sequent& ctx, std::size_t depth) {
    auto it = decide_memo_.find(ctx);
    if (it != decide_memo_.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    tick(depth);
    std::size_t before = incomplete;
    FocusProof out;
    for (std::size_t i = 0; i < ctx.size() && !out; ++i) {
      const Formula& f = ctx[i];
      if (i > 0 && ctx[i - 1] == f) continue;
      bool candidate = f.kind() == Kind::NegAtom ||
                       (!f.is_literal() && is_positive(f) && f.kind() != Kind::Zero);
      if (!candidate) continue;
      FocusProof d = down(ctx.without(i), f, depth + 1);
      if (d) out = make_up(ctx, {}, FRule::Decide, {d});
    }
    if (out || incomplete == before) decide_memo_.emplace(ctx, out);
    return out;
  }

  FocusProof down(const Sequent& ctx, const Formula& f, std::size_t depth) {
    tick(depth);
    const Footprint& fp = footprint(f);
    if (fp && !contains(*fp, ctx)) return nullptr;
    DownKey key{ctx, f};
    auto it = down_memo_.find(key);
    if (it != down_memo_.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    std::size_t before = incomplete;
    FocusProof out = down_search(ctx, f, depth);
    if (out || incomplete == before) down_memo_.emplace(std::move(key), out);
    return out;
  }

  FocusProof down_search(const Sequent& ctx, const Formula& f,
                         std::size_t depth) {
    switch (f.kind()) {
      case Kind::NegAtom:
        if (ctx.size() == 1 && ctx[0].kind() == Kind::Atom &&
            ctx[0].name() == f.name())
          return make_down(ctx, f, FRule::Id, {});
        return nullptr;
      case Kind::One:
        return ctx.empty() ? make_down(ctx, f, FRule::One, {}) : nullptr;
      case Kind::Zero:
        return nullptr;
      case Kind::Plus:
        for (int side = 0; side < 2; ++side) {
          const Formula& b = side ? f.right() : f.left();
          check_rank(f, b);
          FocusProof p = down(ctx, b, depth + 1);
          if (p) return make_down(ctx, f, FRule::Plus, {p}, side);
        }
        return nullptr;
      case Kind::Mu: {
        const Annotation& b = f.annotation();
        auto attempt = [&](const Annotation& g) -> FocusProof {
          Formula u = unfold(f, g);
          check_rank(f, u);
          FocusProof p = down(ctx, u, depth + 1);
          return p ? make_down(ctx, f, FRule::Mu, {p}, 0, g) : nullptr;
        };
        if (b.finite()) {
          for (std::uint64_t k = b.value.finite_value(); k-- > 0;)
            if (FocusProof p = attempt(Annotation(Ordinal(k)))) return p;
          return nullptr;
        }
        for (const auto& o : limits_.gamma_probe)
          if (o < b.value)
            if (FocusProof p = attempt(Annotation(o))) return p;
        give_up("mu with an infinite annotation tried only at probes: " +
                to_string(f));
        return nullptr;
      }
      case Kind::Tensor:
        return tensor(ctx, f, depth);
      default: {
        // Atoms and negative formulas are released.
        FocusProof p = up(ctx, {f}, depth + 1);
        return p ? make_down(ctx, f, FRule::Release, {p}) : nullptr;
      }
    }
  }

  FocusProof tensor(const Sequent& ctx, const Formula& f, std::size_t depth) {
    const Formula& a = f.left();
    const Formula& b = f.right();
    check_rank(f, a);
    check_rank(f, b);
    FocusProof out;
    auto attempt = [&](const Sequent& l, const Sequent& r) {
      FocusProof p0 = down(l, a, depth + 1);
      if (!p0) return false;
      FocusProof p1 = down(r, b, depth + 1);
      if (!p1) return false;
      out = make_down(ctx, f, FRule::Tensor, {p0, p1});
      return true;
    };
    const Footprint& fa = footprint(a);
    const Footprint& fb = footprint(b);
    if (fa) {
      for (const auto& s : *fa) {
        Sequent rest;
        if (ctx.minus(s, &rest) && attempt(s, rest)) return out;
      }
      return nullptr;
    }
    if (fb) {
      for (const auto& s : *fb) {
        Sequent rest;
        if (ctx.minus(s, &rest) && attempt(rest, s)) return out;
      }
      return nullptr;
    }
    for_each_split(ctx, attempt);
    return out;
  }
};

}  // namespace

FocusSearchResult focused_decide(const Sequent& g, const SearchLimits& limits) {
  for (const auto& f : g)
    if (f.has_free_vars() || f.has_symbolic())
      throw DomainError("search: open or symbolic formula " + to_string(f));
  bool exact = decision_mode(g);
  FocusSearchResult out;
  if (limits.max_rank && exact && rank_sequent(g) > *limits.max_rank) {
    out.verdict = Verdict::ResourceExceeded;
    out.reason = "rank exceeds the limit";
    return out;
  }
  FocusedSearch s(limits, exact);
  try {
    FocusProof p = s.up({}, std::vector<Formula>(g.begin(), g.end()), 0);
    if (p) {
      out.verdict = Verdict::Provable;
      out.proof = p;
    } else if (s.incomplete > 0) {
      out.verdict = Verdict::ResourceExceeded;
      out.reason = s.reason;
    } else {
      out.verdict = Verdict::Unprovable;
    }
  } catch (const BudgetExceeded&) {
    out.verdict = Verdict::ResourceExceeded;
    out.reason = "node budget exhausted";
  }
  out.stats = s.stats;
  return out;
}

}  // namespace mumall
