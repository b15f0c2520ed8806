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

#ifndef MUMALL_KERNEL_HPP
#define MUMALL_KERNEL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mumall/ordinal.hpp"
#include "mumall/syntax.hpp"

namespace mumall {

enum class Rule {
  Id,
  One,
  Bot,
  Top,
  Tensor,
  Par,
  Plus,
  With,
  Cut,
  Mu,
  Nu,
  // Ordinal induction: proves C(e) from a template C(v) valid for all v <= e,
  // whose Ih leaves may use C(e') for e' < v.
  Ind,
  Ih,
};

const char* rule_name(Rule r);
bool rule_from_name(const std::string& s, Rule* out);

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

// strict: lhs < rhs, otherwise lhs <= rhs.
struct Constraint {
  Annotation lhs, rhs;
  bool strict = true;
};

// The single premise template of a nu^beta node standing for the family
// indexed by var < bound.
struct Schematic {
  std::string var;
  Annotation bound;
  std::vector<Constraint> constraints;
  Proof body;
};

struct ProofNode {
  Sequent conclusion;
  Rule rule = Rule::One;
  int principal = -1;  // index into conclusion, -1 when unknown or absent
  int side = 0;        // plus
  Annotation gamma;    // mu choice, ind/ih instance
  std::string var;     // ind/ih variable
  std::vector<std::vector<int>> split;  // tensor/cut: indices per premise
  Formula cut;
  std::vector<Proof> premises;
  std::shared_ptr<const Schematic> schematic;
};

// Builders.  Principal indices and context splits are computed from the
// premises' conclusions.
Proof make_id(const std::string& p);
Proof make_one();
Proof make_top(const Sequent& conclusion);
Proof make_bot(const Proof& premise);
Proof make_par(const Formula& a, const Formula& b, const Proof& premise);
Proof make_with(const Formula& a, const Formula& b, const Proof& p0,
                const Proof& p1);
Proof make_plus(const Formula& a, const Formula& b, int side,
                const Proof& premise);
Proof make_tensor(const Formula& a, const Formula& b, const Proof& p0,
                  const Proof& p1);
Proof make_cut(const Formula& a, const Proof& p0, const Proof& p1);
Proof make_mu(const Formula& fixpoint, const Annotation& gamma,
              const Proof& premise);
// Explicit family; for beta = 0 the context must be given.
Proof make_nu(const Formula& fixpoint, const std::vector<Proof>& premises,
              const Sequent& context = {});
Proof make_nu_schematic(const Formula& fixpoint, const std::string& var,
                        const Proof& body,
                        std::vector<Constraint> extra = {});
Proof make_ind(const std::string& var, const Annotation& value,
               const Proof& premise);
Proof make_ih(const std::string& var, const Annotation& value,
              const Sequent& conclusion);

// Rebuilds a node with a new conclusion and premises, keeping the rule and
// its parameters; principal and splits are recomputed.  principal_formula
// names the principal formula (ignored for id/1/cut).
Proof rebuild(const ProofNode& like, const Sequent& conclusion,
              const Formula& principal_formula, std::vector<Proof> premises);

Formula principal_formula(const ProofNode& n);
// For each premise, maps the conclusion's context occurrences (all indices
// except the principal) to indices in that premise's conclusion, -1 when
// the occurrence does not go to that premise.
std::vector<std::vector<int>> context_map(const ProofNode& n);

std::size_t proof_size(const Proof& p);
bool has_cut(const Proof& p);
bool has_schematic(const Proof& p);

// Substitutes an ordinal variable throughout a proof.
Proof subst_ordinal_var(const Proof& p, const std::string& var,
                        const Annotation& value);
// Expands schematic nodes with finite constant bounds and ind/ih nodes at
// finite constant values into explicit derivations.
Proof expand_finite(const Proof& p);
// The premise of a schematic nu node at gamma, expanded where finite.
Proof instantiate_schematic(const ProofNode& nu_node, const Annotation& gamma);

// Checking --------------------------------------------------------------------

enum class CheckMode { FullCut, CutBound, CutFree };

struct CheckOptions {
  CheckMode mode = CheckMode::FullCut;
  Ordinal delta;  // cut-rank bound in CutBound mode
};

struct CheckResult {
  bool valid = true;
  std::string path;    // e.g. "/0/1/schematic"
  std::string reason;  // reason code
  std::string detail;
  explicit operator bool() const { return valid; }
};

CheckResult check_proof(const Proof& p, const CheckOptions& opts = {});

// Entailment of lhs < rhs (or <=) from constraints by transitive closure,
// with constants compared directly.
bool entails(const std::vector<Constraint>& hyps, const Annotation& lhs,
             const Annotation& rhs, bool strict);

// Focussed proofs ---------------------------------------------------------------

enum class FRule {
  Id,
  Store,
  Decide,
  Release,
  Top,
  Bot,
  Par,
  With,
  Nu,
  One,
  Plus,
  Tensor,
  Mu,
};

const char* frule_name(FRule r);
bool frule_from_name(const std::string& s, FRule* out);

struct FocusNode;
using FocusProof = std::shared_ptr<const FocusNode>;

struct FocusNode {
  Sequent context;
  bool down = false;            // Gamma => A (down) vs Gamma => Theta (up)
  Formula focus;                // down form
  std::vector<Formula> zone;    // up form; rightmost is active
  FRule rule = FRule::One;
  int side = 0;
  Annotation gamma;
  std::vector<FocusProof> premises;

  Sequent erased() const;  // context plus focus / zone as one multiset
};

FocusProof make_up(const Sequent& ctx, std::vector<Formula> zone, FRule r,
                   std::vector<FocusProof> premises);
FocusProof make_down(const Sequent& ctx, const Formula& focus, FRule r,
                     std::vector<FocusProof> premises, int side = 0,
                     Annotation gamma = {});

enum class ReleaseCondition {
  NegativeOrLiteral,  // as printed
  LiteralOnly,        // stricter reading
};

struct FocusCheckOptions {
  ReleaseCondition release = ReleaseCondition::NegativeOrLiteral;
  // Permit decide on negative literals ~p (needed to reach the id axiom).
  bool decide_negative_literals = true;
};

CheckResult check_focus_proof(const FocusProof& p,
                              const FocusCheckOptions& opts = {});
Proof erase_focus(const FocusProof& p);
std::size_t focus_proof_size(const FocusProof& p);

// Example derivations ---------------------------------------------------------

// Cut-free proof of {~A, A} with atomic identities only.
Proof eta_expand_identity(const Formula& a);
// Proof of {~A(B), A(B')} from a proof of {~B, B'}; `hole` is free in ax.
Proof functoriality(const Formula& ax, const std::string& hole,
                    const Formula& b, const Formula& b2, const Proof& premise);
// mu^g x.A => mu^b x.A (eta = Mu) or nu^b x.A => nu^g x.A (eta = Nu), with
// `x` free in ax.
Proof monotonicity_proof(Kind eta, const Formula& ax, const std::string& x,
                         const Ordinal& g, const Ordinal& b);
// T => nu^beta x.x, i.e. {0, nu^beta x.x}.
Proof additive_units_proof(const Ordinal& beta);

}  // namespace mumall

#endif  // MUMALL_KERNEL_HPP
