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

#ifndef MUMALL_TRANSFORM_HPP
#define MUMALL_TRANSFORM_HPP

#include <cstddef>

#include "mumall/kernel.hpp"

namespace mumall {

// Raised when a transformation meets a schematic or induction region it
// cannot rewrite.
class UnsupportedProof : public DomainError {
 public:
  using DomainError::DomainError;
};

// Inverts the negative formula at `index` of p's conclusion: bot is deleted,
// A | B becomes A, B, A0 & A1 becomes A_side, nu^b x.A becomes A(nu^gamma x.A).
Proof invert(const Proof& p, std::size_t index, int side = 0,
             const Annotation& gamma = {});

// From proofs of Gamma, A and Delta, ~A, a proof of Gamma, Delta whose new
// cuts are on immediate subformulas or unfoldings of A.
Proof reduce_cut(const Proof& p0, const Proof& p1, const Formula& a);

struct ElimStats {
  std::size_t reductions = 0;
  std::size_t rank_checks = 0;  // reductions whose rank decrease was verified
};

// Cut-free proof of the same sequent.  Schematic regions must be cut-free.
Proof eliminate_cuts(const Proof& p, ElimStats* stats = nullptr);

// Focussed proof of . => Gamma from a cut-free proof of Gamma with finite
// annotations.
FocusProof focus(const Proof& p);

}  // namespace mumall

#endif  // MUMALL_TRANSFORM_HPP
