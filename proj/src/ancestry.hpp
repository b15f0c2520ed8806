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

#ifndef MUMALL_SRC_ANCESTRY_HPP
#define MUMALL_SRC_ANCESTRY_HPP

#include <functional>
#include <vector>

#include "mumall/kernel.hpp"

namespace mumall {

// Called at an origin of the traced occurrence: a node where it is
// principal, or an id/1 leaf.  Must prove the node's conclusion with the
// occurrence replaced by the cedent.
using Repair = std::function<Proof(const ProofNode&, std::size_t)>;

// Replaces every direct ancestor of occurrence `occ` of p's conclusion by
// `cedent`; top leaves absorb it.
Proof replace_ancestors(const Proof& p, std::size_t occ,
                        const std::vector<Formula>& cedent,
                        const Repair& repair);

}  // namespace mumall

#endif  // MUMALL_SRC_ANCESTRY_HPP
