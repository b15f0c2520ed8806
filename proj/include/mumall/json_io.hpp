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

#ifndef MUMALL_JSON_IO_HPP
#define MUMALL_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mumall/kernel.hpp"

namespace mumall {

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json proof_to_json(const Proof& p);
// Index parameters refer to the order of the "sequent" array.  Annotations
// are not checked against alpha; the checker sees the proof as written.
Proof proof_from_json(const nlohmann::json& j, const ParseOptions& opts = {});

nlohmann::json focus_proof_to_json(const FocusProof& p);
FocusProof focus_proof_from_json(const nlohmann::json& j,
                                 const ParseOptions& opts = {});

// True when the node carries "zone" or "focus".
bool is_focus_json(const nlohmann::json& j);

}  // namespace mumall

#endif  // MUMALL_JSON_IO_HPP
