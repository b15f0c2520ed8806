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

#ifndef MUMALL_RANK_HPP
#define MUMALL_RANK_HPP

#include <map>
#include <optional>
#include <string>

#include "mumall/ordinal.hpp"
#include "mumall/syntax.hpp"

namespace mumall {

// Raised when an exact rank is requested for a formula with an infinite or
// symbolic fixed-point annotation.
class ExactModeUnsupported : public DomainError {
 public:
  using DomainError::DomainError;
};

// Partial map from variables to ordinals, optionally with a default value
// for variables outside the explicit domain.
class Valuation {
 public:
  Valuation() = default;
  static Valuation constant(Ordinal value);
  static Valuation one() { return constant(Ordinal(1)); }

  Valuation& set(const std::string& x, Ordinal v);
  std::optional<Ordinal> lookup(const std::string& x) const;
  Ordinal at(const std::string& x) const;  // DomainError if unbound

  const std::map<std::string, Ordinal>& entries() const { return map_; }
  const std::optional<Ordinal>& fallback() const { return default_; }

 private:
  std::map<std::string, Ordinal> map_;
  std::optional<Ordinal> default_;
};

// s2 shadows s1 on its explicit domain; explicit entries of either take
// precedence over defaults, and s2's default over s1's.
Valuation overlay(const Valuation& s1, const Valuation& s2);
Valuation scale(const Ordinal& g, const Valuation& s);

Ordinal rank_val(const Formula& a, const Valuation& s);
Ordinal rank(const Formula& a);
Ordinal rank_sequent(const Sequent& g);

IterProduct rank_upper_bound_flagged(const Formula& a);
Ordinal rank_upper_bound(const Formula& a);

// R_0 = x0, R_{n+1} = mu^a x_n.(x_{n+1} | R_n).
Formula rho_formula(unsigned n, const Ordinal& a);

}  // namespace mumall

#endif  // MUMALL_RANK_HPP
