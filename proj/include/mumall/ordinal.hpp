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

#ifndef MUMALL_ORDINAL_HPP
#define MUMALL_ORDINAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mumall {

// Raised on operations outside their domain (degree of 0, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a value would exceed a configured representation limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OrdinalTerm;

// An ordinal below epsilon_0 in Cantor normal form.  Values are immutable and
// cheap to copy (shared representation).
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: naturals convert implicitly

  static Ordinal omega();
  // Builds from a list of terms; throws DomainError unless canonical.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);
  // Unchecked variant of from_terms; terms must already be canonical.
  static Ordinal canonical(std::vector<OrdinalTerm> terms);

  bool is_zero() const { return rep_ == nullptr; }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  std::uint64_t finite_value() const;  // DomainError if infinite

  const std::vector<OrdinalTerm>& terms() const;
  std::size_t depth() const;
  std::size_t hash() const;

  std::string str() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  struct Rep;
  explicit Ordinal(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& b);
Ordinal succ(const Ordinal& a);
// a - 1 for successor a; DomainError otherwise.
Ordinal pred(const Ordinal& a);

Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
Ordinal natural_product(const Ordinal& a, const Ordinal& b);

struct IterProduct {
  Ordinal value;
  bool upper_bound = false;  // value only bounds a^{(x)b} from above
};
// a^{(x)b}.
IterProduct iter_natural_product(const Ordinal& a, const Ordinal& b);

Ordinal degree(const Ordinal& a);
Ordinal lowest_degree(const Ordinal& a);
// a^omega for a >= omega.
Ordinal alpha_omega_pow(const Ordinal& a);

Ordinal parse_ordinal(std::string_view text);
// Parses an ordinal starting at pos and advances pos past it.  With
// single_term only one CNF term is read, so a following '+' is left alone.
Ordinal parse_ordinal_at(std::string_view text, std::size_t& pos,
                         bool single_term);

// Largest nesting depth of omega-towers a value may have.
std::size_t ordinal_depth_limit();
void set_ordinal_depth_limit(std::size_t limit);

struct OrdinalHash {
  std::size_t operator()(const Ordinal& o) const { return o.hash(); }
};

}  // namespace mumall

#endif  // MUMALL_ORDINAL_HPP
