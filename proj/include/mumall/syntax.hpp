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

#ifndef MUMALL_SYNTAX_HPP
#define MUMALL_SYNTAX_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mumall/ordinal.hpp"

namespace mumall {

enum class Kind : std::uint8_t {
  Var,      // free variable, by name
  Bound,    // bound variable, de Bruijn index
  Atom,     // p
  NegAtom,  // ~p
  One,
  Bot,
  Zero,
  Top,
  Tensor,
  Par,
  Plus,
  With,
  Mu,
  Nu,
};

// A fixed-point annotation: either a constant ordinal or an ordinal variable
// (used inside schematic proof templates).
struct Annotation {
  Ordinal value;
  std::string var;

  Annotation() = default;
  Annotation(Ordinal v) : value(std::move(v)) {}  // NOLINT
  static Annotation variable(std::string name);

  bool symbolic() const { return !var.empty(); }
  bool finite() const { return var.empty() && value.is_finite(); }
  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Annotation& a, const Annotation& b) {
    return a.var == b.var && (a.symbolic() || a.value == b.value);
  }
};
std::strong_ordering compare(const Annotation& a, const Annotation& b);

// Immutable formula handle.  Binders are nameless (de Bruijn); binder names
// are kept only as printing hints and are ignored by equality.
class Formula {
 public:
  struct Node;

  Formula() = default;

  static Formula var(std::string name);
  static Formula bound(std::uint32_t index);
  static Formula atom(std::string name);
  static Formula neg_atom(std::string name);
  static Formula one();
  static Formula bot();
  static Formula zero();
  static Formula top();
  static Formula binary(Kind k, Formula a, Formula b);
  static Formula tensor(Formula a, Formula b) { return binary(Kind::Tensor, a, b); }
  static Formula par(Formula a, Formula b) { return binary(Kind::Par, a, b); }
  static Formula plus(Formula a, Formula b) { return binary(Kind::Plus, a, b); }
  static Formula with(Formula a, Formula b) { return binary(Kind::With, a, b); }
  // Fixed point over a nameless body (index 0 refers to the binder).
  static Formula fix(Kind k, Annotation ann, std::string hint, Formula body);
  // Fixed point binding the free variable `x` of `body`.
  static Formula mu(Annotation ann, const std::string& x, const Formula& body);
  static Formula nu(Annotation ann, const std::string& x, const Formula& body);

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  const std::string& name() const;  // atom / free var / binder hint
  std::uint32_t index() const;
  const Annotation& annotation() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const { return left(); }

  std::size_t hash() const;
  std::size_t size() const;
  // 1 + the largest loose de Bruijn index, 0 if there is none.
  std::uint32_t loose() const;
  bool has_free_vars() const;
  bool has_symbolic() const;
  bool finite_annotations() const;

  bool is_literal() const;
  bool is_binary() const;
  bool is_fixpoint() const;
  bool is_unit() const;

  const Node* ptr() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula negate(const Formula& a);
// Capture-free substitution of B for the free variable x.
Formula substitute(const Formula& a, const std::string& x, const Formula& b);
// Replaces the binder's index in a fixed-point body by b.
Formula instantiate(const Formula& body, const Formula& b);
// Turns the free variable x into de Bruijn index 0.
Formula abstract(const Formula& a, const std::string& x);
// A(eta^gamma x.A) for the fixed point eta^beta x.A.
Formula unfold(const Formula& fixpoint, const Annotation& gamma);
Formula subst_ordinal_var(const Formula& a, const std::string& var,
                          const Annotation& repl);
std::set<std::string> free_vars(const Formula& a);
std::set<std::string> atoms(const Formula& a);
std::set<std::string> ordinal_vars(const Formula& a);

enum class Polarity { Positive, Negative };
Polarity polarity(const Formula& a);
bool is_positive(const Formula& a);
bool is_negative(const Formula& a);

std::string to_string(const Formula& a);

// Finite multiset of formulas, kept sorted.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> fs);  // NOLINT
  Sequent(std::initializer_list<Formula> fs);

  const std::vector<Formula>& formulas() const { return fs_; }
  std::size_t size() const { return fs_.size(); }
  bool empty() const { return fs_.empty(); }
  const Formula& operator[](std::size_t i) const { return fs_[i]; }
  auto begin() const { return fs_.begin(); }
  auto end() const { return fs_.end(); }

  Sequent with(const Formula& f) const;
  Sequent with(const std::vector<Formula>& fs) const;
  Sequent without(std::size_t i) const;
  // Index of some occurrence of f, or -1.
  long find(const Formula& f) const;
  std::size_t count(const Formula& f) const;
  Sequent plus(const Sequent& other) const;
  // this minus other as multisets; false if other is not contained.
  bool minus(const Sequent& other, Sequent* out) const;
  std::size_t hash() const;

  friend bool operator==(const Sequent& a, const Sequent& b);
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b);

 private:
  std::vector<Formula> fs_;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

std::string to_string(const Sequent& s);

struct ParseOptions {
  Ordinal alpha = Ordinal::omega();
  bool check_alpha = true;  // reject annotations above alpha
};

// Raised on malformed surface syntax.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

Formula parse_formula(std::string_view text, const ParseOptions& opts = {});
// One-sided `A, B, C` or two-sided `A, B => C`.
Sequent parse_sequent(std::string_view text, const ParseOptions& opts = {});
// An ordinal or an ordinal variable name.
Annotation parse_annotation(std::string_view text, const ParseOptions& opts = {});

}  // namespace mumall

#endif  // MUMALL_SYNTAX_HPP
