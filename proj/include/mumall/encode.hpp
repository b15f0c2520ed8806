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

#ifndef MUMALL_ENCODE_HPP
#define MUMALL_ENCODE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mumall/ordinal.hpp"
#include "mumall/search.hpp"
#include "mumall/syntax.hpp"

namespace mumall {

// Minsky machines --------------------------------------------------------------

struct Instruction {
  enum class Op { Inc, JzDec };
  Op op = Op::Inc;
  std::string p;
  std::size_t i = 0;
  std::string q;
  std::string r;  // jzdec only: target when counter i is zero

  static Instruction inc(std::string p, std::size_t i, std::string q);
  static Instruction jzdec(std::string p, std::size_t i, std::string q,
                           std::string r);
};

struct MinskyMachine {
  std::size_t counters = 1;
  std::vector<std::string> states;
  std::string start;
  std::string accept;
  std::vector<Instruction> instructions;

  // Throws DomainError when a state or counter reference is out of range.
  void validate() const;
};

struct Configuration {
  std::string state;
  std::vector<std::uint64_t> counters;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

std::string to_string(const Configuration& c);

std::vector<Configuration> step(const MinskyMachine& m, const Configuration& c);
// Configurations reachable from c0 in fewer than k steps.
std::vector<Configuration> reachable_set(const MinskyMachine& m,
                                         const Configuration& c0,
                                         std::uint64_t k);
bool reachable_within(const MinskyMachine& m, const Configuration& c0,
                      const Configuration& c1, std::uint64_t k);

MinskyMachine parse_machine(std::string_view json_text);
std::string machine_to_json(const MinskyMachine& m);

// Encoding ---------------------------------------------------------------------

Formula counter_atom(std::size_t i);  // c<i>
Formula pass();                       // ~acc * acc
Formula acc();                        // ~acc | acc
std::vector<Formula> tup(const std::vector<std::uint64_t>& v);

// mu^k y.(Acc + ((+_{j != i} ~c_j) * y)) over counters 0..counters-1.
Formula zero_check(std::size_t i, std::size_t counters, const Ordinal& k);

struct EncodeOptions {
  std::string target = "t";  // the fresh symbol t
  Ordinal zero_bound = Ordinal(8);  // annotation of the zero-check formulas
};

// The encoding of one instruction; `x` is left free.
Formula encode_instruction(const Instruction& ins, std::size_t counters,
                           const std::string& x,
                           const EncodeOptions& opts = {});

// mu^b x.[T + (+ encodings)].  Machines must have disjoint state sets.
Formula comp_formula(const std::vector<MinskyMachine>& machines,
                     const Ordinal& b, const EncodeOptions& opts = {});

// (~p1 * A1) + ... + (~pm * Am) + Pass with each pi in keys, in any order.
bool is_locked(const std::set<std::string>& keys, const Formula& a);
bool is_locked(const std::set<std::string>& keys, const Sequent& g);

// Pass + (~t * 1): unlocked by t exactly when no counter is left.
Formula locked_zero(const std::string& target = "t");
// Pass + (~t * mu^k y.(1 + ((+_j ~c_j) * y))): unlocked by t with fewer than
// k counter units left.
Formula locked_sink(std::size_t counters, const Ordinal& k,
                    const std::string& target = "t");

// Syntactic constructors -------------------------------------------------------

Formula lock(const Formula& a);
// Defined on formulas built from | and mu^beta over leaves; `ind` must be
// closed.
Formula aug(const Formula& a, const Formula& ind);
Formula hat(const Formula& a, const Formula& ind);
// One-step successors under mu^b x.A ~> A(mu^g x.A) (g < b; finite b uses
// every g, infinite b the probes below it) and A1 | A2 ~> Ai.
std::vector<Formula> rewrites(const Formula& a,
                              const std::vector<Ordinal>& probes = {});
// Membership in the closure of R_0..R_{n_max} (binders annotated `a`).
bool in_E(const Formula& f, unsigned n_max, const Ordinal& a,
          const std::vector<Ordinal>& probes = {},
          std::size_t max_size = 100000);

// Differential check -----------------------------------------------------------

struct DiffCase {
  std::vector<MinskyMachine> machines;
  std::size_t machine = 0;  // index d of the machine started
  std::vector<std::uint64_t> input;
  std::uint64_t k = 0;
  std::vector<Formula> gamma;  // {t, key1}-locked
};

struct DiffReport {
  Sequent sequent;
  Verdict verdict = Verdict::Unprovable;  // focused search on the encoding
  bool provable = false;
  bool expected = false;  // from simulation plus decide on Gamma, tup(m), t
  bool accept_reached = false;
  std::vector<Configuration> accepting;  // accept configurations within k
  SearchStats stats;
  std::size_t plain_nodes = 0;  // plain-search nodes on the same sequent, 0 if not run
  bool agree() const {
    return verdict != Verdict::ResourceExceeded && provable == expected;
  }
};

Sequent comp_sequent(const DiffCase& c, const EncodeOptions& opts);
EncodeOptions default_encode_options(const DiffCase& c);
DiffReport comp_provability_matches_reachability(
    const DiffCase& c, const SearchLimits& limits = {}, bool run_plain = false);

// A small fixed suite used by tests and the CLI.
std::vector<std::pair<std::string, MinskyMachine>> machine_suite();

}  // namespace mumall

#endif  // MUMALL_ENCODE_HPP
