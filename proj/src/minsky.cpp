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

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "mumall/encode.hpp"

namespace mumall {

using nlohmann::json;

Instruction Instruction::inc(std::string p, std::size_t i, std::string q) {
  Instruction ins;
  ins.op = Op::Inc;
  ins.p = std::move(p);
  ins.i = i;
  ins.q = std::move(q);
  return ins;
}

Instruction Instruction::jzdec(std::string p, std::size_t i, std::string q,
                               std::string r) {
  Instruction ins = inc(std::move(p), i, std::move(q));
  ins.op = Op::JzDec;
  ins.r = std::move(r);
  return ins;
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [&](char c) {
    return head(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '\'';
  };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

bool reserved(const std::string& s) {
  static const std::set<std::string> kw = {"mu", "nu", "T", "top", "bot",
                                           "w", "acc", "key1", "key2"};
  if (kw.count(s)) return true;
  return s.size() > 1 && s[0] == 'c' &&
         std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

void MinskyMachine::validate() const {
  if (counters == 0) throw DomainError("machine: at least one counter needed");
  std::set<std::string> known;
  for (const auto& s : states) {
    if (!is_identifier(s) || reserved(s))
      throw DomainError("machine: bad state name '" + s + "'");
    if (!known.insert(s).second)
      throw DomainError("machine: duplicate state '" + s + "'");
  }
  auto need = [&](const std::string& s) {
    if (!known.count(s)) throw DomainError("machine: unknown state '" + s + "'");
  };
  need(start);
  need(accept);
  for (const auto& ins : instructions) {
    need(ins.p);
    need(ins.q);
    if (ins.op == Instruction::Op::JzDec) need(ins.r);
    if (ins.i >= counters)
      throw DomainError("machine: counter " + std::to_string(ins.i) +
                        " out of range");
  }
}

std::string to_string(const Configuration& c) {
  std::string out = c.state + "(";
  for (std::size_t i = 0; i < c.counters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.counters[i]);
  }
  return out + ")";
}

std::vector<Configuration> step(const MinskyMachine& m, const Configuration& c) {
  std::vector<Configuration> out;
  for (const auto& ins : m.instructions) {
    if (ins.p != c.state) continue;
    Configuration n = c;
    if (ins.op == Instruction::Op::Inc) {
      ++n.counters[ins.i];
      n.state = ins.q;
    } else if (n.counters[ins.i] > 0) {
      --n.counters[ins.i];
      n.state = ins.q;
    } else {
      n.state = ins.r;
    }
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

std::vector<Configuration> reachable_set(const MinskyMachine& m,
                                         const Configuration& c0,
                                         std::uint64_t k) {
  if (k == 0) return {};
  std::set<Configuration> seen{c0};
  std::vector<Configuration> frontier{c0};
  for (std::uint64_t d = 1; d < k && !frontier.empty(); ++d) {
    std::vector<Configuration> next;
    for (const auto& c : frontier)
      for (auto& n : step(m, c))
        if (seen.insert(n).second) next.push_back(std::move(n));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool reachable_within(const MinskyMachine& m, const Configuration& c0,
                      const Configuration& c1, std::uint64_t k) {
  auto all = reachable_set(m, c0, k);
  return std::find(all.begin(), all.end(), c1) != all.end();
}

MinskyMachine parse_machine(std::string_view json_text) {
  MinskyMachine m;
  try {
    json j = json::parse(json_text);
    m.counters = j.at("counters").get<std::size_t>();
    m.states = j.at("states").get<std::vector<std::string>>();
    m.start = j.at("start").get<std::string>();
    m.accept = j.at("accept").get<std::string>();
    for (const auto& e : j.at("instructions")) {
      std::string op = e.at("op").get<std::string>();
      auto p = e.at("p").get<std::string>();
      auto i = e.at("i").get<std::size_t>();
      auto q = e.at("q").get<std::string>();
      if (op == "inc")
        m.instructions.push_back(Instruction::inc(p, i, q));
      else if (op == "jzdec")
        m.instructions.push_back(
            Instruction::jzdec(p, i, q, e.at("r").get<std::string>()));
      else
        throw DomainError("machine: unknown op '" + op + "'");
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("machine: ") + e.what());
  }
  m.validate();
  return m;
}

std::string machine_to_json(const MinskyMachine& m) {
  json ins = json::array();
  for (const auto& i : m.instructions) {
    json e = {{"op", i.op == Instruction::Op::Inc ? "inc" : "jzdec"},
              {"p", i.p},
              {"i", i.i},
              {"q", i.q}};
    if (i.op == Instruction::Op::JzDec) e["r"] = i.r;
    ins.push_back(e);
  }
  json j = {{"counters", m.counters}, {"states", m.states},
            {"start", m.start},       {"accept", m.accept},
            {"instructions", ins}};
  return j.dump(2);
}

Formula counter_atom(std::size_t i) {
  return Formula::atom("c" + std::to_string(i));
}

Formula pass() {
  return Formula::tensor(Formula::neg_atom("acc"), Formula::atom("acc"));
}

Formula acc() {
  return Formula::par(Formula::neg_atom("acc"), Formula::atom("acc"));
}

std::vector<Formula> tup(const std::vector<std::uint64_t>& v) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::uint64_t k = 0; k < v[i]; ++k) out.push_back(counter_atom(i));
  return out;
}

namespace {

// Right-nested disjunction; 0 when empty.
Formula disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::zero();
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) out = Formula::plus(fs[i], out);
  return out;
}

}  // namespace

Formula zero_check(std::size_t i, std::size_t counters, const Ordinal& k) {
  std::vector<Formula> others;
  for (std::size_t j = 0; j < counters; ++j)
    if (j != i) others.push_back(negate(counter_atom(j)));
  Formula body = Formula::plus(
      acc(), Formula::tensor(disjunction(others), Formula::var("y")));
  return Formula::mu(Annotation(k), "y", body);
}

Formula locked_zero(const std::string& target) {
  return Formula::plus(pass(),
                       Formula::tensor(Formula::neg_atom(target), Formula::one()));
}

Formula locked_sink(std::size_t counters, const Ordinal& k,
                    const std::string& target) {
  std::vector<Formula> cs;
  for (std::size_t j = 0; j < counters; ++j) cs.push_back(negate(counter_atom(j)));
  Formula body = Formula::plus(
      Formula::one(), Formula::tensor(disjunction(cs), Formula::var("y")));
  return Formula::plus(
      pass(), Formula::tensor(Formula::neg_atom(target),
                              Formula::mu(Annotation(k), "y", body)));
}

Formula encode_instruction(const Instruction& ins, std::size_t counters,
                           const std::string& x, const EncodeOptions& opts) {
  Formula xv = Formula::var(x);
  Formula np = Formula::neg_atom(ins.p);
  Formula q = Formula::atom(ins.q);
  if (ins.op == Instruction::Op::Inc)
    return Formula::tensor(
        np, Formula::par(counter_atom(ins.i), Formula::par(q, xv)));
  Formula dec = Formula::tensor(negate(counter_atom(ins.i)), Formula::par(q, xv));
  Formula zero = Formula::with(zero_check(ins.i, counters, opts.zero_bound),
                               Formula::par(Formula::atom(ins.r), xv));
  return Formula::tensor(np, Formula::plus(dec, zero));
}

Formula comp_formula(const std::vector<MinskyMachine>& machines,
                     const Ordinal& b, const EncodeOptions& opts) {
  std::set<std::string> seen;
  std::size_t counters = 1;
  for (const auto& m : machines) {
    m.validate();
    counters = std::max(counters, m.counters);
    for (const auto& s : m.states) {
      if (!seen.insert(s).second)
        throw DomainError("comp: state '" + s + "' shared between machines");
      if (s == opts.target)
        throw DomainError("comp: state '" + s + "' clashes with the target");
    }
  }
  const std::string x = "x";
  std::vector<Formula> disjuncts;
  std::vector<Formula> ts;
  for (const auto& m : machines)
    ts.push_back(Formula::tensor(Formula::neg_atom(m.accept),
                                 Formula::atom(opts.target)));
  disjuncts.push_back(disjunction(ts));
  for (const auto& m : machines)
    for (const auto& ins : m.instructions)
      disjuncts.push_back(encode_instruction(ins, counters, x, opts));
  return Formula::mu(Annotation(b), x, disjunction(disjuncts));
}

namespace {

void flatten_plus(const Formula& a, std::vector<Formula>& out) {
  if (a.kind() == Kind::Plus) {
    flatten_plus(a.left(), out);
    flatten_plus(a.right(), out);
  } else {
    out.push_back(a);
  }
}

}  // namespace

bool is_locked(const std::set<std::string>& keys, const Formula& a) {
  std::vector<Formula> ds;
  flatten_plus(a, ds);
  const Formula ps = pass();
  bool has_pass = false;
  for (const auto& d : ds) {
    if (!has_pass && d == ps) {
      has_pass = true;
      continue;
    }
    if (d.kind() != Kind::Tensor || d.left().kind() != Kind::NegAtom ||
        !keys.count(d.left().name()))
      return false;
  }
  return has_pass;
}

bool is_locked(const std::set<std::string>& keys, const Sequent& g) {
  return std::all_of(g.begin(), g.end(),
                     [&](const Formula& f) { return is_locked(keys, f); });
}

Sequent comp_sequent(const DiffCase& c, const EncodeOptions& opts) {
  const MinskyMachine& m = c.machines.at(c.machine);
  std::vector<Formula> fs = c.gamma;
  for (const auto& f : tup(c.input)) fs.push_back(f);
  fs.push_back(Formula::atom(m.start));
  fs.push_back(comp_formula(c.machines, Ordinal(c.k), opts));
  return Sequent(std::move(fs));
}

EncodeOptions default_encode_options(const DiffCase& c) {
  EncodeOptions opts;
  std::uint64_t total = std::accumulate(c.input.begin(), c.input.end(),
                                        std::uint64_t{0});
  opts.zero_bound = Ordinal(total + c.k + 2);
  return opts;
}

DiffReport comp_provability_matches_reachability(const DiffCase& c,
                                                 const SearchLimits& limits,
                                                 bool run_plain) {
  if (!is_locked({"t", "key1"}, Sequent(c.gamma)))
    throw DomainError("diff: Gamma is not {t, key1}-locked");
  const MinskyMachine& m = c.machines.at(c.machine);
  std::size_t counters = 1;
  for (const auto& x : c.machines) counters = std::max(counters, x.counters);
  if (c.input.size() > counters)
    throw DomainError("diff: input has more counters than the machines");
  EncodeOptions opts = default_encode_options(c);
  if (opts.target != "t")
    throw DomainError("diff: target symbol must be t");

  DiffReport out;
  out.sequent = comp_sequent(c, opts);

  Configuration c0{m.start, c.input};
  c0.counters.resize(counters, 0);
  for (const auto& conf : reachable_set(m, c0, c.k)) {
    if (conf.state != m.accept) continue;
    out.accept_reached = true;
    out.accepting.push_back(conf);
    std::vector<Formula> fs = c.gamma;
    for (const auto& f : tup(conf.counters)) fs.push_back(f);
    fs.push_back(Formula::atom("t"));
    SearchResult r = decide(Sequent(std::move(fs)), limits);
    if (r.verdict == Verdict::ResourceExceeded)
      throw ResourceError("diff: oracle search exhausted: " + r.reason);
    if (r.verdict == Verdict::Provable) out.expected = true;
  }

  FocusSearchResult f = focused_decide(out.sequent, limits);
  out.verdict = f.verdict;
  out.provable = f.verdict == Verdict::Provable;
  out.stats = f.stats;
  if (run_plain) out.plain_nodes = decide(out.sequent, limits).stats.nodes;
  return out;
}

std::vector<std::pair<std::string, MinskyMachine>> machine_suite() {
  using I = Instruction;
  auto mk = [](std::size_t counters, std::vector<std::string> states,
               std::vector<Instruction> ins) {
    MinskyMachine m;
    m.counters = counters;
    m.states = std::move(states);
    m.start = "s";
    m.accept = "h";
    m.instructions = std::move(ins);
    m.validate();
    return m;
  };
  return {
      {"successor", mk(1, {"s", "h"}, {I::inc("s", 0, "h")})},
      {"identity",
       mk(1, {"s", "a", "h"}, {I::inc("s", 0, "a"), I::jzdec("a", 0, "h", "h")})},
      {"add-two",
       mk(1, {"s", "a", "h"}, {I::inc("s", 0, "a"), I::inc("a", 0, "h")})},
      {"zero-test", mk(1, {"s", "d", "h"}, {I::jzdec("s", 0, "d", "h")})},
      {"drain", mk(1, {"s", "h"}, {I::jzdec("s", 0, "s", "h")})},
      {"dead-state", mk(1, {"s", "d", "h"}, {I::inc("s", 0, "d")})},
      {"transfer",
       mk(2, {"s", "a", "h"}, {I::jzdec("s", 0, "a", "h"), I::inc("a", 1, "s")})},
      {"even", mk(1, {"s", "a", "d", "h"},
                  {I::jzdec("s", 0, "a", "h"), I::jzdec("a", 0, "s", "d")})},
  };
}

}  // namespace mumall
