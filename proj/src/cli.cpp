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

#include "mumall/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mumall/encode.hpp"
#include "mumall/json_io.hpp"
#include "mumall/rank.hpp"
#include "mumall/search.hpp"
#include "mumall/transform.hpp"

namespace mumall {

using nlohmann::json;

namespace {

struct Config {
  std::string alpha = "w";
  std::string format = "human";
  std::size_t max_nodes = 2'000'000;
  std::string max_rank;
  std::string gamma_probe;
  bool no_instrument = false;
  bool proof = false;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args);

 private:
  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;
  std::function<int()> action_;

  bool json_out() const { return cfg_.format == "json"; }

  ParseOptions parse_opts() const {
    ParseOptions o;
    o.alpha = parse_ordinal(cfg_.alpha);
    return o;
  }

  static std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  // "-" reads standard input; anything else is the text itself.
  static std::string text_arg(const std::string& s) {
    return s == "-" ? slurp(std::cin) : s;
  }

  static std::string file_arg(const std::string& path) {
    if (path == "-") return slurp(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    return slurp(in);
  }

  SearchLimits limits() const {
    SearchLimits l;
    l.max_nodes = cfg_.max_nodes;
    if (!cfg_.max_rank.empty()) l.max_rank = parse_ordinal(cfg_.max_rank);
    std::stringstream ss(cfg_.gamma_probe);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) l.gamma_probe.push_back(parse_ordinal(item));
    std::sort(l.gamma_probe.begin(), l.gamma_probe.end());
    l.instrument = !cfg_.no_instrument;
    return l;
  }

  static json stats_json(const SearchStats& s) {
    return {{"nodes", s.nodes},
            {"memo_hits", s.memo_hits},
            {"max_depth", s.max_depth},
            {"rank_checks", s.rank_checks}};
  }

  void human_stats(const SearchStats& s) {
    out_ << "nodes=" << s.nodes << " memo_hits=" << s.memo_hits
         << " max_depth=" << s.max_depth << " rank_checks=" << s.rank_checks
         << "\n";
  }

  void report_check(const CheckResult& r, const std::string& what) {
    if (json_out()) {
      out_ << json{{"valid", r.valid},
                   {"path", r.path},
                   {"reason", r.reason},
                   {"detail", r.detail}}
                  .dump()
           << "\n";
    } else if (r.valid) {
      out_ << what << ": valid\n";
    } else {
      out_ << what << ": invalid at " << (r.path.empty() ? "/" : r.path)
           << ": " << r.reason << " (" << r.detail << ")\n";
    }
  }

  void add_limits(CLI::App* sub) {
    sub->add_option("--max-nodes", cfg_.max_nodes, "Search node budget");
    sub->add_option("--max-rank", cfg_.max_rank,
                    "Reject sequents of larger rank");
    sub->add_option("--gamma-probe", cfg_.gamma_probe,
                    "Comma-separated mu choices for infinite annotations");
    sub->add_flag("--no-instrument", cfg_.no_instrument,
                  "Skip the rank-decrease assertions");
    sub->add_flag("--proof", cfg_.proof, "Print the proof found");
  }

  void setup_parse(CLI::App& app);
  void setup_rank(CLI::App& app);
  void setup_decide(CLI::App& app);
  void setup_check(CLI::App& app);
  void setup_transform(CLI::App& app);
  void setup_minsky(CLI::App& app);
  void setup_closure(CLI::App& app);
  void setup_demo(CLI::App& app);

  int demo_additive_units(const std::string& beta);
  int demo_monotonicity(const std::string& from, const std::string& to,
                        const std::string& body, const std::string& var,
                        const std::string& eta);
  int demo_eta_functor(const std::string& formula, const std::string& context,
                       const std::string& hole);
  int demo_rho_growth(unsigned max_k, unsigned max_gamma, unsigned max_n);
  int demo_sigma01(std::uint64_t n, std::uint64_t k);
  int demo_result(const std::string& name, const Proof& p);
};

void Runner::setup_parse(CLI::App& app) {
  auto* sub = app.add_subcommand("parse", "Parse and print a formula or sequent");
  auto text = std::make_shared<std::string>();
  auto sequent = std::make_shared<bool>(false);
  sub->add_option("text", *text, "Formula, or '-' for stdin")->required();
  sub->add_flag("--sequent", *sequent, "Parse a sequent");
  sub->callback([this, text, sequent] {
    action_ = [this, text, sequent] {
      std::string t = text_arg(*text);
      if (*sequent) {
        Sequent g = parse_sequent(t, parse_opts());
        if (json_out()) {
          json fs = json::array();
          for (const auto& f : g) fs.push_back(to_string(f));
          out_ << json{{"sequent", fs}}.dump() << "\n";
        } else {
          out_ << to_string(g) << "\n";
        }
        return 0;
      }
      Formula f = parse_formula(t, parse_opts());
      if (json_out()) {
        out_ << json{{"formula", to_string(f)},
                     {"polarity", is_positive(f) ? "positive" : "negative"},
                     {"size", f.size()},
                     {"closed", !f.has_free_vars()}}
                    .dump()
             << "\n";
      } else {
        out_ << to_string(f) << "\n";
      }
      return 0;
    };
  });
}

void Runner::setup_rank(CLI::App& app) {
  struct Args {
    std::string text;
    bool upper = false;
    bool sequent = false;
    std::vector<std::string> sets;
  };
  auto a = std::make_shared<Args>();
  auto exact = [this, a] {
    std::string t = text_arg(a->text);
    Valuation s = Valuation::one();
    for (const auto& kv : a->sets) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw DomainError("--set expects x=ordinal, got " + kv);
      s.set(kv.substr(0, eq), parse_ordinal(kv.substr(eq + 1)));
    }
    Ordinal r;
    if (a->sequent) {
      for (const auto& f : parse_sequent(t, parse_opts()))
        r = natural_sum(r, rank_val(f, s));
    } else {
      r = rank_val(parse_formula(t, parse_opts()), s);
    }
    if (json_out())
      out_ << json{{"rank", r.str()}, {"exact", true}}.dump() << "\n";
    else
      out_ << r.str() << "\n";
    return 0;
  };
  auto upper = [this, a] {
    std::string t = text_arg(a->text);
    IterProduct r;
    if (a->sequent) {
      for (const auto& f : parse_sequent(t, parse_opts())) {
        IterProduct x = rank_upper_bound_flagged(f);
        r.value = natural_sum(r.value, x.value);
        r.upper_bound = r.upper_bound || x.upper_bound;
      }
    } else {
      r = rank_upper_bound_flagged(parse_formula(t, parse_opts()));
    }
    if (json_out())
      out_ << json{{"rank_upper_bound", r.value.str()},
                   {"envelope", r.upper_bound}}
                  .dump()
           << "\n";
    else
      out_ << r.value.str() << "\n";
    return 0;
  };

  auto* sub = app.add_subcommand("rank", "Exact rank of a formula");
  sub->add_option("text", a->text, "Formula, or '-' for stdin")->required();
  sub->add_flag("--upper", a->upper, "Print the upper bound instead");
  sub->add_flag("--sequent", a->sequent, "Rank of a sequent");
  sub->add_option("--set", a->sets, "Valuation entry x=ordinal");
  sub->callback([this, a, exact, upper] {
    action_ = a->upper ? std::function<int()>(upper) : std::function<int()>(exact);
  });

  auto* ub = app.add_subcommand("rank-ub", "Upper bound on the rank");
  ub->add_option("text", a->text, "Formula, or '-' for stdin")->required();
  ub->add_flag("--sequent", a->sequent, "Bound for a sequent");
  ub->callback([this, upper] { action_ = upper; });
}

void Runner::setup_decide(CLI::App& app) {
  auto text = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("decide", "Cut-free proof search");
  sub->add_option("sequent", *text, "Sequent, or '-' for stdin")->required();
  add_limits(sub);
  sub->callback([this, text] {
    action_ = [this, text] {
      Sequent g = parse_sequent(text_arg(*text), parse_opts());
      SearchResult r = decide(g, limits());
      if (r.proof) {
        CheckResult c = check_proof(r.proof, {CheckMode::CutFree, {}});
        if (!c) throw std::logic_error("decide produced an invalid proof: " + c.reason);
      }
      if (json_out()) {
        json j = {{"verdict", verdict_name(r.verdict)},
                  {"stats", stats_json(r.stats)}};
        if (!r.reason.empty()) j["reason"] = r.reason;
        if (cfg_.proof && r.proof) j["proof"] = proof_to_json(r.proof);
        out_ << j.dump() << "\n";
      } else {
        out_ << verdict_name(r.verdict);
        if (!r.reason.empty()) out_ << ": " << r.reason;
        out_ << "\n";
        human_stats(r.stats);
        if (cfg_.proof && r.proof) out_ << proof_to_json(r.proof).dump(2) << "\n";
      }
      return exit_code(r.verdict);
    };
  });

  auto ftext = std::make_shared<std::string>();
  auto* fsub = app.add_subcommand("fdecide", "Focussed proof search");
  fsub->add_option("sequent", *ftext, "Sequent, or '-' for stdin")->required();
  add_limits(fsub);
  fsub->callback([this, ftext] {
    action_ = [this, ftext] {
      Sequent g = parse_sequent(text_arg(*ftext), parse_opts());
      FocusSearchResult r = focused_decide(g, limits());
      if (r.proof) {
        CheckResult c = check_focus_proof(r.proof);
        if (!c)
          throw std::logic_error("fdecide produced an invalid proof: " + c.reason);
      }
      if (json_out()) {
        json j = {{"verdict", verdict_name(r.verdict)},
                  {"stats", stats_json(r.stats)}};
        if (!r.reason.empty()) j["reason"] = r.reason;
        if (cfg_.proof && r.proof) j["proof"] = focus_proof_to_json(r.proof);
        out_ << j.dump() << "\n";
      } else {
        out_ << verdict_name(r.verdict);
        if (!r.reason.empty()) out_ << ": " << r.reason;
        out_ << "\n";
        human_stats(r.stats);
        if (cfg_.proof && r.proof)
          out_ << focus_proof_to_json(r.proof).dump(2) << "\n";
      }
      return exit_code(r.verdict);
    };
  });
}

namespace {

// Turns the atom `x` into the free variable x.
Formula atom_to_var(const Formula& f, const std::string& x) {
  switch (f.kind()) {
    case Kind::Atom:
      return f.name() == x ? Formula::var(x) : f;
    case Kind::NegAtom:
      if (f.name() == x)
        throw DomainError("variable " + x + " occurs negated");
      return f;
    case Kind::Tensor:
    case Kind::Par:
    case Kind::Plus:
    case Kind::With:
      return Formula::binary(f.kind(), atom_to_var(f.left(), x),
                             atom_to_var(f.right(), x));
    case Kind::Mu:
    case Kind::Nu:
      return Formula::fix(f.kind(), f.annotation(), f.name(),
                          atom_to_var(f.body(), x));
    default:
      return f;
  }
}

// Accepts a bare proof or the {"proof": ...} envelope printed by the search
// commands.
json unwrap_proof(json j) {
  if (j.is_object() && j.contains("proof") && !j.contains("rule")) return j["proof"];
  return j;
}

}  // namespace

void Runner::setup_check(CLI::App& app) {
  struct Args {
    std::string file;
    std::string mode = "full";
    std::string delta = "0";
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("check", "Check a proof file");
  sub->add_option("file", a->file, "Proof JSON file, or '-' for stdin")->required();
  sub->add_option("--mode", a->mode, "full, cut-bound or cut-free")
      ->check(CLI::IsMember({"full", "cut-bound", "cut-free"}));
  sub->add_option("--delta", a->delta, "Cut-rank bound for cut-bound mode");
  sub->callback([this, a] {
    action_ = [this, a] {
      json j = unwrap_proof(json::parse(file_arg(a->file)));
      CheckResult r;
      if (is_focus_json(j)) {
        r = check_focus_proof(focus_proof_from_json(j, parse_opts()));
        report_check(r, "focussed proof");
      } else {
        CheckOptions o;
        o.mode = a->mode == "full"        ? CheckMode::FullCut
                 : a->mode == "cut-bound" ? CheckMode::CutBound
                                          : CheckMode::CutFree;
        o.delta = parse_ordinal(a->delta);
        r = check_proof(proof_from_json(j, parse_opts()), o);
        report_check(r, "proof");
      }
      return r.valid ? 0 : 1;
    };
  });
}

void Runner::setup_transform(CLI::App& app) {
  auto file = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("elim", "Eliminate cuts from a proof");
  sub->add_option("file", *file, "Proof JSON file, or '-' for stdin")->required();
  sub->callback([this, file] {
    action_ = [this, file] {
      Proof p = proof_from_json(unwrap_proof(json::parse(file_arg(*file))),
                                parse_opts());
      CheckResult in = check_proof(p);
      if (!in) {
        report_check(in, "input proof");
        return 1;
      }
      ElimStats st;
      Proof q = eliminate_cuts(p, &st);
      CheckResult c = check_proof(q, {CheckMode::CutFree, {}});
      if (!c) throw std::logic_error("cut elimination produced an invalid proof");
      if (json_out()) {
        out_ << proof_to_json(q).dump() << "\n";
      } else {
        out_ << "cut-free proof of " << to_string(q->conclusion) << ": "
             << proof_size(q) << " nodes, " << st.reductions
             << " reductions, " << st.rank_checks << " rank checks\n";
      }
      return 0;
    };
  });

  auto ffile = std::make_shared<std::string>();
  auto* fsub = app.add_subcommand("focusize", "Turn a cut-free proof into a focussed one");
  fsub->add_option("file", *ffile, "Proof JSON file, or '-' for stdin")->required();
  fsub->callback([this, ffile] {
    action_ = [this, ffile] {
      Proof p = proof_from_json(unwrap_proof(json::parse(file_arg(*ffile))),
                                parse_opts());
      CheckResult in = check_proof(p, {CheckMode::CutFree, {}});
      if (!in) {
        report_check(in, "input proof");
        return 1;
      }
      FocusProof q = focus(p);
      CheckResult c = check_focus_proof(q);
      if (!c) throw std::logic_error("focussing produced an invalid proof");
      if (json_out()) {
        out_ << focus_proof_to_json(q).dump() << "\n";
      } else {
        out_ << "focussed proof of " << to_string(q->erased()) << ": "
             << focus_proof_size(q) << " nodes\n";
      }
      return 0;
    };
  });
}

namespace {

std::vector<std::uint64_t> parse_counts(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw DomainError("bad counter value " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

void Runner::setup_minsky(CLI::App& app) {
  auto* sub = app.add_subcommand("minsky", "Minsky machine encoding");
  sub->require_subcommand(1);

  struct Args {
    std::string file;
    std::uint64_t beta = 8;
    std::string input = "0";
    std::vector<std::string> gamma;
    bool suite = false;
    std::uint64_t max_input = 3;
    std::uint64_t max_k = 8;
  };
  auto a = std::make_shared<Args>();
  auto gammas = [this, a] {
    std::vector<Formula> g;
    for (const auto& s : a->gamma) g.push_back(parse_formula(s, parse_opts()));
    return g;
  };

  auto* comp = sub->add_subcommand("compile", "Print Gamma, tup(n), s, Comp_beta");
  comp->add_option("file", a->file, "Machine JSON file, or '-' for stdin")->required();
  comp->add_option("--beta", a->beta, "Annotation of Comp");
  comp->add_option("--input", a->input, "Comma-separated counter values");
  comp->add_option("--gamma", a->gamma, "Locked side formula (repeatable)");
  comp->callback([this, a, gammas] {
    action_ = [this, a, gammas] {
      DiffCase c;
      c.machines = {parse_machine(file_arg(a->file))};
      c.input = parse_counts(a->input);
      c.k = a->beta;
      c.gamma = gammas();
      Sequent g = comp_sequent(c, default_encode_options(c));
      if (json_out()) {
        json fs = json::array();
        for (const auto& f : g) fs.push_back(to_string(f));
        out_ << json{{"sequent", fs}}.dump() << "\n";
      } else {
        out_ << to_string(g) << "\n";
      }
      return 0;
    };
  });

  auto* diff = sub->add_subcommand("diff", "Compare provability with simulation");
  diff->add_option("file", a->file, "Machine JSON file");
  diff->add_flag("--suite", a->suite, "Use the built-in machine suite");
  diff->add_option("--max-input", a->max_input, "Largest counter value tried");
  diff->add_option("--max-k", a->max_k, "Largest annotation tried");
  diff->add_option("--gamma", a->gamma,
                   "Locked side formula (repeatable); default: none, then "
                   "Pass + (~t * 1), then a formula draining all counters");
  add_limits(diff);
  diff->callback([this, a, gammas] {
    action_ = [this, a, gammas] {
      std::vector<std::pair<std::string, MinskyMachine>> ms;
      if (a->suite) ms = machine_suite();
      if (!a->file.empty()) ms.emplace_back(a->file, parse_machine(file_arg(a->file)));
      if (ms.empty()) throw DomainError("minsky diff needs a file or --suite");
      std::vector<std::vector<Formula>> gs;
      if (a->gamma.empty()) {
        std::size_t counters = 1;
        for (const auto& m : ms) counters = std::max(counters, m.second.counters);
        gs.push_back({});
        gs.push_back({locked_zero()});
        gs.push_back({locked_sink(
            counters, Ordinal(a->max_input * counters + a->max_k + 2))});
      } else {
        gs.push_back(gammas());
      }
      SearchLimits lim = limits();
      std::size_t total = 0, disagree = 0, resource = 0;
      for (const auto& [name, m] : ms) {
        std::size_t cases = 0, bad = 0, prov = 0;
        std::vector<std::uint64_t> input(m.counters, 0);
        for (;;) {
          for (const auto& g : gs)
            for (std::uint64_t k = 0; k <= a->max_k; ++k) {
              DiffCase c;
              c.machines = {m};
              c.input = input;
              c.k = k;
              c.gamma = g;
              DiffReport r = comp_provability_matches_reachability(c, lim);
              ++cases;
              if (r.provable) ++prov;
              if (r.verdict == Verdict::ResourceExceeded) ++resource;
              if (!r.agree()) ++bad;
              if (json_out()) {
                json in = json::array();
                for (auto v : input) in.push_back(v);
                out_ << json{{"machine", name},
                             {"input", in},
                             {"k", k},
                             {"gamma", to_string(Sequent(g))},
                             {"verdict", verdict_name(r.verdict)},
                             {"expected", r.expected},
                             {"agree", r.agree()},
                             {"nodes", r.stats.nodes}}
                            .dump()
                     << "\n";
              } else if (!r.agree()) {
                out_ << "disagreement: " << name << " k=" << k << " "
                     << to_string(r.sequent) << " search="
                     << verdict_name(r.verdict) << " expected=" << r.expected
                     << "\n";
              }
            }
          std::size_t i = 0;
          while (i < input.size() && input[i] == a->max_input) input[i++] = 0;
          if (i == input.size()) break;
          ++input[i];
        }
        total += cases;
        disagree += bad;
        if (!json_out())
          out_ << name << ": " << cases << " cases, " << prov << " provable, "
               << bad << " disagreements\n";
      }
      if (!json_out())
        out_ << "total: " << total << " cases, " << disagree
             << " disagreements\n";
      if (resource) return 2;
      return disagree ? 1 : 0;
    };
  });
}

void Runner::setup_closure(CLI::App& app) {
  struct Args {
    std::vector<std::string> seeds;
    std::size_t max_size = 200000;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand(
      "closure", "Least fixed point of the one-step operator over premise closure");
  sub->add_option("sequents", a->seeds, "Seed sequents")->required();
  sub->add_option("--max-size", a->max_size, "Universe size limit");
  sub->callback([this, a] {
    action_ = [this, a] {
      std::vector<Sequent> seeds;
      for (const auto& s : a->seeds) seeds.push_back(parse_sequent(text_arg(s), parse_opts()));
      std::vector<Sequent> universe = premise_closure(seeds, a->max_size);
      std::size_t rounds = 0;
      SequentSet fix = closure_fixpoint(universe, &rounds);
      json rows = json::array();
      bool all = true;
      for (const auto& g : seeds) {
        bool in = fix.count(g) > 0;
        all = all && in;
        SearchResult r = decide(g, limits());
        bool agree = r.verdict == Verdict::ResourceExceeded ||
                     (r.verdict == Verdict::Provable) == in;
        if (!agree)
          throw std::logic_error("closure disagrees with decide on " + to_string(g));
        if (json_out())
          rows.push_back({{"sequent", to_string(g)}, {"provable", in}});
        else
          out_ << to_string(g) << ": " << (in ? "provable" : "unprovable") << "\n";
      }
      if (json_out())
        out_ << json{{"universe", universe.size()},
                     {"rounds", rounds},
                     {"derivable", fix.size()},
                     {"seeds", rows}}
                    .dump()
             << "\n";
      else
        out_ << "universe " << universe.size() << ", rounds " << rounds
             << ", derivable " << fix.size() << "\n";
      return all ? 0 : 1;
    };
  });
}

int Runner::demo_result(const std::string& name, const Proof& p) {
  CheckResult c = check_proof(p);
  if (json_out()) {
    json j = {{"demo", name},
              {"conclusion", to_string(p->conclusion)},
              {"nodes", proof_size(p)},
              {"valid", c.valid}};
    if (!c.valid) j["reason"] = c.reason;
    if (cfg_.proof) j["proof"] = proof_to_json(p);
    out_ << j.dump() << "\n";
  } else {
    out_ << name << ": " << to_string(p->conclusion) << " (" << proof_size(p)
         << " nodes)\n";
    report_check(c, "proof");
    if (cfg_.proof) out_ << proof_to_json(p).dump(2) << "\n";
  }
  return c.valid ? 0 : 1;
}

int Runner::demo_additive_units(const std::string& beta) {
  return demo_result("additive-units", additive_units_proof(parse_ordinal(beta)));
}

int Runner::demo_monotonicity(const std::string& from, const std::string& to,
                              const std::string& body, const std::string& var,
                              const std::string& eta) {
  Formula b = atom_to_var(parse_formula(body, parse_opts()), var);
  Kind k = eta == "nu" ? Kind::Nu : Kind::Mu;
  return demo_result("monotonicity",
                     monotonicity_proof(k, b, var, parse_ordinal(from),
                                        parse_ordinal(to)));
}

int Runner::demo_eta_functor(const std::string& formula,
                             const std::string& context,
                             const std::string& hole) {
  Formula f = parse_formula(formula, parse_opts());
  Proof eta = eta_expand_identity(f);
  int rc = demo_result("eta-expansion", eta);
  if (!context.empty()) {
    Formula ctx = atom_to_var(parse_formula(context, parse_opts()), hole);
    rc |= demo_result("functoriality", functoriality(ctx, hole, f, f, eta));
  }
  return rc;
}

int Runner::demo_rho_growth(unsigned max_k, unsigned max_gamma, unsigned max_n) {
  bool ok = true;
  json rows = json::array();
  if (!json_out()) out_ << "rank of R_1 at annotation k with x1 = g, against g*k\n";
  for (unsigned k = 0; k <= max_k; ++k)
    for (unsigned g = 1; g <= max_gamma; ++g) {
      Valuation s = Valuation::one();
      s.set("x1", Ordinal(g));
      Ordinal v = rank_val(rho_formula(1, Ordinal(k)), s);
      bool holds = v >= Ordinal(std::uint64_t{g} * k);
      ok = ok && holds;
      if (json_out())
        rows.push_back({{"k", k}, {"g", g}, {"rank", v.str()}, {"holds", holds}});
      else
        out_ << "  k=" << k << " g=" << g << ": " << v.str()
             << (holds ? " >= " : " < ") << g * k << "\n";
    }
  Ordinal cap = omega_pow(omega_pow(Ordinal::omega()));
  json ub = json::array();
  for (unsigned n = 0; n <= max_n; ++n) {
    Ordinal u = rank_upper_bound(rho_formula(n, Ordinal::omega()));
    bool holds = u < cap;
    ok = ok && holds;
    if (json_out())
      ub.push_back({{"n", n}, {"upper_bound", u.str()}, {"holds", holds}});
    else
      out_ << "upper bound of R_" << n << " at w: " << u.str()
           << (holds ? " < " : " >= ") << cap.str() << "\n";
  }
  if (json_out())
    out_ << json{{"demo", "rho-growth"}, {"lower", rows}, {"upper", ub}, {"ok", ok}}.dump()
         << "\n";
  else
    out_ << (ok ? "all bounds hold\n" : "a bound failed\n");
  return ok ? 0 : 1;
}

int Runner::demo_sigma01(std::uint64_t n, std::uint64_t k) {
  MinskyMachine even;
  for (auto& [name, m] : machine_suite())
    if (name == "even") even = m;
  DiffCase c;
  c.machines = {even};
  c.input = {n};
  c.k = k;
  c.gamma = {locked_zero()};
  DiffReport r = comp_provability_matches_reachability(c, limits());
  bool valid = true;
  if (r.provable) {
    FocusSearchResult f = focused_decide(r.sequent, limits());
    CheckResult fc = check_focus_proof(f.proof);
    CheckResult pc = check_proof(erase_focus(f.proof), {CheckMode::CutFree, {}});
    valid = fc.valid && pc.valid;
  }
  if (json_out()) {
    out_ << json{{"demo", "sigma01"},
                 {"n", n},
                 {"k", k},
                 {"sequent", to_string(r.sequent)},
                 {"verdict", verdict_name(r.verdict)},
                 {"halts", r.expected},
                 {"agree", r.agree()},
                 {"valid", valid}}
                .dump()
         << "\n";
  } else {
    out_ << "even machine on " << n << " within " << k << " steps\n"
         << to_string(r.sequent) << "\n"
         << "search: " << verdict_name(r.verdict)
         << ", simulation: " << (r.expected ? "halts with 0" : "does not halt")
         << (r.agree() ? " (agree)" : " (DISAGREE)") << "\n";
    if (r.provable) out_ << "proof: " << (valid ? "valid" : "invalid") << "\n";
  }
  if (!valid) return 1;
  if (r.verdict == Verdict::ResourceExceeded) return 2;
  return r.agree() ? 0 : 1;
}

void Runner::setup_demo(CLI::App& app) {
  struct Args {
    std::string name;
    std::string beta = "3";
    std::string from = "2";
    std::string to = "3";
    std::string body = "x + 1";
    std::string var = "x";
    std::string eta = "mu";
    std::string formula = "mu^2 x. (p * x) + ~q";
    std::string context;
    std::string hole = "z";
    unsigned max_k = 8, max_gamma = 5, max_n = 4;
    std::uint64_t n = 2, k = 6;
  };
  auto a = std::make_shared<Args>();
  auto* sub = app.add_subcommand("demo", "Example derivations and values");
  sub->add_option("name", a->name, "Demo name")
      ->required()
      ->check(CLI::IsMember(
          {"additive-units", "monotonicity", "eta-functor", "rho-growth", "sigma01"}));
  sub->add_option("--beta", a->beta, "additive-units: annotation");
  sub->add_option("--from", a->from, "monotonicity: smaller annotation");
  sub->add_option("--to", a->to, "monotonicity: larger annotation");
  sub->add_option("--body", a->body, "monotonicity: body with the bound variable free");
  sub->add_option("--var", a->var, "monotonicity: bound variable");
  sub->add_option("--eta", a->eta, "monotonicity: mu or nu")
      ->check(CLI::IsMember({"mu", "nu"}));
  sub->add_option("--formula", a->formula, "eta-functor: closed formula");
  sub->add_option("--context", a->context,
                  "eta-functor: context in which --hole is replaced");
  sub->add_option("--hole", a->hole, "eta-functor: hole of the context");
  sub->add_option("--max-k", a->max_k, "rho-growth: largest annotation");
  sub->add_option("--max-gamma", a->max_gamma, "rho-growth: largest value of x1");
  sub->add_option("--max-n", a->max_n, "rho-growth: largest n for the upper bound");
  sub->add_option("--n", a->n, "sigma01: input");
  sub->add_option("--k", a->k, "sigma01: annotation of Comp");
  sub->add_flag("--proof", cfg_.proof, "Print the constructed proof");
  sub->callback([this, a] {
    action_ = [this, a] {
      if (a->name == "additive-units") return demo_additive_units(a->beta);
      if (a->name == "monotonicity")
        return demo_monotonicity(a->from, a->to, a->body, a->var, a->eta);
      if (a->name == "eta-functor") return demo_eta_functor(a->formula, a->context, a->hole);
      if (a->name == "rho-growth")
        return demo_rho_growth(a->max_k, a->max_gamma, a->max_n);
      return demo_sigma01(a->n, a->k);
    };
  });
}

int Runner::main(const std::vector<std::string>& args) {
  CLI::App app{"Proof theory of linear logic with ordinal-indexed fixed points"};
  app.name("mumall");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha", cfg_.alpha, "Ambient ordinal for unannotated binders");
  app.add_option("--format", cfg_.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  setup_parse(app);
  setup_rank(app);
  setup_decide(app);
  setup_check(app);
  setup_transform(app);
  setup_minsky(app);
  setup_closure(app);
  setup_demo(app);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out_, err_);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    parse_ordinal(cfg_.alpha);
  } catch (const std::exception& e) {
    err_ << "error: bad --alpha: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action_) return kExitUsage;
  try {
    return action_();
  } catch (const ExactModeUnsupported& e) {
    err_ << "unsupported: " << e.what() << " (try rank-ub)\n";
    return 2;
  } catch (const UnsupportedProof& e) {
    err_ << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err_ << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err_ << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProofFormatError& e) {
    err_ << "bad proof file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err_ << "bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err_ << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return Runner(out, err).main(args);
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mumall
