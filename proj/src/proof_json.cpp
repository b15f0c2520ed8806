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

#include "mumall/json_io.hpp"

namespace mumall {

using nlohmann::json;

namespace {

json sequent_json(const Sequent& s) {
  json a = json::array();
  for (const auto& f : s) a.push_back(to_string(f));
  return a;
}

json constraint_json(const Constraint& c) {
  return c.lhs.str() + (c.strict ? " < " : " <= ") + c.rhs.str();
}

class Loader {
 public:
  explicit Loader(const ParseOptions& opts) : opts_(opts) {
    opts_.check_alpha = false;
  }

  Proof proof(const json& j) {
    if (!j.is_object()) throw ProofFormatError("proof node must be an object");
    auto [conclusion, order] = sequent(field(j, "sequent"));
    ProofNode n;
    n.conclusion = conclusion;
    std::string rname = string(field(j, "rule"), "rule");
    if (!rule_from_name(rname, &n.rule))
      throw ProofFormatError("unknown rule '" + rname + "'");
    bool have_split = false;
    if (j.contains("params")) {
      const json& p = j["params"];
      if (!p.is_object()) throw ProofFormatError("params must be an object");
      if (p.contains("principal")) n.principal = index(p["principal"], order);
      if (p.contains("side")) n.side = integer(p["side"], "side");
      if (p.contains("gamma"))
        n.gamma = annotation(string(p["gamma"], "gamma"));
      if (p.contains("var")) n.var = string(p["var"], "var");
      if (p.contains("cut")) n.cut = formula(string(p["cut"], "cut"));
      if (p.contains("split")) {
        const json& s = p["split"];
        if (!s.is_array()) throw ProofFormatError("split must be an array");
        for (const auto& part : s) {
          if (!part.is_array())
            throw ProofFormatError("split entries must be arrays");
          std::vector<int> v;
          for (const auto& i : part) v.push_back(index(i, order));
          n.split.push_back(std::move(v));
        }
        have_split = true;
      }
    }
    if (j.contains("premises")) {
      const json& ps = j["premises"];
      if (!ps.is_array()) throw ProofFormatError("premises must be an array");
      for (const auto& q : ps) {
        if (q.is_object() && q.contains("schematic")) {
          if (ps.size() != 1)
            throw ProofFormatError("a schematic premise must be the only one");
          n.schematic = schematic(q["schematic"]);
        } else {
          n.premises.push_back(proof(q));
        }
      }
    }
    if ((n.rule == Rule::Tensor || n.rule == Rule::Cut) && !have_split &&
        n.premises.size() == 2)
      return with_split(n);
    return std::make_shared<const ProofNode>(std::move(n));
  }

  FocusProof focus(const json& j) {
    if (!j.is_object()) throw ProofFormatError("proof node must be an object");
    auto n = std::make_shared<FocusNode>();
    n->context = sequent(field(j, "sequent")).first;
    if (j.contains("focus")) {
      n->down = true;
      n->focus = formula(string(j["focus"], "focus"));
    } else {
      const json& z = field(j, "zone");
      if (!z.is_array()) throw ProofFormatError("zone must be an array");
      for (const auto& f : z) n->zone.push_back(formula(string(f, "zone")));
    }
    std::string rname = string(field(j, "rule"), "rule");
    if (!frule_from_name(rname, &n->rule))
      throw ProofFormatError("unknown focussed rule '" + rname + "'");
    if (j.contains("params")) {
      const json& p = j["params"];
      if (p.contains("side")) n->side = integer(p["side"], "side");
      if (p.contains("gamma"))
        n->gamma = annotation(string(p["gamma"], "gamma"));
    }
    if (j.contains("premises"))
      for (const auto& q : j["premises"]) n->premises.push_back(focus(q));
    return n;
  }

 private:
  ParseOptions opts_;

  static const json& field(const json& j, const char* key) {
    if (!j.contains(key))
      throw ProofFormatError(std::string("missing key '") + key + "'");
    return j[key];
  }

  static std::string string(const json& j, const char* what) {
    if (!j.is_string())
      throw ProofFormatError(std::string(what) + " must be a string");
    return j.get<std::string>();
  }

  static int integer(const json& j, const char* what) {
    if (!j.is_number_integer())
      throw ProofFormatError(std::string(what) + " must be an integer");
    return j.get<int>();
  }

  static int index(const json& j, const std::vector<int>& order) {
    int i = integer(j, "index");
    if (i < 0 || static_cast<std::size_t>(i) >= order.size())
      throw ProofFormatError("index " + std::to_string(i) + " out of range");
    return order[static_cast<std::size_t>(i)];
  }

  Formula formula(const std::string& s) {
    try {
      return parse_formula(s, opts_);
    } catch (const ParseError& e) {
      throw ProofFormatError("bad formula '" + s + "': " + e.what());
    }
  }

  Annotation annotation(const std::string& s) {
    try {
      return parse_annotation(s, opts_);
    } catch (const ParseError& e) {
      throw ProofFormatError("bad annotation '" + s + "': " + e.what());
    }
  }

  // The sorted sequent and, per array position, its index in sorted order.
  std::pair<Sequent, std::vector<int>> sequent(const json& j) {
    if (!j.is_array()) throw ProofFormatError("sequent must be an array");
    std::vector<Formula> fs;
    for (const auto& f : j) fs.push_back(formula(string(f, "formula")));
    Sequent s(fs);
    std::vector<bool> used(s.size(), false);
    std::vector<int> order;
    for (const auto& f : fs) {
      auto k = static_cast<std::size_t>(s.find(f));
      while (used[k]) ++k;
      used[k] = true;
      order.push_back(static_cast<int>(k));
    }
    return {s, order};
  }

  std::shared_ptr<const Schematic> schematic(const json& j) {
    if (!j.is_object()) throw ProofFormatError("schematic must be an object");
    auto s = std::make_shared<Schematic>();
    s->var = string(field(j, "var"), "var");
    s->bound = annotation(string(field(j, "bound"), "bound"));
    s->constraints.push_back({Annotation::variable(s->var), s->bound, true});
    if (j.contains("constraints"))
      for (const auto& c : j["constraints"]) {
        std::string t = string(c, "constraint");
        bool strict = true;
        auto k = t.find("<=");
        std::size_t len = 2;
        if (k == std::string::npos) {
          k = t.find('<');
          len = 1;
        } else {
          strict = false;
        }
        if (k == std::string::npos)
          throw ProofFormatError("bad constraint '" + t + "'");
        s->constraints.push_back({annotation(t.substr(0, k)),
                                  annotation(t.substr(k + len)), strict});
      }
    s->body = proof(field(j, "body"));
    return s;
  }

  static Proof with_split(const ProofNode& n) {
    if (n.rule == Rule::Cut) {
      try {
        return rebuild(n, n.conclusion, Formula(), n.premises);
      } catch (const DomainError&) {
        return std::make_shared<const ProofNode>(n);
      }
    }
    for (std::size_t i = 0; i < n.conclusion.size(); ++i) {
      if (n.principal >= 0 && static_cast<std::size_t>(n.principal) != i)
        continue;
      const Formula& f = n.conclusion[i];
      if (f.kind() != Kind::Tensor) continue;
      try {
        return rebuild(n, n.conclusion, f, n.premises);
      } catch (const DomainError&) {
      }
    }
    return std::make_shared<const ProofNode>(n);
  }
};

}  // namespace

json proof_to_json(const Proof& p) {
  const ProofNode& n = *p;
  json j;
  j["sequent"] = sequent_json(n.conclusion);
  j["rule"] = rule_name(n.rule);
  json params = json::object();
  if (n.principal >= 0) params["principal"] = n.principal;
  if (n.rule == Rule::Plus) params["side"] = n.side;
  if (n.rule == Rule::Mu || n.rule == Rule::Ind || n.rule == Rule::Ih)
    params["gamma"] = n.gamma.str();
  if (n.rule == Rule::Ind || n.rule == Rule::Ih) params["var"] = n.var;
  if (!n.split.empty()) params["split"] = n.split;
  if (n.cut) params["cut"] = to_string(n.cut);
  if (!params.empty()) j["params"] = params;
  json prems = json::array();
  for (const auto& q : n.premises) prems.push_back(proof_to_json(q));
  if (n.schematic) {
    const Schematic& s = *n.schematic;
    json sj;
    sj["var"] = s.var;
    sj["bound"] = s.bound.str();
    json cs = json::array();
    for (std::size_t k = 1; k < s.constraints.size(); ++k)
      cs.push_back(constraint_json(s.constraints[k]));
    if (!cs.empty()) sj["constraints"] = cs;
    sj["body"] = proof_to_json(s.body);
    prems.push_back(json{{"schematic", sj}});
  }
  j["premises"] = prems;
  return j;
}

Proof proof_from_json(const json& j, const ParseOptions& opts) {
  return Loader(opts).proof(j);
}

json focus_proof_to_json(const FocusProof& p) {
  const FocusNode& n = *p;
  json j;
  j["sequent"] = sequent_json(n.context);
  if (n.down) {
    j["focus"] = to_string(n.focus);
  } else {
    json z = json::array();
    for (const auto& f : n.zone) z.push_back(to_string(f));
    j["zone"] = z;
  }
  j["rule"] = frule_name(n.rule);
  json params = json::object();
  if (n.rule == FRule::Plus) params["side"] = n.side;
  if (n.rule == FRule::Mu) params["gamma"] = n.gamma.str();
  if (!params.empty()) j["params"] = params;
  json prems = json::array();
  for (const auto& q : n.premises) prems.push_back(focus_proof_to_json(q));
  j["premises"] = prems;
  return j;
}

FocusProof focus_proof_from_json(const json& j, const ParseOptions& opts) {
  return Loader(opts).focus(j);
}

bool is_focus_json(const json& j) {
  return j.is_object() && (j.contains("zone") || j.contains("focus"));
}

}  // namespace mumall
