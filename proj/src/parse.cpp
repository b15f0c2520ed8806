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

#include <cctype>

#include "mumall/syntax.hpp"

namespace mumall {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view s, const ParseOptions& o) : s_(s), opts_(o) {}

  Sequent sequent() {
    std::vector<Formula> left, right;
    skip();
    if (!at_arrow() && pos_ < s_.size()) list(right);
    if (at_arrow()) {
      pos_ += 2;
      left.swap(right);
      skip();
      if (pos_ < s_.size()) list(right);
      for (auto& f : left) right.push_back(negate(f));
    }
    end();
    return Sequent(std::move(right));
  }

  Formula formula() {
    Formula f = plus();
    end();
    return f;
  }

  Annotation standalone_annotation() {
    skip();
    if (pos_ < s_.size() && ident_start(s_[pos_])) {
      std::size_t save = pos_;
      std::string id = ident();
      if (id != "w") {
        end();
        return Annotation::variable(id);
      }
      pos_ = save;
    }
    Annotation a = check(ordinal(false));
    end();
    return a;
  }

 private:
  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_arrow() {
    skip();
    return s_.substr(pos_, 2) == "=>";
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
  }

  void list(std::vector<Formula>& out) {
    out.push_back(plus());
    while (at(',')) {
      ++pos_;
      out.push_back(plus());
    }
  }

  std::string ident() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    std::size_t b = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Formula plus() {
    Formula a = with();
    if (at('+')) {
      ++pos_;
      return Formula::plus(a, plus());
    }
    return a;
  }
  Formula with() {
    Formula a = par();
    if (at('&')) {
      ++pos_;
      return Formula::with(a, with());
    }
    return a;
  }
  Formula par() {
    Formula a = tensor();
    if (at('|')) {
      ++pos_;
      return Formula::par(a, par());
    }
    return a;
  }
  Formula tensor() {
    Formula a = unary();
    if (at('*')) {
      ++pos_;
      return Formula::tensor(a, tensor());
    }
    return a;
  }
  Formula unary() {
    if (at('~')) {
      ++pos_;
      return negate(unary());
    }
    return primary();
  }

  Annotation annotation() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Ordinal o = ordinal(false);
      expect(')');
      return check(o);
    }
    if (pos_ < s_.size() && ident_start(s_[pos_])) {
      std::size_t save = pos_;
      std::string id = ident();
      if (id != "w") return Annotation::variable(id);
      pos_ = save;
    }
    return check(ordinal(true));
  }

  Ordinal ordinal(bool single) {
    try {
      return parse_ordinal_at(s_, pos_, single);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  Annotation check(const Ordinal& o) {
    if (opts_.check_alpha && o > opts_.alpha)
      fail("annotation " + o.str() + " exceeds the closure ordinal " +
           opts_.alpha.str());
    return Annotation(o);
  }

  Formula primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = plus();
      expect(')');
      return f;
    }
    if (c == '$') {
      ++pos_;
      return Formula::var(ident());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("unknown unit");
      if (c == '1') return Formula::one();
      if (c == '0') return Formula::zero();
      --pos_;
      fail("unknown unit");
    }
    std::string id = ident();
    if (id == "T" || id == "top") return Formula::top();
    if (id == "bot") return Formula::bot();
    if (id == "mu" || id == "nu") {
      Annotation ann(opts_.alpha);
      if (at('^')) {
        ++pos_;
        ann = annotation();
      }
      std::string x = ident();
      expect('.');
      scope_.push_back(x);
      Formula body = plus();
      scope_.pop_back();
      return Formula::fix(id == "mu" ? Kind::Mu : Kind::Nu, ann, x, body);
    }
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i] == id)
        return Formula::bound(static_cast<std::uint32_t>(scope_.size() - 1 - i));
    return Formula::atom(id);
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).formula();
}

Sequent parse_sequent(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).sequent();
}

Annotation parse_annotation(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).standalone_annotation();
}

}  // namespace mumall
