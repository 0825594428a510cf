// Copyright 2026 The hat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hat/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "hat/error.hpp"

namespace hat {

namespace {

enum class Tok {
  End,
  Ident,
  SetVar,
  Zero,
  One,
  Bang,
  Amp,
  Bar,
  Arrow,
  DoubleArrow,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  Plus,
  Star,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& voc,
         const ParseOptions& options)
      : text_(text), voc_(voc), options_(options) {
    tokenize();
  }

  Formula parse() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message,
                         ParseError::Code code = ParseError::Code::Syntax,
                         std::optional<std::size_t> at = std::nullopt) const {
    std::size_t offset = at ? *at : peek().offset;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(code, message, offset, line, column);
  }

  void tokenize() {
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t start, std::size_t len) {
      tokens_.push_back({k, std::string(text_.substr(start, len)), start});
      i = start + len;
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') ++i;
        continue;
      }
      auto ident_end = [&](std::size_t j) {
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                text_[j] == '_')) {
          ++j;
        }
        return j;
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        push(Tok::Ident, i, ident_end(i) - i);
        continue;
      }
      if (c == '$') {
        std::size_t j = ident_end(i + 1);
        if (j == i + 1 ||
            std::isdigit(static_cast<unsigned char>(text_[i + 1]))) {
          fail_at(i, "malformed set variable");
        }
        push(Tok::SetVar, i, j - i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[j]))) {
          ++j;
        }
        auto num = text_.substr(i, j - i);
        if (num == "0") {
          push(Tok::Zero, i, 1);
        } else if (num == "1") {
          push(Tok::One, i, 1);
        } else {
          fail_at(i, "unexpected number '" + std::string(num) + "'");
        }
        continue;
      }
      if (text_.compare(i, 3, "<->") == 0) {
        push(Tok::DoubleArrow, i, 3);
        continue;
      }
      if (text_.compare(i, 2, "->") == 0) {
        push(Tok::Arrow, i, 2);
        continue;
      }
      Tok k;
      switch (c) {
        case '!': k = Tok::Bang; break;
        case '&': k = Tok::Amp; break;
        case '|': k = Tok::Bar; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case ';': k = Tok::Semi; break;
        case ':': k = Tok::Colon; break;
        case '+': k = Tok::Plus; break;
        case '*': k = Tok::Star; break;
        default:
          fail_at(i, std::string("unexpected character '") + c + "'");
      }
      push(k, i, 1);
    }
    tokens_.push_back({Tok::End, "end of input", text_.size()});
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) {
    tokens_.push_back({Tok::End, "", offset});
    pos_ = tokens_.size() - 1;
    fail(message, ParseError::Code::Syntax, offset);
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_keyword(std::string_view word, std::size_t ahead = 0) const {
    return at(Tok::Ident, ahead) && peek(ahead).text == word;
  }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    }
    return take();
  }

  std::string variable() {
    if (!at(Tok::Ident)) {
      fail("expected variable, found '" + peek().text + "'");
    }
    if (is_reserved_word(peek().text)) {
      fail("reserved word '" + peek().text + "' used as variable");
    }
    return take().text;
  }

  void require_sets(const Token& tok) const {
    if (!options_.allow_sets) {
      fail("set variables are not allowed here", ParseError::Code::SetOutsideNp,
           tok.offset);
    }
  }

  Formula formula() {
    if (at_keyword("E") || at_keyword("A")) {
      bool universal = take().text == "A";
      std::vector<std::string> vars{variable()};
      while (at(Tok::Comma)) {
        take();
        vars.push_back(variable());
      }
      expect(Tok::Colon, "':'");
      Formula body = formula();
      return universal ? Formula::forall(vars, std::move(body))
                       : Formula::exists(vars, std::move(body));
    }
    if (at_keyword("ES")) {
      require_sets(take());
      std::vector<std::string> sets;
      do {
        if (!sets.empty()) take();
        sets.push_back(expect(Tok::SetVar, "set variable").text);
      } while (at(Tok::Comma));
      expect(Tok::Colon, "':'");
      return Formula::exists_sets(std::move(sets), formula());
    }
    Formula lhs = disjunction();
    if (at(Tok::Arrow)) {
      take();
      return Formula::implication(std::move(lhs), formula());
    }
    if (at(Tok::DoubleArrow)) {
      take();
      return Formula::equivalence(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(Tok::Bar)) {
      take();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at(Tok::Amp)) {
      take();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  // Binders in operand position take the rest of the input.
  Formula unary() {
    if (at(Tok::Bang)) {
      take();
      return Formula::negation(unary());
    }
    if (at_keyword("E") || at_keyword("A") || at_keyword("ES")) {
      return formula();
    }
    return primary();
  }

  std::pair<std::string, std::string> pair_args() {
    expect(Tok::LParen, "'('");
    auto a = variable();
    expect(Tok::Comma, "','");
    auto b = variable();
    expect(Tok::RParen, "')'");
    return {a, b};
  }

  PredicateId predicate(const Token& tok) const {
    auto id = voc_.find(tok.text);
    if (!id) {
      fail("unknown predicate '" + tok.text + "'",
           ParseError::Code::UnknownPredicate, tok.offset);
    }
    return *id;
  }

  void check_arity(const Token& tok, PredicateId id, std::size_t n) const {
    if (voc_[id].arity != n) {
      fail("predicate '" + tok.text + "' has arity " +
               std::to_string(voc_[id].arity) + ", given " + std::to_string(n),
           ParseError::Code::ArityMismatch, tok.offset);
    }
  }

  Formula primary() {
    if (at(Tok::Zero)) {
      take();
      return Formula::falsum();
    }
    if (at(Tok::One)) {
      take();
      return Formula::verum();
    }
    if (at(Tok::LParen)) {
      take();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_keyword("TC") && at(Tok::LParen, 1)) {
      take();
      take();
      auto b1 = variable();
      expect(Tok::Comma, "','");
      auto b2 = variable();
      if (b1 == b2) fail("TC binds '" + b1 + "' twice");
      expect(Tok::Semi, "';'");
      Formula body = formula();
      expect(Tok::RParen, "')'");
      auto [a1, a2] = pair_args();
      return Formula::transitive_closure(b1, b2, std::move(body), a1, a2);
    }
    if (!at(Tok::Ident)) {
      fail("expected formula, found '" + peek().text + "'");
    }
    Token name = peek();
    if (at_keyword("in", 1)) {
      auto var = variable();
      take();
      if (!at(Tok::SetVar)) fail("expected set variable after 'in'");
      Token set = take();
      require_sets(set);
      return Formula::member(var, set.text);
    }
    if (is_reserved_word(name.text)) {
      fail("unexpected '" + name.text + "'");
    }
    take();
    if (at(Tok::Plus) || at(Tok::Star)) {
      bool star = take().kind == Tok::Star;
      auto id = predicate(name);
      check_arity(name, id, 2);
      auto [a, b] = pair_args();
      return star ? Formula::star(name.text, voc_.eq_symbol(), a, b)
                  : Formula::plus(name.text, a, b);
    }
    auto id = predicate(name);
    std::vector<std::string> args;
    if (at(Tok::LParen)) {
      take();
      if (!at(Tok::RParen)) {
        args.push_back(variable());
        while (at(Tok::Comma)) {
          take();
          args.push_back(variable());
        }
      }
      expect(Tok::RParen, "')'");
    } else if (voc_[id].arity != 0) {
      fail("expected '(' after predicate '" + name.text + "'");
    }
    check_arity(name, id, args.size());
    return Formula::atom(name.text, std::move(args));
  }

  std::string_view text_;
  const Vocabulary& voc_;
  ParseOptions options_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& voc,
                      const ParseOptions& options) {
  return Parser(text, voc, options).parse();
}

}  // namespace hat
