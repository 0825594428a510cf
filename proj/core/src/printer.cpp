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

#include <string>

#include "hat/formula.hpp"

namespace hat {

namespace {

// Binding strength, loosest first.
enum Level { Binder = 0, Arrow = 1, Disj = 2, Conj = 3, Unary = 4 };

struct Printed {
  std::string text;
  int level;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

Printed print(const Formula& f);

std::string operand(const Formula& f, int min_level) {
  Printed p = print(f);
  if (p.level < min_level) return "(" + p.text + ")";
  return p.text;
}

std::optional<std::pair<std::string, std::string>> plus_args(const Formula& f,
                                                             std::string* pred) {
  if (!f.is(Formula::Kind::TransitiveClosure)) return std::nullopt;
  const auto& v = f.variables();
  const auto& body = f.body();
  if (v[0] != "v1" || v[1] != "v2" || !body.is(Formula::Kind::Atom) ||
      body.variables() != std::vector<std::string>{"v1", "v2"}) {
    return std::nullopt;
  }
  *pred = body.predicate();
  return std::pair{v[2], v[3]};
}

Printed print(const Formula& f) {
  using K = Formula::Kind;
  if (auto e = match_equivalence(f)) {
    return {operand(e->first, Disj) + " <-> " + operand(e->second, Arrow),
            Arrow};
  }
  if (auto a = match_forall(f)) {
    std::vector<std::string> vars{a->first};
    Formula body = a->second;
    while (auto inner = match_forall(body)) {
      vars.push_back(inner->first);
      body = inner->second;
    }
    return {"A " + join(vars) + ": " + print(body).text, Binder};
  }
  if (auto c = match_conjunction(f)) {
    return {operand(c->first, Conj) + " & " + operand(c->second, Unary), Conj};
  }
  switch (f.kind()) {
    case K::False:
      return {"0", Unary};
    case K::True:
      return {"1", Unary};
    case K::Atom:
      return {f.predicate() + "(" + join(f.variables()) + ")", Unary};
    case K::SetMember:
      return {f.variables()[0] + " in " + f.variables()[1], Unary};
    case K::Not:
      return {"!" + operand(f.body(), Unary), Unary};
    case K::Or: {
      std::string pred;
      auto args = plus_args(f.lhs(), &pred);
      const auto& r = f.rhs();
      if (args && r.is(K::Atom) && r.predicate() == "eq" &&
          r.variables() ==
              std::vector<std::string>{args->first, args->second}) {
        return {pred + "*(" + args->first + "," + args->second + ")", Unary};
      }
      // A negated left operand reads better as a conjunction or universal
      // than as the premise of an implication.
      auto i = match_implication(f);
      if (i && !match_conjunction(f.lhs()) && !match_forall(f.lhs())) {
        return {operand(i->first, Disj) + " -> " + operand(i->second, Arrow),
                Arrow};
      }
      return {operand(f.lhs(), Disj) + " | " + operand(f.rhs(), Conj), Disj};
    }
    case K::Exists: {
      std::vector<std::string> vars{f.bound_variable()};
      Formula body = f.body();
      while (body.is(K::Exists)) {
        vars.push_back(body.bound_variable());
        body = body.body();
      }
      return {"E " + join(vars) + ": " + print(body).text, Binder};
    }
    case K::TransitiveClosure: {
      std::string pred;
      if (auto args = plus_args(f, &pred)) {
        return {pred + "+(" + args->first + "," + args->second + ")", Unary};
      }
      const auto& v = f.variables();
      return {"TC(" + v[0] + "," + v[1] + "; " + print(f.body()).text + ")(" +
                  v[2] + "," + v[3] + ")",
              Unary};
    }
    case K::ExistsSets:
      return {"ES " + join(f.variables()) + ": " + print(f.body()).text,
              Binder};
  }
  return {"", Unary};
}

}  // namespace

std::string print_formula(const Formula& f) { return print(f).text; }

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << print_formula(f);
}

}  // namespace hat
