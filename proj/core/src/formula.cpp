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

#include "hat/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "hat/error.hpp"

namespace hat {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<std::string> vars;
  std::vector<Formula> children;
};

namespace {

const std::string kEmpty;

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(verum()) {}

Formula Formula::falsum() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::False, {}, {}, {}});
  return Formula(node);
}

Formula Formula::verum() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::True, {}, {}, {}});
  return Formula(node);
}

Formula Formula::atom(std::string predicate, std::vector<std::string> args) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::transitive_closure(std::string bound1, std::string bound2,
                                    Formula body, std::string arg1,
                                    std::string arg2) {
  if (bound1 == bound2) {
    throw FormulaError("TC binds the same variable twice");
  }
  return Formula(std::make_shared<const Node>(
      Node{Kind::TransitiveClosure,
           {},
           {std::move(bound1), std::move(bound2), std::move(arg1),
            std::move(arg2)},
           {std::move(body)}}));
}

Formula Formula::member(std::string var, std::string set_var) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::SetMember, {}, {std::move(var), std::move(set_var)}, {}}));
}

Formula Formula::exists_sets(std::vector<std::string> set_vars, Formula body) {
  if (set_vars.empty()) return body;
  return Formula(std::make_shared<const Node>(
      Node{Kind::ExistsSets, {}, std::move(set_vars), {std::move(body)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return negation(disjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) {
  return disjunction(negation(std::move(a)), std::move(b));
}

Formula Formula::equivalence(Formula a, Formula b) {
  return conjunction(implication(a, b), implication(b, a));
}

Formula Formula::forall(std::string var, Formula body) {
  return negation(exists(std::move(var), negation(std::move(body))));
}

Formula Formula::exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = exists(*it, std::move(body));
  }
  return body;
}

Formula Formula::forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = forall(*it, std::move(body));
  }
  return body;
}

Formula Formula::plus(std::string predicate, std::string a, std::string b) {
  return transitive_closure("v1", "v2",
                            atom(std::move(predicate), {"v1", "v2"}),
                            std::move(a), std::move(b));
}

Formula Formula::star(std::string predicate, std::string eq_symbol,
                      std::string a, std::string b) {
  auto tc = plus(std::move(predicate), a, b);
  return disjunction(std::move(tc),
                     atom(std::move(eq_symbol), {std::move(a), std::move(b)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::predicate() const {
  if (!is(Kind::Atom)) throw FormulaError("not an atom");
  return node_->name;
}

const std::vector<std::string>& Formula::variables() const {
  return node_->vars;
}

const std::string& Formula::bound_variable() const {
  if (!is(Kind::Exists)) throw FormulaError("not an existential");
  return node_->name;
}

const Formula& Formula::body() const {
  switch (kind()) {
    case Kind::Not:
    case Kind::Exists:
    case Kind::TransitiveClosure:
    case Kind::ExistsSets:
      return node_->children[0];
    default:
      throw FormulaError("formula has no body");
  }
}

const Formula& Formula::lhs() const {
  if (!is(Kind::Or)) throw FormulaError("not a disjunction");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (!is(Kind::Or)) throw FormulaError("not a disjunction");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.vars == y.vars &&
         x.children == y.children;
}

Formula conjoin(std::span<const Formula> items) {
  std::optional<Formula> acc;
  for (const auto& f : items) {
    if (f.is(Formula::Kind::True)) continue;
    acc = acc ? Formula::conjunction(*acc, f) : f;
  }
  return acc ? *acc : Formula::verum();
}

Formula disjoin(std::span<const Formula> items) {
  std::optional<Formula> acc;
  for (const auto& f : items) {
    if (f.is(Formula::Kind::False)) continue;
    acc = acc ? Formula::disjunction(*acc, f) : f;
  }
  return acc ? *acc : Formula::falsum();
}

std::optional<std::pair<Formula, Formula>> match_conjunction(const Formula& f) {
  if (!f.is(Formula::Kind::Not)) return std::nullopt;
  const auto& d = f.body();
  if (!d.is(Formula::Kind::Or) || !d.lhs().is(Formula::Kind::Not) ||
      !d.rhs().is(Formula::Kind::Not)) {
    return std::nullopt;
  }
  return std::pair{d.lhs().body(), d.rhs().body()};
}

std::optional<std::pair<Formula, Formula>> match_implication(const Formula& f) {
  if (!f.is(Formula::Kind::Or) || !f.lhs().is(Formula::Kind::Not)) {
    return std::nullopt;
  }
  return std::pair{f.lhs().body(), f.rhs()};
}

std::optional<std::pair<Formula, Formula>> match_equivalence(const Formula& f) {
  auto c = match_conjunction(f);
  if (!c) return std::nullopt;
  auto l = match_implication(c->first);
  auto r = match_implication(c->second);
  if (!l || !r || !(l->first == r->second) || !(l->second == r->first)) {
    return std::nullopt;
  }
  return l;
}

std::optional<std::pair<std::string, Formula>> match_forall(const Formula& f) {
  if (!f.is(Formula::Kind::Not)) return std::nullopt;
  const auto& e = f.body();
  if (!e.is(Formula::Kind::Exists) || !e.body().is(Formula::Kind::Not)) {
    return std::nullopt;
  }
  return std::pair{e.bound_variable(), e.body().body()};
}

namespace {

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (auto c = match_conjunction(f)) {
    collect_conjuncts(c->first, out);
    collect_conjuncts(c->second, out);
  } else {
    out.push_back(f);
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out, bool sets) {
  using K = Formula::Kind;
  auto add = [&](const std::string& v) {
    if (!bound.count(v)) out.insert(v);
  };
  switch (f.kind()) {
    case K::False:
    case K::True:
      return;
    case K::Atom:
      if (!sets) {
        for (const auto& v : f.variables()) add(v);
      }
      return;
    case K::Not:
      collect_free(f.body(), bound, out, sets);
      return;
    case K::Or:
      collect_free(f.lhs(), bound, out, sets);
      collect_free(f.rhs(), bound, out, sets);
      return;
    case K::Exists: {
      if (sets) {
        collect_free(f.body(), bound, out, sets);
        return;
      }
      bool fresh = bound.insert(f.bound_variable()).second;
      collect_free(f.body(), bound, out, sets);
      if (fresh) bound.erase(f.bound_variable());
      return;
    }
    case K::TransitiveClosure: {
      const auto& v = f.variables();
      if (sets) {
        collect_free(f.body(), bound, out, sets);
        return;
      }
      add(v[2]);
      add(v[3]);
      std::vector<std::string> added;
      for (int i = 0; i < 2; ++i) {
        if (bound.insert(v[i]).second) added.push_back(v[i]);
      }
      collect_free(f.body(), bound, out, sets);
      for (const auto& a : added) bound.erase(a);
      return;
    }
    case K::SetMember:
      add(f.variables()[sets ? 1 : 0]);
      return;
    case K::ExistsSets: {
      if (!sets) {
        collect_free(f.body(), bound, out, sets);
        return;
      }
      std::vector<std::string> added;
      for (const auto& s : f.variables()) {
        if (bound.insert(s).second) added.push_back(s);
      }
      collect_free(f.body(), bound, out, sets);
      for (const auto& a : added) bound.erase(a);
      return;
    }
  }
}

template <typename Pred>
bool any_node(const Formula& f, Pred pred) {
  if (pred(f)) return true;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not:
    case K::Exists:
    case K::TransitiveClosure:
    case K::ExistsSets:
      return any_node(f.body(), pred);
    case K::Or:
      return any_node(f.lhs(), pred) || any_node(f.rhs(), pred);
    default:
      return false;
  }
}

void collect_all_variables(const Formula& f, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      out.insert(f.variables().begin(), f.variables().end());
      return;
    case K::SetMember:
      out.insert(f.variables()[0]);
      return;
    case K::TransitiveClosure:
      out.insert(f.variables().begin(), f.variables().end());
      collect_all_variables(f.body(), out);
      return;
    case K::Exists:
      out.insert(f.bound_variable());
      collect_all_variables(f.body(), out);
      return;
    case K::Not:
    case K::ExistsSets:
      collect_all_variables(f.body(), out);
      return;
    case K::Or:
      collect_all_variables(f.lhs(), out);
      collect_all_variables(f.rhs(), out);
      return;
    default:
      return;
  }
}

std::string fresh_variable(const Formula& f,
                           std::initializer_list<std::string> avoid) {
  std::set<std::string> used(avoid);
  collect_all_variables(f, used);
  for (std::size_t k = 1;; ++k) {
    std::string name = "v" + std::to_string(k);
    if (!used.count(name)) return name;
  }
}

}  // namespace

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  collect_conjuncts(f, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out, false);
  return out;
}

std::set<std::string> free_set_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out, true);
  return out;
}

bool is_closed(const Formula& f) {
  return free_variables(f).empty() && free_set_variables(f).empty();
}

bool uses_sets(const Formula& f) {
  return any_node(f, [](const Formula& g) {
    return g.is(Formula::Kind::SetMember) || g.is(Formula::Kind::ExistsSets);
  });
}

bool contains_transitive_closure(const Formula& f) {
  return any_node(
      f, [](const Formula& g) { return g.is(Formula::Kind::TransitiveClosure); });
}

std::size_t formula_size(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Not:
    case K::Exists:
    case K::TransitiveClosure:
    case K::ExistsSets:
      return 1 + formula_size(f.body());
    case K::Or:
      return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    default:
      return 1;
  }
}

Formula rename_free_variable(const Formula& f, const std::string& from,
                             const std::string& to) {
  if (from == to) return f;
  using K = Formula::Kind;
  auto swap = [&](const std::string& v) { return v == from ? to : v; };
  switch (f.kind()) {
    case K::False:
    case K::True:
      return f;
    case K::Atom: {
      auto args = f.variables();
      std::transform(args.begin(), args.end(), args.begin(), swap);
      return Formula::atom(f.predicate(), std::move(args));
    }
    case K::SetMember:
      return Formula::member(swap(f.variables()[0]), f.variables()[1]);
    case K::Not:
      return Formula::negation(rename_free_variable(f.body(), from, to));
    case K::Or:
      return Formula::disjunction(rename_free_variable(f.lhs(), from, to),
                                  rename_free_variable(f.rhs(), from, to));
    case K::ExistsSets:
      return Formula::exists_sets(f.variables(),
                                  rename_free_variable(f.body(), from, to));
    case K::Exists: {
      const auto& v = f.bound_variable();
      if (v == from) return f;
      if (v == to && free_variables(f.body()).count(from)) {
        auto fresh = fresh_variable(f.body(), {to, from});
        auto body = rename_free_variable(f.body(), v, fresh);
        return Formula::exists(fresh, rename_free_variable(body, from, to));
      }
      return Formula::exists(v, rename_free_variable(f.body(), from, to));
    }
    case K::TransitiveClosure: {
      auto vars = f.variables();
      Formula body = f.body();
      if (vars[0] != from && vars[1] != from) {
        if ((vars[0] == to || vars[1] == to) &&
            free_variables(body).count(from)) {
          for (int i = 0; i < 2; ++i) {
            if (vars[i] != to) continue;
            auto fresh = fresh_variable(body, {to, from, vars[1 - i]});
            body = rename_free_variable(body, vars[i], fresh);
            vars[i] = fresh;
          }
        }
        body = rename_free_variable(body, from, to);
      }
      return Formula::transitive_closure(vars[0], vars[1], body, swap(vars[2]),
                                         swap(vars[3]));
    }
  }
  return f;
}

}  // namespace hat
