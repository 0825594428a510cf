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

#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hat {

/// Immutable AST for first-order logic with transitive closure, extended
/// with monadic set membership and existential set quantifiers.
///
/// Only the core constructors are represented; conjunction, implication,
/// equivalence, universal quantification and the closure shorthands are
/// built from them by the static helpers below, exactly as their
/// textbook definitions read:
///
///   a & b    := !(!a | !b)
///   a -> b   := !a | b
///   a <-> b  := (a -> b) & (b -> a)
///   A v: f   := !(E v: !f)
///   p+(a,b)  := TC(v1,v2; p(v1,v2))(a,b)
///   p*(a,b)  := p+(a,b) | eq(a,b)
///
/// Copies share structure; values never change after construction.
class Formula {
 public:
  enum class Kind {
    False,
    True,
    Atom,
    Not,
    Or,
    Exists,
    TransitiveClosure,
    SetMember,
    ExistsSets,
  };

  /// The constant 1.
  Formula();

  static Formula falsum();
  static Formula verum();
  static Formula atom(std::string predicate, std::vector<std::string> args);
  static Formula negation(Formula f);
  static Formula disjunction(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  /// TC(bound1,bound2; body)(arg1,arg2).
  static Formula transitive_closure(std::string bound1, std::string bound2,
                                    Formula body, std::string arg1,
                                    std::string arg2);
  static Formula member(std::string var, std::string set_var);
  static Formula exists_sets(std::vector<std::string> set_vars, Formula body);

  static Formula conjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  /// Nested quantifiers, outermost first.
  static Formula exists(const std::vector<std::string>& vars, Formula body);
  static Formula forall(const std::vector<std::string>& vars, Formula body);
  static Formula plus(std::string predicate, std::string a, std::string b);
  static Formula star(std::string predicate, std::string eq_symbol,
                      std::string a, std::string b);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  /// Atom predicate name.
  const std::string& predicate() const;
  /// Atom arguments; TC: {bound1, bound2, arg1, arg2}; SetMember:
  /// {var, set}; ExistsSets: the bound set variables.
  const std::vector<std::string>& variables() const;
  /// Exists: the bound variable.
  const std::string& bound_variable() const;
  /// Not/Exists/TC/ExistsSets: the single child.
  const Formula& body() const;
  /// Or operands.
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Conjunction of all items, left-nested; literal 1 items are dropped and the
/// empty conjunction is 1.
Formula conjoin(std::span<const Formula> items);
/// Disjunction of all items, left-nested; literal 0 items are dropped and the
/// empty disjunction is 0.
Formula disjoin(std::span<const Formula> items);

// Sugar recognizers. Each inverts exactly the expansion of the matching
// static helper on Formula.
std::optional<std::pair<Formula, Formula>> match_conjunction(const Formula& f);
std::optional<std::pair<Formula, Formula>> match_implication(const Formula& f);
std::optional<std::pair<Formula, Formula>> match_equivalence(const Formula& f);
/// Returns (variable, body) for !(E v: !body).
std::optional<std::pair<std::string, Formula>> match_forall(const Formula& f);

/// Top-level conjuncts, flattening nested conjunctions.
std::vector<Formula> conjuncts(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_set_variables(const Formula& f);
bool is_closed(const Formula& f);
bool uses_sets(const Formula& f);
bool contains_transitive_closure(const Formula& f);
/// Number of AST nodes.
std::size_t formula_size(const Formula& f);

/// Replaces free occurrences of first-order variable `from` by `to`,
/// renaming bound variables that would capture `to`.
Formula rename_free_variable(const Formula& f, const std::string& from,
                             const std::string& to);

/// Canonical surface syntax; reparses to a structurally equal AST.
std::string print_formula(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace hat
