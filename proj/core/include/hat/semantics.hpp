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

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hat/formula.hpp"
#include "hat/structure.hpp"

namespace hat {

/// Maps free first-order variables to nodes and free set variables to node
/// subsets.
struct Assignment {
  std::map<std::string, std::size_t> nodes;
  std::map<std::string, std::set<std::size_t>> sets;

  Assignment& bind(std::string var, std::size_t node) {
    nodes[std::move(var)] = node;
    return *this;
  }
};

/// A formula resolved against a vocabulary: predicates become ids and
/// variables become slots. Reusable across structures over that vocabulary.
///
/// Evaluation is Kleene's: negation swaps 0 and 1, disjunction and
/// existential quantification take the maximum under 0 < 1/2 < 1, and
/// TC(v1,v2; f)(a,b) is the maximum over node paths a = u1, ..., um = b
/// (m >= 2) of the minimum of f over consecutive pairs, computed as a
/// max/min Floyd-Warshall closure. On 2-valued structures this is the
/// Tarskian semantics.
///
/// Set quantifiers are decided by a search that fixes memberships node by
/// node and evaluates the body with undecided memberships as 1/2; a 0 prunes
/// the branch and a 1 accepts it. Universes for set formulas are limited to
/// 64 nodes.
class CompiledFormula {
 public:
  /// Throws FormulaError on unknown predicates or arity mismatches.
  CompiledFormula(const Formula& f, const Vocabulary& voc);
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  const Formula& formula() const noexcept;
  const Vocabulary& vocabulary() const noexcept;
  bool uses_sets() const noexcept;

  /// Throws FormulaError if the assignment is incomplete, names nodes
  /// outside the universe, or a set variable is unbound, or if the
  /// structure's vocabulary differs from the compiled one.
  TruthValue evaluate(const StructureBase& s, const Assignment& z = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Tarskian satisfaction S, Z |= f. f must be set-free.
bool eval2(const TwoValuedStructure& s, const Formula& f,
           const Assignment& z = {});
bool eval2(const TwoValuedStructure& s, const CompiledFormula& f,
           const Assignment& z = {});

/// Kleene (compositional) 3-valued value. f must be set-free.
TruthValue eval3(const ThreeValuedStructure& s, const Formula& f,
                 const Assignment& z = {});
TruthValue eval3(const ThreeValuedStructure& s, const CompiledFormula& f,
                 const Assignment& z = {});

/// Satisfaction for the existential monadic second-order extension.
bool eval_mso(const TwoValuedStructure& s, const Formula& f,
              const Assignment& z = {});
bool eval_mso(const TwoValuedStructure& s, const CompiledFormula& f,
              const Assignment& z = {});

}  // namespace hat
