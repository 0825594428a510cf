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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hat/charform.hpp"
#include "hat/enumerate.hpp"
#include "hat/formula.hpp"
#include "hat/structure.hpp"
#include "hat/truth.hpp"

namespace hat {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

struct ValidityOptions {
  SearchSpace space;
  std::uint64_t budget = kDefaultBudget;
};

struct ValidityResult {
  bool valid = true;
  /// First refuting structure in enumeration order.
  std::optional<TwoValuedStructure> counterexample;
  std::size_t bound = 0;
  std::uint64_t examined = 0;
};

/// Whether every 2-valued structure over `voc` with 0..max_nodes nodes (in
/// `options.space`) satisfies the closed formula f. Throws BudgetExceeded.
ValidityResult bounded_valid(const Formula& f, const Vocabulary& voc,
                             std::size_t max_nodes,
                             const ValidityOptions& options = {});

struct BoundedVerdict {
  TruthValue value = TruthValue::Half;
  std::size_t bound = 0;
  /// Both implications held: no model of the characteristic formula exists
  /// up to the bound.
  bool empty = false;
  /// For value 1/2: a member satisfying the query and one refuting it.
  std::optional<TwoValuedStructure> satisfying;
  std::optional<TwoValuedStructure> refuting;
  /// Both witnesses embed into some member of X and satisfy F.
  bool witnesses_in_gamma = false;
  std::uint64_t examined = 0;
};

struct SupervaluationOptions {
  CharacterizationMode mode = CharacterizationMode::FirstOrder;
  std::vector<std::optional<NodeFormulaMap>> node_formulas;
  std::uint64_t budget = kDefaultBudget;
  /// Prune unary valuations and F-functional predicates (both are implied by
  /// the characteristic formula). Disable for a full scan.
  bool prune = true;
};

/// max |U^S| over X, plus 2.
std::size_t default_bound(std::span<const ThreeValuedStructure> xs);

/// The search space implied by γ̂(X): unary valuations are those allowed by
/// some node of some member (1/2 expanded both ways; unrestricted if that
/// exceeds 4096 signatures), and F's functional predicates.
SearchSpace derive_search_space(std::span<const ThreeValuedStructure> xs,
                                const Formula& integrity);

/// The supervaluation procedure with a bounded validity oracle:
///   1 if γ̂(X) -> f is valid up to the bound,
///   0 else if γ̂(X) -> !f is valid up to the bound,
///   1/2 otherwise, with one witness of each polarity.
/// `max_nodes` = 0 selects default_bound(X).
BoundedVerdict supervaluate(const Formula& f,
                            std::span<const ThreeValuedStructure> xs,
                            const Formula& integrity, std::size_t max_nodes = 0,
                            const SupervaluationOptions& options = {});

/// Whether `query` holds in every store described by the loop-head
/// structures X (verdict 1), fails in all (0), or varies (1/2).
BoundedVerdict check_invariant(std::span<const ThreeValuedStructure> xs,
                               const Formula& query, const Formula& integrity,
                               std::size_t max_nodes = 0,
                               const SupervaluationOptions& options = {});

}  // namespace hat
