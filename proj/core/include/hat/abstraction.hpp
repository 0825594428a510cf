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
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hat/formula.hpp"
#include "hat/structure.hpp"

namespace hat {

/// f: concrete nodes -> abstract nodes, as `image[c]`.
struct EmbeddingWitness {
  std::vector<std::size_t> image;

  friend bool operator==(const EmbeddingWitness&,
                         const EmbeddingWitness&) = default;
};

struct EmbeddingOptions {
  /// Maximum search-tree nodes visited; 0 means unlimited.
  std::uint64_t budget = 0;
};

/// Checks both witness conditions: surjectivity and, for every predicate and
/// concrete tuple, concrete value ⊑ abstract value at the image tuple.
bool is_embedding(const StructureBase& concrete,
                  const ThreeValuedStructure& abstract,
                  const EmbeddingWitness& f);

/// Exhaustive backtracking search for a surjective embedding. Candidate
/// images of each node are pruned by unary and nullary compatibility before
/// higher-arity tuples between already placed nodes are checked. Both
/// structures must have the same signature (declaration order may differ).
/// Throws BudgetExceeded when the search exceeds the budget.
std::optional<EmbeddingWitness> find_embedding(
    const TwoValuedStructure& concrete, const ThreeValuedStructure& abstract,
    const EmbeddingOptions& options = {});

/// concrete ∈ γ(abstract): it embeds and satisfies the closed formula F.
bool in_gamma(const TwoValuedStructure& concrete,
              const ThreeValuedStructure& abstract, const Formula& integrity,
              const EmbeddingOptions& options = {});

struct CanonicalName {
  std::set<std::string> true_predicates;
  std::set<std::string> false_predicates;

  std::string to_string() const;
  friend auto operator<=>(const CanonicalName&,
                          const CanonicalName&) = default;
};

/// Unary predicates that are 1 and 0 at u; 1/2 values land in neither set.
/// Throws StructureError for an unknown node.
CanonicalName canonical_name(const StructureBase& s, std::size_t u);
CanonicalName canonical_name(const StructureBase& s, std::string_view node);

struct CanonicalAbstraction {
  ThreeValuedStructure structure;
  /// Concrete node -> abstract node.
  std::vector<std::size_t> map;
  /// Canonical name of each abstract node.
  std::vector<CanonicalName> names;
};

/// β: merges concrete nodes with equal canonical names; every predicate
/// value is the join over the preimage tuples. Abstract nodes are named
/// "u1".."uk" in order of their first preimage.
CanonicalAbstraction canonical_abstraction(const TwoValuedStructure& concrete);

/// True iff every pair of distinct nodes differs on some unary predicate
/// whose values at both nodes are definite.
bool is_bounded(const StructureBase& s);

/// The necessary conditions for an image of canonical abstraction:
/// (i) bounded, (ii) definite nullary values, (iii) definite unary values.
/// An empty result does not prove the structure is an image.
std::vector<Violation> ica_check(const ThreeValuedStructure& s);

/// Isomorphism of structures whose nodes are identified by canonical names
/// (as images of canonical abstraction are): returns the node bijection
/// a -> b when names match one-to-one and all predicate values agree.
std::optional<std::vector<std::size_t>> isomorphic_by_canonical_names(
    const ThreeValuedStructure& a, const ThreeValuedStructure& b);

/// concrete ∈ γ_c(abstract): β(concrete) is isomorphic to `abstract` and
/// concrete satisfies F. Throws PreconditionError when ica_check fails.
bool in_gamma_c(const TwoValuedStructure& concrete,
                const ThreeValuedStructure& abstract, const Formula& integrity);

/// concrete ∈ D \ γ_c(abstract), D the models of F.
bool in_ica_complement(const TwoValuedStructure& concrete,
                       const ThreeValuedStructure& abstract,
                       const Formula& integrity);

/// Searches structures with at most `max_nodes` nodes (unary valuations
/// drawn from `s`) for one whose canonical abstraction is isomorphic to `s`.
std::optional<TwoValuedStructure> find_ica_witness(
    const ThreeValuedStructure& s, std::size_t max_nodes,
    std::uint64_t budget = 0);

/// Generates members of the embedding closure of `abstract`: every 2-valued
/// structure with nodes "1".."k", k <= max_nodes, that embeds into it,
/// together with one witness. For bounded structures each labelled
/// structure is produced once; otherwise duplicates are suppressed.
/// Stops early when `visit` returns false. Throws BudgetExceeded when more
/// than `budget` candidates would be generated (0 = unlimited).
void for_each_embedded_structure(
    const ThreeValuedStructure& abstract, std::size_t max_nodes,
    const std::function<bool(const TwoValuedStructure&,
                             const EmbeddingWitness&)>& visit,
    std::uint64_t budget = 0);

}  // namespace hat
