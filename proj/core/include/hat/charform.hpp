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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hat/formula.hpp"
#include "hat/structure.hpp"
#include "hat/truth.hpp"

namespace hat {

/// One formula per abstract node, each with the designated free variable
/// `variable`.
struct NodeFormulaMap {
  std::string variable = "w";
  std::vector<Formula> formulas;

  /// The formula for node u with the designated variable renamed to `var`.
  Formula instantiate(std::size_t u, const std::string& var) const;
};

/// p^B(vars): !p(vars) for 0, p(vars) for 1, the constant 1 for 1/2.
/// Throws FormulaError when |vars| differs from the declared arity.
Formula truth_char(const Vocabulary& voc, std::string_view predicate,
                   TruthValue b, const std::vector<std::string>& vars);

/// node_u(w) = conjunction over unary p of p^{value(p,u)}(w).
/// Throws PreconditionError naming an indistinguishable pair when `s` is not
/// bounded.
NodeFormulaMap node_formulas_bounded(const ThreeValuedStructure& s);
/// The same conjunctions without the boundedness check.
NodeFormulaMap unary_node_formulas(const ThreeValuedStructure& s);

struct CharFormulaOptions {
  /// Drop the unary predicate blocks, which the totality conjunct already
  /// implies when node formulas are unary conjunctions.
  bool omit_unary_blocks = false;
};

/// ξ^S: node existence, totality, nullary values, and for every predicate
/// of arity r >= 1
///   A w1..wr: AND over node tuples (node_{u1}(w1) & ... -> p^{value}(w...))
/// Tuples whose value is 1/2 are omitted. Throws FormulaError when `nodes`
/// does not cover every node.
Formula char_formula(const ThreeValuedStructure& s, const NodeFormulaMap& nodes,
                     const CharFormulaOptions& options = {});

/// F & (ξ^{S1} | ... | ξ^{Sk}); the empty disjunction is 0.
Formula gamma_hat(std::span<const ThreeValuedStructure> xs,
                  std::span<const NodeFormulaMap> node_maps,
                  const Formula& integrity,
                  const CharFormulaOptions& options = {});
/// Uses node_formulas_bounded for every structure.
Formula gamma_hat(std::span<const ThreeValuedStructure> xs,
                  const Formula& integrity,
                  const CharFormulaOptions& options = {});

/// τ^S: ξ^S plus, for every predicate of arity >= 2 and every node tuple with
/// value 1/2, one existential witness with p and one with !p. Throws
/// PreconditionError when ica_check fails.
Formula tau_formula(const ThreeValuedStructure& s,
                    const CharFormulaOptions& options = {});

/// F & (τ^{S1} | ... | τ^{Sk}).
Formula gamma_hat_c(std::span<const ThreeValuedStructure> xs,
                    const Formula& integrity,
                    const CharFormulaOptions& options = {});

/// ES $V1..$Vn: non-emptiness & pairwise disjointness & totality & nullary &
/// predicate parts, with node_{ui}(w) := w in $Vi. Works for any structure.
Formula np_char_formula(const ThreeValuedStructure& s);

/// F & (np_char_formula(S1) | ...).
Formula gamma_hat_np(std::span<const ThreeValuedStructure> xs,
                     const Formula& integrity);

enum class CharacterizationMode { FirstOrder, Canonical, NP };

std::string_view to_string(CharacterizationMode mode) noexcept;
std::optional<CharacterizationMode> parse_mode(std::string_view text) noexcept;

/// Dispatches to gamma_hat / gamma_hat_c / gamma_hat_np. `overrides[i]`, when
/// present, replaces the node formulas of xs[i] in FirstOrder mode. In that
/// mode a member with no 1/2 values that is not bounded (a concrete structure
/// whose unary predicates do not separate its nodes) gets np_char_formula.
Formula characterize(std::span<const ThreeValuedStructure> xs,
                     const Formula& integrity, CharacterizationMode mode,
                     std::span<const std::optional<NodeFormulaMap>> overrides =
                         {},
                     const CharFormulaOptions& options = {});

/// Parses `nodeformula <nodeId> := <formula>` lines (blank lines and `#`
/// comments allowed) against the structure's nodes. Nodes without a line
/// get the unary conjunction. Throws StructureError / ParseError.
NodeFormulaMap parse_node_formulas(std::string_view text,
                                   const ThreeValuedStructure& s);

// List data type.

/// Integrity formula with conjuncts, in order:
///   (a) per q: A v1,v2: q(v1) & q(v2) -> eq(v1,v2)
///   (b) A v,v1,v2: n(v,v1) & n(v,v2) -> eq(v1,v2)
///   (c) A v: is(v) <-> E v1,v2: !eq(v1,v2) & n(v1,v) & n(v2,v)
///   (d) per q: A v: r_q(v) <-> E v1: q(v1) & n*(v1,v)
/// Conjunct (c) is included iff `is` is declared. Throws FormulaError when q,
/// r_q, or n is missing.
Formula build_F_list(const Vocabulary& voc,
                     const std::vector<std::string>& pvar);

struct ListQueries {
  Formula acyclic;
  Formula unshared;
  Formula list;
};

/// acyc_q, uns_q, list_q := acyc_q & uns_q for program variable q.
ListQueries build_listx_queries(const Vocabulary& voc,
                                const std::string& q = "x");

/// E v1,v2: q(v1) & n(v1,v2)
Formula query_next_not_null(const Vocabulary& voc, const std::string& q = "x");
/// E v1: A v2: !n(v1,v2)
Formula query_has_last(const Vocabulary& voc);

/// Binary predicates p for which the formula has a top-level conjunct of the
/// form A a,b,c: p(a,b) & p(a,c) -> eq(b,c).
std::vector<PredicateId> functional_predicates(const Formula& f,
                                               const Vocabulary& voc);

}  // namespace hat
