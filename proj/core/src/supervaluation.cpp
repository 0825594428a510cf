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

#include "hat/supervaluation.hpp"

#include <algorithm>
#include <set>

#include "hat/abstraction.hpp"
#include "hat/error.hpp"
#include "hat/semantics.hpp"

namespace hat {

namespace {

constexpr std::size_t kMaxSignatures = 4096;

}  // namespace

ValidityResult bounded_valid(const Formula& f, const Vocabulary& voc,
                             std::size_t max_nodes,
                             const ValidityOptions& options) {
  if (!is_closed(f)) throw FormulaError("validity needs a closed formula");
  CompiledFormula compiled(f, voc);
  EnumerationOptions eo;
  eo.max_nodes = max_nodes;
  eo.budget = options.budget;
  eo.space = options.space;
  StructureEnumerator e(voc, eo);
  ValidityResult result;
  result.bound = max_nodes;
  while (e.next()) {
    if (compiled.evaluate(e.current()) != TruthValue::True) {
      result.valid = false;
      result.counterexample = e.current();
      break;
    }
  }
  result.examined = e.examined();
  return result;
}

std::size_t default_bound(std::span<const ThreeValuedStructure> xs) {
  std::size_t m = 0;
  for (const auto& s : xs) m = std::max(m, s.size());
  return m + 2;
}

SearchSpace derive_search_space(std::span<const ThreeValuedStructure> xs,
                                const Formula& integrity) {
  SearchSpace space;
  if (xs.empty()) return space;
  const Vocabulary& voc = xs[0].vocabulary();
  for (const auto& s : xs) {
    if (!(s.vocabulary() == voc)) {
      throw FormulaError("structures use different vocabularies");
    }
  }
  space.functional = functional_predicates(integrity, voc);
  const auto& unary = voc.unary();
  if (unary.empty()) return space;

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> signatures;
  for (const auto& s : xs) {
    for (std::size_t u = 0; u < s.size(); ++u) {
      std::vector<std::vector<bool>> partial{{}};
      for (auto p : unary) {
        TruthValue v = s.unary_truth(p, u);
        std::vector<std::vector<bool>> next;
        for (const auto& sig : partial) {
          for (bool b : {false, true}) {
            if (is_definite(v) && b != (v == TruthValue::True)) continue;
            auto ext = sig;
            ext.push_back(b);
            next.push_back(std::move(ext));
          }
        }
        partial = std::move(next);
        if (partial.size() > kMaxSignatures) return space;
      }
      for (auto& sig : partial) {
        if (seen.insert(sig).second) signatures.push_back(std::move(sig));
      }
      if (signatures.size() > kMaxSignatures) return space;
    }
  }
  space.unary_signatures = std::move(signatures);
  return space;
}

BoundedVerdict supervaluate(const Formula& f,
                            std::span<const ThreeValuedStructure> xs,
                            const Formula& integrity, std::size_t max_nodes,
                            const SupervaluationOptions& options) {
  if (!is_closed(f)) throw FormulaError("query must be closed");
  BoundedVerdict verdict;
  verdict.bound = max_nodes != 0 ? max_nodes : default_bound(xs);
  Formula g = characterize(xs, integrity, options.mode, options.node_formulas);
  Vocabulary voc = xs.empty() ? Vocabulary() : xs[0].vocabulary();
  if (xs.empty()) {
    verdict.value = TruthValue::True;
    verdict.empty = true;
    return verdict;
  }
  ValidityOptions vo;
  vo.budget = options.budget;
  if (options.prune) vo.space = derive_search_space(xs, integrity);

  auto pos = bounded_valid(Formula::implication(g, f), voc, verdict.bound, vo);
  auto neg = bounded_valid(Formula::implication(g, Formula::negation(f)), voc,
                           verdict.bound, vo);
  verdict.examined = pos.examined + neg.examined;
  if (pos.valid && neg.valid) {
    verdict.value = TruthValue::True;
    verdict.empty = true;
  } else if (pos.valid) {
    verdict.value = TruthValue::True;
  } else if (neg.valid) {
    verdict.value = TruthValue::False;
  } else {
    verdict.value = TruthValue::Half;
    verdict.satisfying = neg.counterexample;
    verdict.refuting = pos.counterexample;
    auto member = [&](const TwoValuedStructure& w) {
      return std::any_of(xs.begin(), xs.end(), [&](const auto& s) {
        return in_gamma(w, s, integrity);
      });
    };
    verdict.witnesses_in_gamma =
        member(*verdict.satisfying) && member(*verdict.refuting);
  }
  return verdict;
}

BoundedVerdict check_invariant(std::span<const ThreeValuedStructure> xs,
                               const Formula& query, const Formula& integrity,
                               std::size_t max_nodes,
                               const SupervaluationOptions& options) {
  return supervaluate(query, xs, integrity, max_nodes, options);
}

}  // namespace hat
