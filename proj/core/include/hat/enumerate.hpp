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
#include <memory>
#include <optional>
#include <vector>

#include "hat/formula.hpp"
#include "hat/structure.hpp"

namespace hat {

class CompiledFormula;

/// Restrictions on the space of concrete structures. Every restriction must
/// be implied by whatever filter the caller applies, or enumeration-based
/// verdicts become unsound.
struct SearchSpace {
  /// Allowed unary valuations per node, each indexed like
  /// Vocabulary::unary(). Empty means unrestricted.
  std::vector<std::vector<bool>> unary_signatures;
  /// Binary predicates enumerated as partial functions (each node has at
  /// most one successor).
  std::vector<PredicateId> functional;

  bool unrestricted() const noexcept {
    return unary_signatures.empty() && functional.empty();
  }
};

struct EnumerationOptions {
  std::size_t max_nodes = 0;
  /// Yield the structure with an empty universe first. Kept on by default:
  /// nothing forbids empty universes, so validity covers them.
  bool include_empty = true;
  /// Maximum number of structures examined; 0 means unlimited. Checked
  /// against the analytic count before enumeration starts.
  std::uint64_t budget = 0;
  /// Closed formula; only its models are yielded.
  std::optional<Formula> filter;
  SearchSpace space;
};

/// Analytic size of the space: the sum over sizes n of the number of
/// valuations. Saturates at UINT64_MAX.
std::uint64_t predicted_count(const Vocabulary& voc,
                              const EnumerationOptions& options);

/// Streams every 2-valued structure over `voc` with at most `max_nodes`
/// nodes named "1".."n", each exactly once, in a fixed order: by size, then
/// by an odometer over nullary values, per-node unary valuations, and the
/// higher-arity tuples.
///
///   StructureEnumerator e(voc, {.max_nodes = 3});
///   while (e.next()) use(e.current());
class StructureEnumerator {
 public:
  /// Throws BudgetExceeded when predicted_count exceeds the budget.
  StructureEnumerator(Vocabulary voc, EnumerationOptions options);
  ~StructureEnumerator();
  StructureEnumerator(StructureEnumerator&&) noexcept;
  StructureEnumerator& operator=(StructureEnumerator&&) noexcept;

  /// Advances to the next structure passing the filter.
  bool next();
  const TwoValuedStructure& current() const;
  /// Structures generated so far, including those rejected by the filter.
  std::uint64_t examined() const noexcept;
  std::uint64_t predicted() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Collects all structures; convenience for small spaces.
std::vector<TwoValuedStructure> enumerate_structures(
    const Vocabulary& voc, std::size_t max_nodes,
    const std::optional<Formula>& filter = std::nullopt);

}  // namespace hat
