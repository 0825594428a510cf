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
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hat/truth.hpp"
#include "hat/violation.hpp"
#include "hat/vocabulary.hpp"

namespace hat {

/// Finite universe plus a total interpretation of every predicate.
///
/// Tables for arity <= 2 are dense (|U|^arity entries); higher arities are
/// stored sparsely with 0 as the implicit value.
class StructureBase {
 public:
  const Vocabulary& vocabulary() const noexcept { return voc_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::string& node_name(std::size_t u) const { return nodes_.at(u); }
  std::optional<std::size_t> find_node(std::string_view name) const noexcept;
  /// Throws StructureError for an unknown node name.
  std::size_t node(std::string_view name) const;

  TruthValue truth(PredicateId p, std::span<const std::size_t> args) const;
  TruthValue truth(PredicateId p, std::initializer_list<std::size_t> args) const {
    return truth(p, std::span<const std::size_t>(args.begin(), args.size()));
  }

  /// Value of a unary predicate at node u, unchecked.
  TruthValue unary_truth(PredicateId p, std::size_t u) const noexcept {
    return tables_[p.index].dense[u];
  }

  /// Unchecked access for evaluators; `args` holds arity(p) node indices.
  TruthValue truth_unchecked(PredicateId p,
                             const std::size_t* args) const noexcept {
    const Table& t = tables_[p.index];
    switch (t.arity) {
      case 0:
        return t.dense[0];
      case 1:
        return t.dense[args[0]];
      case 2:
        return t.dense[args[0] * nodes_.size() + args[1]];
      default:
        return sparse_lookup(t, args);
    }
  }

 protected:
  StructureBase(Vocabulary voc, std::vector<std::string> nodes);

  void assign(PredicateId p, std::span<const std::size_t> args, TruthValue v);
  void assign_unchecked(PredicateId p, const std::size_t* args, TruthValue v);
  bool same_contents(const StructureBase& other) const;

 private:
  struct Table {
    std::size_t arity = 0;
    std::vector<TruthValue> dense;
    std::map<std::vector<std::size_t>, TruthValue> sparse;
  };

  static TruthValue sparse_lookup(const Table& t,
                                  const std::size_t* args) noexcept;
  void check_tuple(PredicateId p, std::span<const std::size_t> args) const;

  Vocabulary voc_;
  std::vector<std::string> nodes_;
  std::vector<Table> tables_;
};

/// A concrete structure: every predicate is 0 or 1, and eq is identity.
class TwoValuedStructure : public StructureBase {
 public:
  /// Node names must be unique. eq starts as identity, everything else 0.
  TwoValuedStructure(Vocabulary voc, std::vector<std::string> nodes);
  /// Nodes named "1".."k".
  static TwoValuedStructure with_canonical_nodes(Vocabulary voc,
                                                 std::size_t k);

  bool holds(PredicateId p, std::span<const std::size_t> args) const {
    return truth(p, args) == TruthValue::True;
  }
  bool holds(PredicateId p, std::initializer_list<std::size_t> args) const {
    return truth(p, args) == TruthValue::True;
  }
  void set(PredicateId p, std::span<const std::size_t> args, bool value);
  void set(PredicateId p, std::initializer_list<std::size_t> args, bool value) {
    set(p, std::span<const std::size_t>(args.begin(), args.size()), value);
  }
  /// Name-based convenience for fixtures and tests.
  void set(std::string_view predicate,
           std::initializer_list<std::string_view> nodes, bool value);
  void set_unchecked(PredicateId p, const std::size_t* args, bool value) {
    assign_unchecked(p, args, to_truth(value));
  }

  friend bool operator==(const TwoValuedStructure& a,
                         const TwoValuedStructure& b) {
    return a.same_contents(b);
  }
};

/// An abstract structure: values in {0, 1/2, 1}. eq(u,u) is 1 for ordinary
/// nodes and 1/2 for summary nodes; eq between distinct nodes is 0.
class ThreeValuedStructure : public StructureBase {
 public:
  ThreeValuedStructure(Vocabulary voc, std::vector<std::string> nodes);
  /// A concrete structure viewed as an abstract one.
  static ThreeValuedStructure from(const TwoValuedStructure& s);

  TruthValue value(PredicateId p, std::span<const std::size_t> args) const {
    return truth(p, args);
  }
  TruthValue value(PredicateId p, std::initializer_list<std::size_t> args) const {
    return truth(p, args);
  }
  void set(PredicateId p, std::span<const std::size_t> args, TruthValue v);
  void set(PredicateId p, std::initializer_list<std::size_t> args,
           TruthValue v) {
    set(p, std::span<const std::size_t>(args.begin(), args.size()), v);
  }
  void set(std::string_view predicate,
           std::initializer_list<std::string_view> nodes, TruthValue v);

  bool is_summary(std::size_t u) const;
  void set_summary(std::size_t u, bool summary = true);

  friend bool operator==(const ThreeValuedStructure& a,
                         const ThreeValuedStructure& b) {
    return a.same_contents(b);
  }
};

/// Violations of the 2-valued invariants: definite values, eq is identity.
std::vector<Violation> validate(const TwoValuedStructure& s);
/// Violations of the 3-valued invariants: eq(u,u) in {1, 1/2} and eq between
/// distinct nodes is 0.
std::vector<Violation> validate(const ThreeValuedStructure& s);

/// Keeps the predicates of `sub` (which must be a sub-signature) and drops
/// the rest. Node names and values are preserved.
ThreeValuedStructure restrict_vocabulary(const ThreeValuedStructure& s,
                                         const Vocabulary& sub);
TwoValuedStructure restrict_vocabulary(const TwoValuedStructure& s,
                                       const Vocabulary& sub);

/// Calls `fn(tuple)` for every tuple in nodes^arity in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t universe, std::size_t arity, Fn&& fn) {
  std::vector<std::size_t> tuple(arity, 0);
  if (arity > 0 && universe == 0) return;
  while (true) {
    fn(std::span<const std::size_t>(tuple));
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++tuple[i] < universe) break;
      tuple[i] = 0;
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

}  // namespace hat
