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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hat {

/// Index of a predicate within its Vocabulary.
struct PredicateId {
  std::size_t index = 0;

  friend auto operator<=>(const PredicateId&, const PredicateId&) = default;
};

struct PredicateSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) =
      default;
};

/// The predicate signature. The equality symbol is always present, binary,
/// and has id 0; the remaining predicates follow in declaration order.
class Vocabulary {
 public:
  Vocabulary();
  explicit Vocabulary(std::vector<PredicateSymbol> predicates,
                      std::string eq_symbol = "eq");

  /// Appends a predicate. Throws FormulaError on duplicate or reserved names.
  PredicateId add(std::string name, std::size_t arity);

  std::size_t size() const noexcept { return predicates_.size(); }
  const PredicateSymbol& operator[](PredicateId id) const {
    return predicates_[id.index];
  }
  const std::vector<PredicateSymbol>& predicates() const noexcept {
    return predicates_;
  }

  std::optional<PredicateId> find(std::string_view name) const noexcept;
  /// Throws FormulaError when the name is not declared.
  PredicateId at(std::string_view name) const;
  bool contains(std::string_view name) const noexcept {
    return find(name).has_value();
  }

  PredicateId eq() const noexcept { return PredicateId{0}; }
  const std::string& eq_symbol() const noexcept { return predicates_[0].name; }
  std::size_t max_arity() const noexcept { return max_arity_; }

  /// Predicates of the given arity, in declaration order.
  std::vector<PredicateId> of_arity(std::size_t arity) const;
  const std::vector<PredicateId>& unary() const noexcept { return unary_; }

  /// Same predicates, arities, and declaration order.
  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.predicates_ == b.predicates_;
  }

  /// Same set of (name, arity) pairs, ignoring order.
  bool same_signature(const Vocabulary& other) const;

 private:
  std::vector<PredicateSymbol> predicates_;
  std::vector<PredicateId> unary_;
  std::size_t max_arity_ = 2;
};

/// Words the formula grammar reserves; neither predicates nor variables may
/// use them.
bool is_reserved_word(std::string_view word) noexcept;
bool is_identifier(std::string_view word) noexcept;

}  // namespace hat
