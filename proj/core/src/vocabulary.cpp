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

#include "hat/vocabulary.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hat/error.hpp"

namespace hat {

namespace {

constexpr std::array<std::string_view, 5> kReserved = {"E", "A", "ES", "TC",
                                                       "in"};

}  // namespace

bool is_reserved_word(std::string_view word) noexcept {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

bool is_identifier(std::string_view word) noexcept {
  if (word.empty()) return false;
  auto head = static_cast<unsigned char>(word[0]);
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(word.begin() + 1, word.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Vocabulary::Vocabulary() : Vocabulary(std::vector<PredicateSymbol>{}) {}

Vocabulary::Vocabulary(std::vector<PredicateSymbol> predicates,
                       std::string eq_symbol) {
  if (!is_identifier(eq_symbol) || is_reserved_word(eq_symbol)) {
    throw FormulaError("invalid equality symbol '" + eq_symbol + "'");
  }
  predicates_.push_back({std::move(eq_symbol), 2});
  for (auto& p : predicates) {
    if (p.name == predicates_[0].name) {
      if (p.arity != 2) {
        throw FormulaError("equality symbol must be binary");
      }
      continue;
    }
    add(std::move(p.name), p.arity);
  }
}

PredicateId Vocabulary::add(std::string name, std::size_t arity) {
  if (!is_identifier(name) || is_reserved_word(name)) {
    throw FormulaError("invalid predicate name '" + name + "'");
  }
  if (contains(name)) {
    throw FormulaError("duplicate predicate '" + name + "'");
  }
  PredicateId id{predicates_.size()};
  predicates_.push_back({std::move(name), arity});
  if (arity == 1) unary_.push_back(id);
  max_arity_ = std::max(max_arity_, arity);
  return id;
}

std::optional<PredicateId> Vocabulary::find(
    std::string_view name) const noexcept {
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i].name == name) return PredicateId{i};
  }
  return std::nullopt;
}

PredicateId Vocabulary::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw FormulaError("unknown predicate '" + std::string(name) + "'");
}

std::vector<PredicateId> Vocabulary::of_arity(std::size_t arity) const {
  std::vector<PredicateId> out;
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i].arity == arity) out.push_back(PredicateId{i});
  }
  return out;
}

bool Vocabulary::same_signature(const Vocabulary& other) const {
  if (size() != other.size() || eq_symbol() != other.eq_symbol()) return false;
  return std::all_of(predicates_.begin(), predicates_.end(),
                     [&](const PredicateSymbol& p) {
                       auto id = other.find(p.name);
                       return id && other[*id].arity == p.arity;
                     });
}

}  // namespace hat
