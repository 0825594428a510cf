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
#include <stdexcept>
#include <string>
#include <vector>

#include "hat/violation.hpp"

namespace hat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset` is a byte offset into the input;
/// `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  enum class Code { Syntax, UnknownPredicate, ArityMismatch, SetOutsideNp };

  ParseError(Code code, std::string message, std::size_t offset,
             std::size_t line, std::size_t column);

  Code code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Code code_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// A formula that cannot be evaluated or generated: unknown predicate,
/// arity mismatch, incomplete assignment, unbound set variable.
class FormulaError : public Error {
 public:
  using Error::Error;
};

/// Malformed structure, unknown node, or a bad structure file.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An operation's structural precondition does not hold (not bounded,
/// not an image of canonical abstraction, ...). Carries the violations.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string message, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

/// A search exceeded its configured budget. `predicted` is the analytic
/// size of the search space when known up front (0 otherwise).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string message, std::uint64_t predicted,
                 std::uint64_t examined, std::uint64_t budget);

  std::uint64_t predicted() const noexcept { return predicted_; }
  std::uint64_t examined() const noexcept { return examined_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t examined_;
  std::uint64_t budget_;
};

}  // namespace hat
