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

#include "hat/error.hpp"

#include <sstream>

namespace hat {

ParseError::ParseError(Code code, std::string message, std::size_t offset,
                       std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      code_(code),
      offset_(offset),
      line_(line),
      column_(column) {}

PreconditionError::PreconditionError(std::string message,
                                     std::vector<Violation> violations)
    : Error(std::move(message)), violations_(std::move(violations)) {}

BudgetExceeded::BudgetExceeded(std::string message, std::uint64_t predicted,
                               std::uint64_t examined, std::uint64_t budget)
    : Error(std::move(message)),
      predicted_(predicted),
      examined_(examined),
      budget_(budget) {}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << rule << ": " << predicate << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ",";
    os << tuple[i];
  }
  os << ")";
  if (!detail.empty()) os << " " << detail;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << v.to_string();
}

}  // namespace hat
