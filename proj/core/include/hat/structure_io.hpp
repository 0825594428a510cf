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

#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hat/structure.hpp"

namespace hat {

/// Line-oriented structure files:
///
///   kind two|three
///   pred <name> <arity>          (eq is implicit)
///   node <id>                    (declaration order is node order)
///   summary <id>                 (3-valued only: eq(id,id) = 1/2)
///   <pred> <id>... = 0|1|1/2
///
/// Blank lines and `#` comments are ignored. In 2-valued files omitted
/// tuples are 0; in 3-valued files every tuple of every non-eq predicate
/// must be given, and omissions are reported as "missing-fact" violations.
struct StructureFile {
  std::variant<TwoValuedStructure, ThreeValuedStructure> structure;
  std::vector<Violation> violations;

  bool is_three_valued() const noexcept { return structure.index() == 1; }
  /// The abstract view; 2-valued files are lifted.
  ThreeValuedStructure as_three_valued() const;
  /// Throws StructureError for a 3-valued file.
  const TwoValuedStructure& as_two_valued() const;
};

/// Throws StructureError on syntax errors (with line number).
StructureFile parse_structure(std::string_view text);
StructureFile read_structure_file(const std::string& path);

/// Writes only the 1-valued tuples.
std::string write_structure(const TwoValuedStructure& s);
/// Writes every non-eq tuple explicitly.
std::string write_structure(const ThreeValuedStructure& s);

}  // namespace hat
