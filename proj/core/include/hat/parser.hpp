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

#include <string_view>

#include "hat/formula.hpp"
#include "hat/vocabulary.hpp"

namespace hat {

struct ParseOptions {
  /// Accept `w in $V` and `ES $V1,$V2: f` (existential monadic fragment).
  bool allow_sets = false;
};

/// Parses the surface syntax:
///
///   formula := "0" | "1" | atom | "!" formula | formula "&" formula
///            | formula "|" formula | formula "->" formula
///            | formula "<->" formula | ("E"|"A") varlist ":" formula
///            | "TC" "(" var "," var ";" formula ")" "(" var "," var ")"
///            | ident "+" "(" var "," var ")" | ident "*" "(" var "," var ")"
///            | var "in" setvar | "ES" setvarlist ":" formula
///            | "(" formula ")"
///
/// Precedence from tightest: `!`, `&`, `|`, then `->` and `<->` at one
/// level, right-associative. `&` and `|` associate to the left. Quantifier
/// bodies extend as far right as possible. `#` starts a comment.
///
/// Throws ParseError with the offending position.
Formula parse_formula(std::string_view text, const Vocabulary& voc,
                      const ParseOptions& options = {});

}  // namespace hat
