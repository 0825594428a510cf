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
#include <random>
#include <string>
#include <vector>

#include "hat/formula.hpp"
#include "hat/vocabulary.hpp"

namespace hat {

struct RandomFormulaOptions {
  int max_depth = 5;
  /// Pool of first-order variable names.
  std::vector<std::string> variables = {"v1", "v2", "v3"};
  bool allow_transitive_closure = true;
  bool allow_sets = false;
  /// Only emit closed formulas (free variables get existentially bound).
  bool closed = false;
};

/// Deterministic random formula generator over a vocabulary.
class RandomFormulaGenerator {
 public:
  RandomFormulaGenerator(Vocabulary voc, std::uint64_t seed,
                         RandomFormulaOptions options = {});

  Formula next();

 private:
  Formula generate(int depth);
  const std::string& pick_variable();

  Vocabulary voc_;
  std::mt19937_64 rng_;
  RandomFormulaOptions options_;
};

}  // namespace hat
