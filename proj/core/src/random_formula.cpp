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

#include "hat/random_formula.hpp"

#include "hat/error.hpp"

namespace hat {

RandomFormulaGenerator::RandomFormulaGenerator(Vocabulary voc,
                                               std::uint64_t seed,
                                               RandomFormulaOptions options)
    : voc_(std::move(voc)), rng_(seed), options_(std::move(options)) {
  if (options_.variables.size() < 2) {
    throw FormulaError("random formulas need at least two variables");
  }
}

const std::string& RandomFormulaGenerator::pick_variable() {
  std::uniform_int_distribution<std::size_t> d(0, options_.variables.size() - 1);
  return options_.variables[d(rng_)];
}

Formula RandomFormulaGenerator::next() {
  Formula f = generate(options_.max_depth);
  if (options_.allow_sets) {
    f = Formula::exists_sets({"$S1", "$S2"}, f);
  }
  if (options_.closed) {
    auto fv = free_variables(f);
    f = Formula::exists(std::vector<std::string>(fv.begin(), fv.end()), f);
  }
  return f;
}

Formula RandomFormulaGenerator::generate(int depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  int roll = pick(rng_);
  if (depth <= 0 || roll < 25) {
    int leaf = pick(rng_);
    if (leaf < 5) return Formula::falsum();
    if (leaf < 10) return Formula::verum();
    if (options_.allow_sets && leaf < 25) {
      return Formula::member(pick_variable(), leaf % 2 ? "$S1" : "$S2");
    }
    std::uniform_int_distribution<std::size_t> pd(0, voc_.size() - 1);
    const auto& p = voc_[PredicateId{pd(rng_)}];
    std::vector<std::string> args;
    for (std::size_t i = 0; i < p.arity; ++i) args.push_back(pick_variable());
    return Formula::atom(p.name, std::move(args));
  }
  --depth;
  // Children are drawn in a fixed order so output does not depend on
  // argument evaluation order.
  auto two = [&](auto make) {
    Formula a = generate(depth);
    Formula b = generate(depth);
    return make(std::move(a), std::move(b));
  };
  if (roll < 40) return Formula::negation(generate(depth));
  if (roll < 52) return two(Formula::disjunction);
  if (roll < 64) return two(Formula::conjunction);
  if (roll < 70) return two(Formula::implication);
  if (roll < 74) return two(Formula::equivalence);
  if (roll < 92 || !options_.allow_transitive_closure) {
    std::string v = pick_variable();
    Formula body = generate(depth);
    return roll < 84 ? Formula::exists(v, std::move(body))
                     : Formula::forall(v, std::move(body));
  }
  std::string a1 = pick_variable();
  std::string a2 = pick_variable();
  if (roll < 96) {
    auto binaries = voc_.of_arity(2);
    const auto& p = voc_[binaries[static_cast<std::size_t>(roll) %
                                  binaries.size()]];
    if (roll % 2) return Formula::plus(p.name, a1, a2);
    return Formula::star(p.name, voc_.eq_symbol(), a1, a2);
  }
  std::string b1 = pick_variable();
  std::string b2 = pick_variable();
  while (b2 == b1) b2 = pick_variable();
  Formula body = generate(depth);
  return Formula::transitive_closure(b1, b2, std::move(body), a1, a2);
}

}  // namespace hat
