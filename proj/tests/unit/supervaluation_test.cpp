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

#include "hat/supervaluation.hpp"

#include <gtest/gtest.h>

#include "hat/abstraction.hpp"
#include "hat/error.hpp"
#include "hat/fixtures.hpp"
#include "hat/parser.hpp"
#include "hat/semantics.hpp"

namespace hat {
namespace {

class Supervaluation : public ::testing::Test {
 protected:
  Vocabulary voc = fixtures::reduced_list_vocabulary();
  Formula F = build_F_list(voc, {"x"});
  std::vector<ThreeValuedStructure> xs{fixtures::s_abstract_list(voc)};
  Formula p(const char* s) { return parse_formula(s, voc); }
};

TEST_F(Supervaluation, MorePreciseThanKleene) {
  auto next = query_next_not_null(voc);
  EXPECT_EQ(eval3(xs[0], next), TruthValue::Half);
  auto v = supervaluate(next, xs, F, 4);
  EXPECT_EQ(v.value, TruthValue::True);
  EXPECT_FALSE(v.empty);
  EXPECT_EQ(v.bound, 4u);
  EXPECT_GT(v.examined, 0u);
}

TEST_F(Supervaluation, DefiniteFalse) {
  auto v = supervaluate(p("E a: x(a) & n(a, a)"), xs, F, 3);
  EXPECT_EQ(v.value, TruthValue::False);
}

TEST_F(Supervaluation, IndefiniteWithWitnesses) {
  auto q = p("E a, b, c: n(a, b) & n(b, c) & !eq(a, c)");
  auto v = supervaluate(q, xs, F, 4);
  ASSERT_EQ(v.value, TruthValue::Half);
  ASSERT_TRUE(v.satisfying && v.refuting);
  EXPECT_TRUE(eval2(*v.satisfying, q));
  EXPECT_FALSE(eval2(*v.refuting, q));
  EXPECT_TRUE(v.witnesses_in_gamma);
  EXPECT_TRUE(in_gamma(*v.satisfying, xs[0], F));
  EXPECT_TRUE(in_gamma(*v.refuting, xs[0], F));
}

TEST_F(Supervaluation, PruningDoesNotChangeTheVerdict) {
  SupervaluationOptions full;
  full.prune = false;
  for (const char* q : {"E a: x(a) & n(a, a)", "E a, b: n(a, b)",
                        "A a: r_x(a)", "E a, b, c: n(a, b) & n(b, c)"}) {
    auto a = supervaluate(p(q), xs, F, 3);
    auto b = supervaluate(p(q), xs, F, 3, full);
    EXPECT_EQ(a.value, b.value) << q;
    EXPECT_LT(a.examined, b.examined);
  }
}

TEST_F(Supervaluation, EmptyConcretization) {
  std::vector<ThreeValuedStructure> none;
  auto v = supervaluate(p("E a: x(a)"), none, F, 3);
  EXPECT_EQ(v.value, TruthValue::True);
  EXPECT_TRUE(v.empty);
  // F rules out two x-nodes
  ThreeValuedStructure s(voc, {"u1", "u2"});
  s.set("x", {"u1"}, TruthValue::True);
  s.set("x", {"u2"}, TruthValue::True);
  s.set("r_x", {"u1"}, TruthValue::True);
  std::vector<ThreeValuedStructure> two{s};
  EXPECT_TRUE(supervaluate(p("E a: x(a)"), two, F, 3).empty);
}

TEST_F(Supervaluation, DefaultBoundAndBudget) {
  EXPECT_EQ(default_bound(xs), 4u);
  EXPECT_EQ(supervaluate(query_next_not_null(voc), xs, F).bound, 4u);
  SupervaluationOptions tight;
  tight.budget = 10;
  EXPECT_THROW(supervaluate(query_next_not_null(voc), xs, F, 4, tight),
               BudgetExceeded);
  EXPECT_THROW(supervaluate(p("x(a)"), xs, F, 3), FormulaError);
}

TEST_F(Supervaluation, SearchSpace) {
  auto space = derive_search_space(xs, F);
  EXPECT_EQ(space.unary_signatures.size(), 2u);
  EXPECT_EQ(space.functional, std::vector<PredicateId>{voc.at("n")});
  auto open = derive_search_space(xs, Formula::verum());
  EXPECT_TRUE(open.functional.empty());
}

TEST(BoundedValid, Basics) {
  Vocabulary voc({{"x", 1}});
  auto valid = bounded_valid(parse_formula("A a: eq(a, a)", voc), voc, 3);
  EXPECT_TRUE(valid.valid);
  EXPECT_EQ(valid.examined, 1u + 2u + 4u + 8u);
  // the empty universe refutes every existential
  auto nonempty = bounded_valid(parse_formula("E a: eq(a, a)", voc), voc, 3);
  EXPECT_FALSE(nonempty.valid);
  ASSERT_TRUE(nonempty.counterexample);
  EXPECT_EQ(nonempty.counterexample->size(), 0u);
  auto r = bounded_valid(parse_formula("E a: x(a)", voc), voc, 3);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->size(), 0u);
}

TEST(Invariant, LoopHeads) {
  auto voc = fixtures::list_vocabulary();
  auto F = build_F_list(voc, {"x", "y", "t", "e"});
  auto xs = fixtures::loop_structures(voc);
  auto q = build_listx_queries(voc);
  EXPECT_EQ(check_invariant(xs, q.acyclic, F, 3).value, TruthValue::True);
  auto both = check_invariant(xs, parse_formula("E v: x(v) & y(v)", voc), F, 3);
  EXPECT_EQ(both.value, TruthValue::Half);
}

}  // namespace
}  // namespace hat
