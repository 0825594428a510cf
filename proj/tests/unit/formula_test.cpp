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

#include "hat/formula.hpp"

#include <gtest/gtest.h>

#include "hat/error.hpp"
#include "hat/parser.hpp"
#include "hat/vocabulary.hpp"

namespace hat {
namespace {

using F = Formula;

Vocabulary list_voc() { return Vocabulary({{"x", 1}, {"r_x", 1}, {"n", 2}}); }

TEST(Formula, SugarExpandsToCoreConnectives) {
  F a = F::atom("x", {"v"}), b = F::atom("r_x", {"v"});
  F conj = F::conjunction(a, b);
  ASSERT_TRUE(conj.is(F::Kind::Not));
  ASSERT_TRUE(conj.body().is(F::Kind::Or));
  EXPECT_EQ(conj.body().lhs(), F::negation(a));
  EXPECT_EQ(conj.body().rhs(), F::negation(b));

  EXPECT_EQ(F::implication(a, b), F::disjunction(F::negation(a), b));
  EXPECT_EQ(F::equivalence(a, b),
            F::conjunction(F::implication(a, b), F::implication(b, a)));
  EXPECT_EQ(F::forall("v", a), F::negation(F::exists("v", F::negation(a))));

  F plus = F::plus("n", "a", "b");
  ASSERT_TRUE(plus.is(F::Kind::TransitiveClosure));
  EXPECT_EQ(plus.variables(), (std::vector<std::string>{"v1", "v2", "a", "b"}));
  EXPECT_EQ(plus.body(), F::atom("n", {"v1", "v2"}));
  EXPECT_EQ(F::star("n", "eq", "a", "b"),
            F::disjunction(plus, F::atom("eq", {"a", "b"})));
}

TEST(Formula, Recognizers) {
  F a = F::atom("x", {"v"}), b = F::atom("r_x", {"v"});
  auto c = match_conjunction(F::conjunction(a, b));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->first, a);
  EXPECT_EQ(c->second, b);
  auto i = match_implication(F::implication(a, b));
  ASSERT_TRUE(i);
  EXPECT_EQ(i->second, b);
  EXPECT_TRUE(match_equivalence(F::equivalence(a, b)));
  EXPECT_FALSE(match_equivalence(F::conjunction(a, b)));
  auto fa = match_forall(F::forall("v", a));
  ASSERT_TRUE(fa);
  EXPECT_EQ(fa->first, "v");
  EXPECT_EQ(fa->second, a);
  EXPECT_FALSE(match_forall(F::exists("v", a)));
}

TEST(Formula, ConjoinAndDisjoin) {
  F a = F::atom("x", {"v"}), b = F::atom("r_x", {"v"});
  std::vector<F> none;
  EXPECT_EQ(conjoin(none), F::verum());
  EXPECT_EQ(disjoin(none), F::falsum());
  std::vector<F> items{a, F::verum(), b};
  EXPECT_EQ(conjoin(items), F::conjunction(a, b));
  std::vector<F> ors{F::falsum(), a};
  EXPECT_EQ(disjoin(ors), a);
  std::vector<F> three{a, b, a};
  EXPECT_EQ(conjuncts(conjoin(three)).size(), 3u);
}

TEST(Formula, FreeVariables) {
  auto voc = list_voc();
  F f = parse_formula("E v: n(v, w) & TC(a,b; n(a,b))(v, u)", voc);
  EXPECT_EQ(free_variables(f), (std::set<std::string>{"u", "w"}));
  EXPECT_FALSE(is_closed(f));
  EXPECT_TRUE(contains_transitive_closure(f));
  EXPECT_TRUE(is_closed(parse_formula("A v: x(v) -> r_x(v)", voc)));

  F g = parse_formula("ES $S: E v: v in $S & v in $T", voc, {true});
  EXPECT_EQ(free_set_variables(g), (std::set<std::string>{"$T"}));
  EXPECT_TRUE(uses_sets(g));
  EXPECT_FALSE(uses_sets(f));
}

TEST(Formula, RenameAvoidsCapture) {
  auto voc = list_voc();
  F f = parse_formula("E w1: x(w1) & n(w1, w)", voc);
  F r = rename_free_variable(f, "w", "w1");
  EXPECT_EQ(free_variables(r), std::set<std::string>{"w1"});
  ASSERT_TRUE(r.is(F::Kind::Exists));
  EXPECT_NE(r.bound_variable(), "w1");
  // bound occurrences are untouched
  F g = parse_formula("x(v) & (E v: n(v, v))", voc);
  F h = rename_free_variable(g, "v", "z");
  EXPECT_EQ(h, parse_formula("x(z) & (E v: n(v, v))", voc));
}

TEST(Formula, SizeAndErrors) {
  EXPECT_EQ(formula_size(F::verum()), 1u);
  EXPECT_EQ(formula_size(F::negation(F::atom("x", {"v"}))), 2u);
  EXPECT_THROW(F::transitive_closure("a", "a", F::verum(), "u", "v"),
               FormulaError);
  EXPECT_EQ(F::exists_sets({}, F::verum()), F::verum());
}

TEST(Vocabulary, EqualityComesFirst) {
  Vocabulary v({{"x", 1}, {"n", 2}});
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(v[v.eq()].name, "eq");
  EXPECT_EQ(v.at("n").index, 2u);
  EXPECT_EQ(v.unary().size(), 1u);
  EXPECT_THROW(v.add("x", 1), FormulaError);
  EXPECT_THROW(v.add("TC", 2), FormulaError);
  EXPECT_THROW(v.at("missing"), FormulaError);
  EXPECT_THROW(Vocabulary({{"eq", 1}}), FormulaError);
  Vocabulary w({{"n", 2}, {"x", 1}});
  EXPECT_FALSE(v == w);
  EXPECT_TRUE(v.same_signature(w));
}

}  // namespace
}  // namespace hat
