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

#include "hat/parser.hpp"

#include <gtest/gtest.h>

#include "hat/error.hpp"
#include "hat/fixtures.hpp"
#include "hat/random_formula.hpp"

namespace hat {
namespace {

using F = Formula;

class ParserTest : public ::testing::Test {
 protected:
  Vocabulary voc{{{"x", 1}, {"y", 1}, {"r_x", 1}, {"n", 2}, {"c", 0}}};
  F p(std::string_view s) { return parse_formula(s, voc); }
  F x(const char* v) { return F::atom("x", {v}); }
  F y(const char* v) { return F::atom("y", {v}); }
};

TEST_F(ParserTest, Precedence) {
  EXPECT_EQ(p("x(a) | y(a) & x(b)"),
            F::disjunction(x("a"), F::conjunction(y("a"), x("b"))));
  EXPECT_EQ(p("!x(a) & y(a)"), F::conjunction(F::negation(x("a")), y("a")));
  EXPECT_EQ(p("x(a) | y(a) -> x(b)"),
            F::implication(F::disjunction(x("a"), y("a")), x("b")));
  EXPECT_EQ(p("x(a) -> y(a) -> x(b)"),
            F::implication(x("a"), F::implication(y("a"), x("b"))));
  EXPECT_EQ(p("x(a) <-> y(a) -> x(b)"),
            F::equivalence(x("a"), F::implication(y("a"), x("b"))));
  EXPECT_EQ(p("x(a) & y(a) & x(b)"),
            F::conjunction(F::conjunction(x("a"), y("a")), x("b")));
}

TEST_F(ParserTest, QuantifiersExtendRight) {
  EXPECT_EQ(p("E v: x(v) & y(v)"),
            F::exists("v", F::conjunction(x("v"), y("v"))));
  EXPECT_EQ(p("x(a) & E v: x(v) | y(v)"),
            F::conjunction(x("a"), F::exists("v", F::disjunction(x("v"), y("v")))));
  EXPECT_EQ(p("A u, v: n(u, v)"),
            F::forall(std::vector<std::string>{"u", "v"}, F::atom("n", {"u", "v"})));
}

TEST_F(ParserTest, ClosureForms) {
  EXPECT_EQ(p("n+(a, b)"), F::plus("n", "a", "b"));
  EXPECT_EQ(p("n*(a, b)"), F::star("n", "eq", "a", "b"));
  EXPECT_EQ(p("TC(u, v; n(v, u))(a, b)"),
            F::transitive_closure("u", "v", F::atom("n", {"v", "u"}), "a", "b"));
}

TEST_F(ParserTest, ConstantsNullaryAndComments) {
  EXPECT_EQ(p("1"), F::verum());
  EXPECT_EQ(p("0 | c()"), F::disjunction(F::falsum(), F::atom("c", {})));
  EXPECT_EQ(p("c"), F::atom("c", {}));
  EXPECT_EQ(p("x(a) # trailing\n & y(a)"), F::conjunction(x("a"), y("a")));
}

TEST_F(ParserTest, SetSyntaxIsGated) {
  try {
    p("ES $S: E v: v in $S");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ParseError::Code::SetOutsideNp);
  }
  F f = parse_formula("ES $S, $T: E v: v in $S & !(v in $T)", voc, {true});
  ASSERT_TRUE(f.is(F::Kind::ExistsSets));
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"$S", "$T"}));
}

TEST_F(ParserTest, Errors) {
  auto code = [&](std::string_view s) {
    try {
      p(s);
    } catch (const ParseError& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error for " << s;
    return ParseError::Code::Syntax;
  };
  EXPECT_EQ(code("z(a)"), ParseError::Code::UnknownPredicate);
  EXPECT_EQ(code("n(a)"), ParseError::Code::ArityMismatch);
  EXPECT_EQ(code("x(a) &"), ParseError::Code::Syntax);
  EXPECT_EQ(code("(x(a)"), ParseError::Code::Syntax);
  EXPECT_EQ(code("E : x(a)"), ParseError::Code::Syntax);
  EXPECT_EQ(code("x(a) y(a)"), ParseError::Code::Syntax);
  try {
    p("x(a) &\n  @");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(e.offset(), 9u);
  }
}

TEST_F(ParserTest, PrinterResugars) {
  for (const char* text : {
           "A v: x(v) -> r_x(v)",
           "E u,v: n(u,v) & !eq(u,v)",
           "x(a) <-> y(a)",
           "n*(a,b) | n+(b,a)",
           "TC(u,v; n(v,u))(a,b)",
           "(x(a) -> y(a)) -> x(b)",
           "x(a) & (y(a) & x(b))",
           "!(E v: x(v))",
           "c() | 0",
       }) {
    EXPECT_EQ(print_formula(p(text)), text);
  }
}

// Printing then parsing gives back the same tree.
TEST(ParsePrintRoundTrip, RandomFormulas) {
  auto voc = fixtures::list_vocabulary({"x", "y"});
  voc.add("c", 0);
  voc.add("t3", 3);
  for (bool sets : {false, true}) {
    RandomFormulaOptions opts;
    opts.allow_sets = sets;
    RandomFormulaGenerator gen(voc, sets ? 7 : 11, opts);
    for (int i = 0; i < 1000; ++i) {
      F f = gen.next();
      std::string text = print_formula(f);
      F back = parse_formula(text, voc, {sets});
      ASSERT_EQ(back, f) << text;
      EXPECT_EQ(print_formula(back), text);
    }
  }
}

}  // namespace
}  // namespace hat
