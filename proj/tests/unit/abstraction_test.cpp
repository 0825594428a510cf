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

#include "hat/abstraction.hpp"

#include <gtest/gtest.h>

#include <set>

#include "../oracle.hpp"
#include "hat/charform.hpp"
#include "hat/enumerate.hpp"
#include "hat/error.hpp"
#include "hat/fixtures.hpp"
#include "hat/structure_io.hpp"

namespace hat {
namespace {

TEST(Embedding, ListIntoAbstractList) {
  auto s = fixtures::s_abstract_list();
  auto sb = fixtures::s_b();
  auto w = find_embedding(sb, s);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->image, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_TRUE(is_embedding(sb, s, *w));
  EXPECT_FALSE(is_embedding(sb, s, {{1, 1, 1}}));  // x(c1) = 1 but x(u2) = 0
  EXPECT_FALSE(is_embedding(sb, s, {{0, 1}}));
  for (auto c : {fixtures::s_a(), fixtures::s_c()}) {
    EXPECT_TRUE(find_embedding(c, s));
  }
  auto single = fixtures::list_chain(fixtures::list_vocabulary(), 1);
  EXPECT_FALSE(find_embedding(single, s));  // not surjective
  EXPECT_FALSE(find_embedding(fixtures::list_cycle(fixtures::list_vocabulary(), 3), s));
}

TEST(Embedding, Budget) {
  auto g = fixtures::graph_clique(5);
  EXPECT_THROW(find_embedding(g, fixtures::color3(), {.budget = 3}),
               BudgetExceeded);
}

TEST(Embedding, AgreesWithExhaustiveMaps) {
  Vocabulary voc({{"x", 1}, {"n", 2}});
  ThreeValuedStructure a(voc, {"u1", "u2"});
  a.set_summary(1);
  a.set("x", {"u1"}, TruthValue::True);
  a.set("x", {"u2"}, TruthValue::Half);
  a.set("n", {"u1", "u2"}, TruthValue::Half);
  a.set("n", {"u2", "u2"}, TruthValue::Half);
  a.set("n", {"u2", "u1"}, TruthValue::True);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& c : oracle::all_structures(voc, n)) {
      auto w = find_embedding(c, a);
      ASSERT_EQ(w.has_value(), oracle::embeds(c, a)) << write_structure(c);
      if (w) EXPECT_TRUE(is_embedding(c, a, *w));
    }
  }
}

TEST(CanonicalAbstraction, ListOfThree) {
  auto beta = canonical_abstraction(fixtures::s_b());
  EXPECT_EQ(beta.structure, fixtures::s_abstract_list());
  EXPECT_EQ(beta.map, (std::vector<std::size_t>{0, 1, 1}));
  ASSERT_EQ(beta.names.size(), 2u);
  EXPECT_EQ(beta.names[0].true_predicates, (std::set<std::string>{"r_x", "x"}));
  EXPECT_EQ(beta.names[1].true_predicates, std::set<std::string>{"r_x"});
  EXPECT_EQ(beta.names[1].to_string(),
            "({r_x}, {e, is, r_e, r_t, r_y, t, x, y})");
  EXPECT_EQ(canonical_abstraction(fixtures::s_c()).structure,
            fixtures::s_abstract_list());
  // two nodes: no summary, n(u1,u2) definite
  auto a = canonical_abstraction(fixtures::s_a()).structure;
  EXPECT_FALSE(a.is_summary(1));
  EXPECT_EQ(a.value(a.vocabulary().at("n"), {0, 1}), TruthValue::True);
}

TEST(CanonicalAbstraction, ImageEmbedsItsSource) {
  auto voc = fixtures::reduced_list_vocabulary();
  StructureEnumerator e(voc, {.max_nodes = 3});
  while (e.next()) {
    auto beta = canonical_abstraction(e.current());
    EXPECT_TRUE(is_embedding(e.current(), beta.structure, {beta.map}));
    EXPECT_TRUE(is_bounded(beta.structure));
    EXPECT_TRUE(ica_check(beta.structure).empty());
    EXPECT_TRUE(isomorphic_by_canonical_names(beta.structure, beta.structure));
  }
}

TEST(Ica, Checks) {
  EXPECT_TRUE(is_bounded(fixtures::s_abstract_list()));
  EXPECT_FALSE(is_bounded(fixtures::s_prime()));
  EXPECT_FALSE(is_bounded(fixtures::color3()));
  EXPECT_TRUE(ica_check(fixtures::s_abstract_list()).empty());
  auto v = ica_check(fixtures::s_prime());
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].rule, "bounded");
  auto s = fixtures::s_abstract_list();
  s.set("y", {"u1"}, TruthValue::Half);
  v = ica_check(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "definite-unary");
}

TEST(Ica, TightConcretization) {
  auto s = fixtures::s_abstract_list();
  auto F = build_F_list(s.vocabulary(), {"x", "y", "t", "e"});
  EXPECT_FALSE(in_gamma_c(fixtures::s_a(), s, F));
  EXPECT_TRUE(in_gamma_c(fixtures::s_b(), s, F));
  EXPECT_TRUE(in_gamma_c(fixtures::s_c(), s, F));
  EXPECT_TRUE(in_gamma(fixtures::s_a(), s, F));
  EXPECT_TRUE(in_ica_complement(fixtures::s_a(), s, F));
  EXPECT_FALSE(in_ica_complement(fixtures::s_b(), s, F));
  EXPECT_THROW(in_gamma_c(fixtures::s_a(), fixtures::s_prime(), F),
               PreconditionError);
  auto w = find_ica_witness(s, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->size(), 3u);
  EXPECT_FALSE(find_ica_witness(s, 2));
}

// Frozen from the exhaustive reference run.
constexpr std::size_t kEmbeddedListsUpTo3 = 200;

TEST(EmbeddedStructures, MatchesFilteredEnumeration) {
  auto voc = fixtures::reduced_list_vocabulary();
  auto s = fixtures::s_abstract_list(voc);
  std::set<std::string> generated;
  for_each_embedded_structure(s, 3, [&](const TwoValuedStructure& c,
                                        const EmbeddingWitness& w) {
    EXPECT_TRUE(is_embedding(c, s, w));
    EXPECT_TRUE(generated.insert(write_structure(c)).second);
    return true;
  });
  std::set<std::string> expected;
  StructureEnumerator e(voc, {.max_nodes = 3});
  while (e.next()) {
    if (oracle::embeds(e.current(), s)) expected.insert(write_structure(e.current()));
  }
  EXPECT_EQ(generated, expected);
  EXPECT_EQ(expected.size(), kEmbeddedListsUpTo3);

  // an unbounded structure goes through the deduplicating path
  std::set<std::string> color;
  for_each_embedded_structure(fixtures::color3(), 3,
                              [&](const TwoValuedStructure& c, const EmbeddingWitness&) {
                                EXPECT_TRUE(color.insert(write_structure(c)).second);
                                return true;
                              });
  std::size_t brute = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& c : oracle::all_structures(fixtures::graph_vocabulary(), n)) {
      brute += oracle::embeds(c, fixtures::color3());
    }
  }
  EXPECT_EQ(color.size(), brute);
}

}  // namespace
}  // namespace hat
