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

#include "hat/fixtures.hpp"

#include <gtest/gtest.h>

#include "hat/abstraction.hpp"
#include "hat/error.hpp"

namespace hat {
namespace {

TEST(Fixtures, Vocabularies) {
  auto voc = fixtures::list_vocabulary();
  std::vector<std::string> names;
  for (const auto& p : voc.predicates()) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"eq", "x", "y", "t", "e", "is", "r_x",
                                             "r_y", "r_t", "r_e", "n"}));
  EXPECT_EQ(fixtures::reduced_list_vocabulary().size(), 4u);
  EXPECT_EQ(fixtures::graph_vocabulary().size(), 3u);
}

TEST(Fixtures, Lists) {
  auto sc = fixtures::s_c();
  EXPECT_EQ(sc.size(), 4u);
  EXPECT_EQ(sc.node_name(0), "c1");
  const auto& voc = sc.vocabulary();
  EXPECT_TRUE(sc.holds(voc.at("x"), {0}));
  EXPECT_TRUE(sc.holds(voc.at("n"), {2, 3}));
  EXPECT_FALSE(sc.holds(voc.at("n"), {3, 0}));
  auto cyc = fixtures::list_cycle(voc, 3);
  EXPECT_TRUE(cyc.holds(voc.at("n"), {2, 0}));
  auto s = fixtures::s_abstract_list();
  EXPECT_TRUE(s.is_summary(1));
  EXPECT_EQ(s.value(s.vocabulary().at("n"), {1, 1}), TruthValue::Half);
  EXPECT_EQ(fixtures::s_prime().size(), 3u);
}

TEST(Fixtures, LoopStructures) {
  auto xs = fixtures::loop_structures();
  ASSERT_EQ(xs.size(), 5u);
  for (const auto& s : xs) {
    EXPECT_TRUE(is_bounded(s));
    EXPECT_TRUE(validate(s).empty());
  }
  EXPECT_THROW(fixtures::loop_structure(6), StructureError);
}

TEST(Fixtures, Graphs) {
  auto g = fixtures::undirected_graph(3, {{0, 1}});
  const auto& voc = g.vocabulary();
  for (auto [a, b] : {std::pair{0u, 1u}, std::pair{1u, 0u}}) {
    EXPECT_TRUE(g.holds(voc.at("f"), {a, b}));
    EXPECT_TRUE(g.holds(voc.at("b"), {a, b}));
  }
  EXPECT_FALSE(g.holds(voc.at("f"), {1, 2}));
  EXPECT_THROW(fixtures::undirected_graph(2, {{1, 1}}), StructureError);
  EXPECT_THROW(fixtures::undirected_graph(2, {{0, 2}}), StructureError);
  EXPECT_FALSE(fixtures::graph_cycle(2).holds(voc.at("f"), {0, 0}));
  EXPECT_TRUE(fixtures::graph_clique(4).holds(voc.at("f"), {0, 3}));
}

TEST(Fixtures, BuildByName) {
  for (const auto& name : fixtures::fixture_names()) {
    EXPECT_NO_THROW(fixtures::build(name, 3)) << name;
  }
  auto r = fixtures::build("s_fig_d_reduced");
  ASSERT_EQ(r.index(), 1u);
  EXPECT_EQ(std::get<1>(r).vocabulary(), fixtures::reduced_list_vocabulary());
  EXPECT_THROW(fixtures::build("nope"), StructureError);
  EXPECT_THROW(fixtures::build("color3_reduced"), StructureError);
}

}  // namespace
}  // namespace hat
