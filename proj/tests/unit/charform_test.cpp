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

#include "hat/charform.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "../oracle.hpp"
#include "hat/abstraction.hpp"
#include "hat/enumerate.hpp"
#include "hat/error.hpp"
#include "hat/fixtures.hpp"
#include "hat/parser.hpp"
#include "hat/semantics.hpp"
#include "hat/structure_io.hpp"

namespace hat {
namespace {

using F = Formula;

TEST(TruthChar, ThreeCases) {
  Vocabulary voc({{"n", 2}, {"q", 0}});
  EXPECT_EQ(print_formula(truth_char(voc, "n", TruthValue::False, {"v1", "v2"})),
            "!n(v1,v2)");
  EXPECT_EQ(truth_char(voc, "n", TruthValue::Half, {"v1", "v2"}), F::verum());
  EXPECT_EQ(print_formula(truth_char(voc, "q", TruthValue::True, {})), "q()");
  EXPECT_THROW(truth_char(voc, "n", TruthValue::True, {"v1"}), FormulaError);
}

TEST(NodeFormulas, Bounded) {
  auto nodes = node_formulas_bounded(fixtures::s_abstract_list());
  ASSERT_EQ(nodes.formulas.size(), 2u);
  EXPECT_EQ(print_formula(nodes.formulas[0]),
            "x(w) & !y(w) & !t(w) & !e(w) & !is(w) & r_x(w) & !r_y(w) & "
            "!r_t(w) & !r_e(w)");
  EXPECT_EQ(print_formula(nodes.formulas[1]),
            "!x(w) & !y(w) & !t(w) & !e(w) & !is(w) & r_x(w) & !r_y(w) & "
            "!r_t(w) & !r_e(w)");
  EXPECT_EQ(print_formula(nodes.instantiate(0, "v")).substr(0, 5), "x(v) ");

  Vocabulary voc({{"x", 1}});
  ThreeValuedStructure one(voc, {"u"});
  one.set("x", {"u"}, TruthValue::Half);
  EXPECT_EQ(node_formulas_bounded(one).formulas[0], F::verum());

  try {
    node_formulas_bounded(fixtures::s_prime());
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("u2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("u3"), std::string::npos);
  }
}

// Counts the leaves of nested conjunctions, looking through A-blocks.
std::size_t clauses(const F& f) {
  if (auto fa = match_forall(f)) return clauses(fa->second);
  if (auto c = match_conjunction(f)) return clauses(c->first) + clauses(c->second);
  return 1;
}

bool quantifier_free(const F& f) {
  switch (f.kind()) {
    case F::Kind::Exists:
    case F::Kind::TransitiveClosure:
    case F::Kind::ExistsSets:
      return false;
    case F::Kind::Not:
      return quantifier_free(f.body());
    case F::Kind::Or:
      return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
    default:
      return true;
  }
}

// Each conjunct is a single E-block or A-block over a quantifier-free body.
bool one_block_each(const F& xi) {
  for (F c : conjuncts(xi)) {
    if (match_forall(c)) {
      while (auto fa = match_forall(c)) c = fa->second;
    } else {
      while (c.is(F::Kind::Exists)) c = c.body();
    }
    if (!quantifier_free(c)) return false;
  }
  return true;
}

TEST(CharFormula, Shape) {
  auto s = fixtures::s_abstract_list();
  auto xi = char_formula(s, node_formulas_bounded(s));
  EXPECT_TRUE(is_closed(xi));
  EXPECT_FALSE(contains_transitive_closure(xi));
  std::size_t definite = 0;
  const auto& voc = s.vocabulary();
  for (std::size_t p = 0; p < voc.size(); ++p) {
    for_each_tuple(s.size(), voc[PredicateId{p}].arity,
                   [&](std::span<const std::size_t> t) {
                     definite += is_definite(s.value(PredicateId{p}, t));
                   });
  }
  // one clause per definite tuple, plus existence and totality
  EXPECT_EQ(clauses(xi), definite + s.size() + 1);
  auto omitted = char_formula(s, node_formulas_bounded(s), {.omit_unary_blocks = true});
  EXPECT_EQ(clauses(omitted), definite - 2 * voc.unary().size() + s.size() + 1);
  EXPECT_THROW(char_formula(s, NodeFormulaMap{"w", {F::verum()}}), FormulaError);
}

TEST(CharFormula, SizeIsLinearInDefiniteValues) {
  for (const auto& s : fixtures::loop_structures()) {
    auto xi = char_formula(s, node_formulas_bounded(s));
    std::size_t definite = 0;
    const auto& voc = s.vocabulary();
    for (std::size_t p = 0; p < voc.size(); ++p) {
      for_each_tuple(s.size(), voc[PredicateId{p}].arity,
                     [&](std::span<const std::size_t> t) {
                       definite += is_definite(s.value(PredicateId{p}, t));
                     });
    }
    EXPECT_LE(clauses(xi), 2 * (definite + s.size()));
    EXPECT_FALSE(contains_transitive_closure(xi));
    EXPECT_TRUE(one_block_each(xi));
  }
}

TEST(CharFormula, SingleDefiniteNodePinsTheModel) {
  Vocabulary voc({{"x", 1}, {"n", 2}});
  ThreeValuedStructure s(voc, {"u"});
  s.set("x", {"u"}, TruthValue::True);
  s.set("n", {"u", "u"}, TruthValue::True);
  auto xi = char_formula(s, node_formulas_bounded(s));
  auto models = enumerate_structures(voc, 3, xi);
  ASSERT_EQ(models.size(), 1u);
  EXPECT_EQ(models[0].size(), 1u);
  EXPECT_TRUE(models[0].holds(voc.at("n"), {0, 0}));
}

TEST(CharFormula, EmptySetIsFalse) {
  std::vector<ThreeValuedStructure> none;
  auto g = gamma_hat(none, F::verum());
  EXPECT_EQ(g, F::conjunction(F::verum(), F::falsum()));
  auto gc = gamma_hat_c(none, F::verum());
  EXPECT_EQ(gc, g);
}

TEST(Tau, SixWitnessConjuncts) {
  auto s = fixtures::s_abstract_list();
  auto xi = char_formula(s, node_formulas_bounded(s));
  auto tau = tau_formula(s);
  auto parts = conjuncts(tau);
  auto base = conjuncts(xi);
  ASSERT_EQ(parts.size(), base.size() + 6);
  std::multiset<std::string> extra;
  for (std::size_t i = base.size(); i < parts.size(); ++i) {
    ASSERT_TRUE(parts[i].is(F::Kind::Exists));
    auto text = print_formula(parts[i]);
    extra.insert(text.substr(text.rfind("& ") + 2));
  }
  EXPECT_EQ(extra, (std::multiset<std::string>{"eq(w1,w2)", "!eq(w1,w2)",
                                               "n(w1,w2)", "!n(w1,w2)",
                                               "n(w1,w2)", "!n(w1,w2)"}));
  auto F_list = build_F_list(s.vocabulary(), {"x", "y", "t", "e"});
  auto tight = F::conjunction(F_list, tau);
  EXPECT_FALSE(eval2(fixtures::s_a(), tight));
  EXPECT_TRUE(eval2(fixtures::s_b(), tight));
  EXPECT_THROW(tau_formula(fixtures::s_prime()), PreconditionError);

  // no 1/2 of arity >= 2: tau is xi
  auto beta = canonical_abstraction(fixtures::s_a()).structure;
  EXPECT_EQ(tau_formula(beta), char_formula(beta, node_formulas_bounded(beta)));
}

TEST(NpCharFormula, ColorStructure) {
  auto g = np_char_formula(fixtures::color3());
  ASSERT_TRUE(g.is(F::Kind::ExistsSets));
  EXPECT_EQ(g.variables(), (std::vector<std::string>{"$V1", "$V2", "$V3"}));
  auto parts = conjuncts(g.body());
  // 3 non-empty, 6 disjoint, totality, then the eq, f, b blocks
  ASSERT_EQ(parts.size(), 3u + 6u + 1u + 3u);
  EXPECT_EQ(print_formula(parts[0]), "E w: w in $V1");
  EXPECT_EQ(print_formula(parts[3]), "A w1,w2: w1 in $V1 & w2 in $V2 -> !eq(w1,w2)");
  EXPECT_EQ(print_formula(parts[9]), "A w: w in $V1 | w in $V2 | w in $V3");
  EXPECT_EQ(print_formula(parts[11]),
            "A w1,w2: (w1 in $V1 & w2 in $V1 -> !f(w1,w2)) & (w1 in $V2 & w2 in "
            "$V2 -> !f(w1,w2)) & (w1 in $V3 & w2 in $V3 -> !f(w1,w2))");
  EXPECT_TRUE(eval_mso(fixtures::graph_cycle(3), g));
  EXPECT_FALSE(eval_mso(fixtures::graph_clique(4), g));

  Vocabulary voc({{"x", 1}});
  ThreeValuedStructure one(voc, {"u"});
  auto h = np_char_formula(one);
  EXPECT_EQ(h.variables(), std::vector<std::string>{"$V1"});
}

// Over the reduced vocabulary both characterizations have the same models.
TEST(NpCharFormula, SameModelsAsFirstOrder) {
  auto voc = fixtures::reduced_list_vocabulary();
  auto F_list = build_F_list(voc, {"x"});
  for (auto s : {fixtures::s_abstract_list(voc),
                 ThreeValuedStructure::from(fixtures::s_a(voc))}) {
    std::vector<ThreeValuedStructure> xs{s};
    CompiledFormula fo(gamma_hat(xs, F_list), voc);
    CompiledFormula np(gamma_hat_np(xs, F_list), voc);
    StructureEnumerator e(voc, {.max_nodes = 3});
    while (e.next()) {
      EXPECT_EQ(fo.evaluate(e.current()), np.evaluate(e.current()))
          << write_structure(e.current());
    }
  }
}

TEST(Characterize, Modes) {
  auto s = fixtures::s_abstract_list();
  std::vector<ThreeValuedStructure> xs{s};
  auto F_list = build_F_list(s.vocabulary(), {"x", "y", "t", "e"});
  EXPECT_EQ(characterize(xs, F_list, CharacterizationMode::FirstOrder),
            gamma_hat(xs, F_list));
  EXPECT_EQ(characterize(xs, F_list, CharacterizationMode::Canonical),
            gamma_hat_c(xs, F_list));
  EXPECT_EQ(characterize(xs, F_list, CharacterizationMode::NP),
            gamma_hat_np(xs, F_list));
  EXPECT_EQ(to_string(CharacterizationMode::Canonical), "canonical");
  EXPECT_EQ(parse_mode("np"), CharacterizationMode::NP);
  EXPECT_FALSE(parse_mode("so"));

  // a concrete structure whose nodes look alike falls back to sets
  std::vector<ThreeValuedStructure> graph{
      ThreeValuedStructure::from(fixtures::graph_chain(3))};
  auto g = characterize(graph, F::verum(), CharacterizationMode::FirstOrder);
  EXPECT_EQ(g, gamma_hat_np(graph, F::verum()));
  std::vector<ThreeValuedStructure> prime{fixtures::s_prime()};
  EXPECT_THROW(characterize(prime, F::verum(), CharacterizationMode::FirstOrder),
               PreconditionError);
}

TEST(NodeFormulaFile, Parse) {
  auto s = fixtures::s_prime();
  auto map = parse_node_formulas(fixtures::s_prime_node_formulas(), s);
  ASSERT_EQ(map.formulas.size(), 3u);
  EXPECT_EQ(print_formula(map.formulas[0]),
            "x(w) & r_x(w) & !y(w) & !t(w) & !e(w) & !r_y(w) & !r_t(w) & !r_e(w) & "
            "!is(w)");
  auto partial = parse_node_formulas("# only u3\nnodeformula u3 := 0\n", s);
  EXPECT_EQ(partial.formulas[0], unary_node_formulas(s).formulas[0]);
  EXPECT_EQ(partial.formulas[2], F::falsum());
  EXPECT_EQ(free_variables(map.formulas[1]), std::set<std::string>{"w"});
  EXPECT_THROW(parse_node_formulas("nodeformula u9 := 1", s), StructureError);
  EXPECT_THROW(parse_node_formulas("nodeformula u1 := 1\nnodeformula u1 := 1", s),
               StructureError);
  EXPECT_THROW(parse_node_formulas("node u1 = 1", s), StructureError);
  EXPECT_THROW(parse_node_formulas("nodeformula u1 := x(", s), ParseError);
  // instantiation must not capture the designated variable
  auto u2 = map.instantiate(1, "w1");
  EXPECT_EQ(free_variables(u2), std::set<std::string>{"w1"});
}

TEST(ListFormulas, Integrity) {
  auto voc = fixtures::list_vocabulary();
  auto F_list = build_F_list(voc, {"x", "y", "t", "e"});
  EXPECT_EQ(conjuncts(F_list).size(), 10u);
  EXPECT_EQ(print_formula(conjuncts(F_list)[5]),
            "A v: is(v) <-> (E v1,v2: !eq(v1,v2) & n(v1,v) & n(v2,v))");
  EXPECT_EQ(print_formula(conjuncts(F_list)[6]),
            "A v: r_x(v) <-> (E v1: x(v1) & n*(v1,v))");
  auto Fx = build_F_list(voc, {"x"});
  EXPECT_EQ(conjuncts(Fx).size(), 4u);
  EXPECT_EQ(conjuncts(build_F_list(fixtures::reduced_list_vocabulary(), {"x"})).size(),
            3u);
  EXPECT_THROW(build_F_list(fixtures::reduced_list_vocabulary(), {"y"}), FormulaError);
  for (auto s : {fixtures::s_a(), fixtures::s_b(), fixtures::s_c()}) {
    EXPECT_TRUE(eval2(s, F_list));
  }
  auto bad = fixtures::s_b();
  bad.set("x", {"c2"}, true);
  EXPECT_FALSE(eval2(bad, F_list));
  EXPECT_EQ(functional_predicates(F_list, voc), std::vector<PredicateId>{voc.at("n")});
}

TEST(ListFormulas, Queries) {
  auto voc = fixtures::list_vocabulary();
  auto q = build_listx_queries(voc);
  EXPECT_EQ(print_formula(q.acyclic), "A v1,v2: r_x(v1) & n+(v1,v2) -> !n+(v2,v1)");
  EXPECT_EQ(q.list, F::conjunction(q.acyclic, q.unshared));
  EXPECT_TRUE(eval2(fixtures::s_a(), q.list));
  EXPECT_FALSE(eval2(fixtures::list_cycle(voc, 2), q.acyclic));
  EXPECT_TRUE(eval2(fixtures::s_c(), q.unshared));
  auto shared = fixtures::list_cycle(voc, 3);
  shared.set("n", {"c3", "c1"}, false);
  shared.set("n", {"c1", "c3"}, true);
  EXPECT_FALSE(eval2(shared, q.unshared));
  EXPECT_EQ(print_formula(query_next_not_null(voc)), "E v1,v2: x(v1) & n(v1,v2)");
  EXPECT_EQ(print_formula(query_has_last(voc)), "E v1: A v2: !n(v1,v2)");
}

// No concrete node of a member satisfies two node formulas.
void check_unique(const ThreeValuedStructure& s, const NodeFormulaMap& nodes,
                  const F& integrity, std::size_t bound) {
  CompiledFormula cf(integrity, s.vocabulary());
  std::vector<CompiledFormula> node_fs;
  for (std::size_t u = 0; u < s.size(); ++u) {
    node_fs.emplace_back(nodes.formulas[u], s.vocabulary());
  }
  std::size_t members = 0;
  for_each_embedded_structure(s, bound, [&](const TwoValuedStructure& c,
                                            const EmbeddingWitness& w) {
    if (!eval2(c, cf)) return true;
    ++members;
    for (std::size_t v = 0; v < c.size(); ++v) {
      Assignment z;
      z.bind(nodes.variable, v);
      std::size_t hits = 0;
      for (std::size_t u = 0; u < s.size(); ++u) {
        bool sat = eval2(c, node_fs[u], z);
        hits += sat;
        if (sat) EXPECT_EQ(u, w.image[v]);
      }
      EXPECT_EQ(hits, 1u) << write_structure(c);
    }
    return true;
  });
  EXPECT_GT(members, 0u);
}

TEST(UniqueNodeFormulas, BoundedFixtures) {
  auto voc = fixtures::list_vocabulary();
  auto F_list = build_F_list(voc, {"x", "y", "t", "e"});
  std::vector<ThreeValuedStructure> xs{fixtures::s_abstract_list(voc)};
  for (auto s : fixtures::loop_structures(voc)) xs.push_back(s);
  for (auto s : {fixtures::s_a(voc), fixtures::s_b(voc), fixtures::s_c(voc)}) {
    xs.push_back(canonical_abstraction(s).structure);
  }
  for (const auto& s : xs) {
    check_unique(s, node_formulas_bounded(s), F_list, std::min<std::size_t>(s.size() + 2, 5));
  }
}

TEST(UniqueNodeFormulas, UserNodeFormulas) {
  auto s = fixtures::s_prime();
  auto F_list = build_F_list(s.vocabulary(), {"x", "y", "t", "e"});
  check_unique(s, parse_node_formulas(fixtures::s_prime_node_formulas(), s), F_list,
               5);
}

}  // namespace
}  // namespace hat
