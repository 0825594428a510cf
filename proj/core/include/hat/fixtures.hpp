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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hat/structure.hpp"
#include "hat/vocabulary.hpp"

namespace hat::fixtures {

/// eq, the program-variable predicates q, is, the reachability predicates
/// r_q, and n, in that order. Default program variables are x, y, t, e.
Vocabulary list_vocabulary(const std::vector<std::string>& pvar = {"x", "y",
                                                                   "t", "e"});
/// {eq, x, r_x, n}.
Vocabulary reduced_list_vocabulary();
/// {eq, f, b}: forward and backward directions of undirected edges.
Vocabulary graph_vocabulary();

/// An acyclic list of k nodes "c1".."ck" pointed to by x, with r_x on every
/// node and every other unary predicate 0. k = 2, 3, 4 give the three
/// concrete lists used throughout the tests.
TwoValuedStructure list_chain(const Vocabulary& voc, std::size_t k);
/// Like list_chain but the last node points back to the first.
TwoValuedStructure list_cycle(const Vocabulary& voc, std::size_t k);

TwoValuedStructure s_a(const Vocabulary& voc = list_vocabulary());
TwoValuedStructure s_b(const Vocabulary& voc = list_vocabulary());
TwoValuedStructure s_c(const Vocabulary& voc = list_vocabulary());

/// The abstract list: u1 pointed to by x, summary tail u2, r_x on both,
/// n(u1,u2) = n(u2,u2) = 1/2, everything else 0.
ThreeValuedStructure s_abstract_list(const Vocabulary& voc = list_vocabulary());

/// u1 (x) -> u2, then a dotted edge into the summary tail u3; FO-identifiable
/// but not bounded.
ThreeValuedStructure s_prime(const Vocabulary& voc = list_vocabulary());
/// Node formulas for s_prime in the override-file syntax.
std::string s_prime_node_formulas();

/// Three summary nodes; f and b are 1/2 between distinct nodes, 0 on self.
ThreeValuedStructure color3();

/// The five loop-head structures of the insert program, index 1..5.
ThreeValuedStructure loop_structure(int index,
                                    const Vocabulary& voc = list_vocabulary());
std::vector<ThreeValuedStructure> loop_structures(
    const Vocabulary& voc = list_vocabulary());

/// A simple undirected graph over graph_vocabulary(): each edge {a,b} sets
/// f(a,b), f(b,a), b(a,b), b(b,a).
TwoValuedStructure undirected_graph(
    std::size_t nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges);
TwoValuedStructure graph_chain(std::size_t k);
TwoValuedStructure graph_cycle(std::size_t k);
TwoValuedStructure graph_clique(std::size_t k);

using Fixture = std::variant<TwoValuedStructure, ThreeValuedStructure>;

/// Fixture ids accepted by `build`.
std::vector<std::string> fixture_names();

/// Builds a fixture by id: "s_a", "s_b", "s_c", "s_fig_d", "s_prime",
/// "color3", "loop1".."loop5", "list_chain", "list_cycle", "graph_chain",
/// "graph_cycle", "graph_clique" (the last five take `size`). The suffix
/// "_reduced" selects the {eq, x, r_x, n} vocabulary for list fixtures.
/// Throws StructureError for unknown ids.
Fixture build(std::string_view name, std::size_t size = 0);

}  // namespace hat::fixtures
