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

#include "hat/error.hpp"

namespace hat::fixtures {

namespace {

constexpr TruthValue kHalf = TruthValue::Half;
constexpr TruthValue kOne = TruthValue::True;

std::vector<std::string> names(const std::string& prefix, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

ThreeValuedStructure abstract(const Vocabulary& voc, std::size_t k) {
  return ThreeValuedStructure(voc, names("u", k));
}

}  // namespace

Vocabulary list_vocabulary(const std::vector<std::string>& pvar) {
  Vocabulary voc;
  for (const auto& q : pvar) voc.add(q, 1);
  voc.add("is", 1);
  for (const auto& q : pvar) voc.add("r_" + q, 1);
  voc.add("n", 2);
  return voc;
}

Vocabulary reduced_list_vocabulary() {
  return Vocabulary({{"x", 1}, {"r_x", 1}, {"n", 2}});
}

Vocabulary graph_vocabulary() { return Vocabulary({{"f", 2}, {"b", 2}}); }

TwoValuedStructure list_chain(const Vocabulary& voc, std::size_t k) {
  TwoValuedStructure s(voc, names("c", k));
  auto x = voc.at("x"), rx = voc.at("r_x"), n = voc.at("n");
  for (std::size_t i = 0; i < k; ++i) {
    s.set(rx, {i}, true);
    if (i + 1 < k) s.set(n, {i, i + 1}, true);
  }
  if (k > 0) s.set(x, {0}, true);
  return s;
}

TwoValuedStructure list_cycle(const Vocabulary& voc, std::size_t k) {
  auto s = list_chain(voc, k);
  if (k > 0) s.set(voc.at("n"), {k - 1, 0}, true);
  return s;
}

TwoValuedStructure s_a(const Vocabulary& voc) { return list_chain(voc, 2); }
TwoValuedStructure s_b(const Vocabulary& voc) { return list_chain(voc, 3); }
TwoValuedStructure s_c(const Vocabulary& voc) { return list_chain(voc, 4); }

ThreeValuedStructure s_abstract_list(const Vocabulary& voc) {
  auto s = abstract(voc, 2);
  s.set_summary(1);
  s.set("x", {"u1"}, kOne);
  s.set("r_x", {"u1"}, kOne);
  s.set("r_x", {"u2"}, kOne);
  s.set("n", {"u1", "u2"}, kHalf);
  s.set("n", {"u2", "u2"}, kHalf);
  return s;
}

ThreeValuedStructure s_prime(const Vocabulary& voc) {
  auto s = abstract(voc, 3);
  s.set_summary(2);
  s.set("x", {"u1"}, kOne);
  for (auto u : {"u1", "u2", "u3"}) s.set("r_x", {u}, kOne);
  s.set("n", {"u1", "u2"}, kOne);
  s.set("n", {"u2", "u3"}, kHalf);
  s.set("n", {"u3", "u3"}, kHalf);
  return s;
}

std::string s_prime_node_formulas() {
  const std::string rest =
      "r_x(w) & !y(w) & !t(w) & !e(w) & !r_y(w) & !r_t(w) & !r_e(w) & !is(w)";
  return "nodeformula u1 := x(w) & " + rest +
         "\n"
         "nodeformula u2 := (E w1: x(w1) & n(w1,w)) & !x(w) & " +
         rest +
         "\n"
         "nodeformula u3 := !(E w1: x(w1) & n(w1,w)) & !x(w) & " +
         rest + "\n";
}

ThreeValuedStructure color3() {
  auto s = abstract(graph_vocabulary(), 3);
  for (std::size_t u = 0; u < 3; ++u) {
    s.set_summary(u);
    for (std::size_t w = 0; w < 3; ++w) {
      if (u == w) continue;
      s.set(s.vocabulary().at("f"), {u, w}, kHalf);
      s.set(s.vocabulary().at("b"), {u, w}, kHalf);
    }
  }
  return s;
}

ThreeValuedStructure loop_structure(int index, const Vocabulary& voc) {
  auto mark = [](ThreeValuedStructure& s, const char* node,
                 std::initializer_list<const char*> preds) {
    for (auto p : preds) s.set(p, {node}, kOne);
  };
  switch (index) {
    case 1: {
      auto s = abstract(voc, 2);
      s.set_summary(1);
      mark(s, "u1", {"x", "y", "r_x", "r_y"});
      mark(s, "u2", {"r_x", "r_y"});
      s.set("n", {"u1", "u2"}, kHalf);
      s.set("n", {"u2", "u2"}, kHalf);
      return s;
    }
    case 2: {
      auto s = abstract(voc, 2);
      mark(s, "u1", {"x", "r_x"});
      mark(s, "u2", {"y", "r_x", "r_y"});
      s.set("n", {"u1", "u2"}, kOne);
      return s;
    }
    case 3: {
      auto s = abstract(voc, 3);
      s.set_summary(2);
      mark(s, "u1", {"x", "r_x"});
      mark(s, "u2", {"y", "r_x", "r_y"});
      mark(s, "u3", {"r_x", "r_y"});
      s.set("n", {"u1", "u2"}, kOne);
      s.set("n", {"u2", "u3"}, kHalf);
      s.set("n", {"u3", "u3"}, kHalf);
      return s;
    }
    case 4: {
      auto s = abstract(voc, 4);
      s.set_summary(1);
      s.set_summary(3);
      mark(s, "u1", {"x", "r_x"});
      mark(s, "u2", {"r_x"});
      mark(s, "u3", {"y", "r_x", "r_y"});
      mark(s, "u4", {"r_x", "r_y"});
      for (auto [a, b] : {std::pair{"u1", "u2"}, {"u2", "u2"}, {"u2", "u3"},
                          {"u3", "u4"}, {"u4", "u4"}}) {
        s.set("n", {a, b}, kHalf);
      }
      return s;
    }
    case 5: {
      auto s = abstract(voc, 3);
      s.set_summary(1);
      mark(s, "u1", {"x", "r_x"});
      mark(s, "u2", {"r_x"});
      mark(s, "u3", {"y", "r_x", "r_y"});
      for (auto [a, b] :
           {std::pair{"u1", "u2"}, {"u2", "u2"}, {"u2", "u3"}}) {
        s.set("n", {a, b}, kHalf);
      }
      return s;
    }
    default:
      throw StructureError("loop structures are numbered 1 to 5");
  }
}

std::vector<ThreeValuedStructure> loop_structures(const Vocabulary& voc) {
  std::vector<ThreeValuedStructure> out;
  for (int i = 1; i <= 5; ++i) out.push_back(loop_structure(i, voc));
  return out;
}

TwoValuedStructure undirected_graph(
    std::size_t nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto s = TwoValuedStructure::with_canonical_nodes(graph_vocabulary(), nodes);
  auto f = s.vocabulary().at("f"), b = s.vocabulary().at("b");
  for (auto [u, w] : edges) {
    if (u >= nodes || w >= nodes) throw StructureError("edge out of range");
    if (u == w) throw StructureError("self-loops are not simple edges");
    for (auto p : {f, b}) {
      s.set(p, {u, w}, true);
      s.set(p, {w, u}, true);
    }
  }
  return s;
}

TwoValuedStructure graph_chain(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return undirected_graph(k, edges);
}

TwoValuedStructure graph_cycle(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  if (k >= 3) edges.emplace_back(k - 1, 0);
  return undirected_graph(k, edges);
}

TwoValuedStructure graph_clique(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return undirected_graph(k, edges);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  const std::vector<std::string> list = {"s_a",     "s_b",        "s_c",
                                         "s_fig_d", "s_prime",    "list_chain",
                                         "list_cycle"};
  for (const auto& n : list) out.push_back(n);
  out.push_back("color3");
  for (int i = 1; i <= 5; ++i) out.push_back("loop" + std::to_string(i));
  for (const auto& n : {"graph_chain", "graph_cycle", "graph_clique"}) {
    out.push_back(n);
  }
  for (const auto& n : list) out.push_back(n + "_reduced");
  return out;
}

Fixture build(std::string_view name, std::size_t size) {
  std::string base(name);
  Vocabulary voc = list_vocabulary();
  const std::string suffix = "_reduced";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base.resize(base.size() - suffix.size());
    voc = reduced_list_vocabulary();
    if (base.rfind("loop", 0) == 0 || base == "color3" ||
        base.rfind("graph_", 0) == 0) {
      throw StructureError("fixture '" + base + "' has no reduced form");
    }
  }
  if (base == "s_a") return s_a(voc);
  if (base == "s_b") return s_b(voc);
  if (base == "s_c") return s_c(voc);
  if (base == "s_fig_d") return s_abstract_list(voc);
  if (base == "s_prime") return s_prime(voc);
  if (base == "list_chain") return list_chain(voc, size);
  if (base == "list_cycle") return list_cycle(voc, size);
  if (base == "color3") return color3();
  if (base == "graph_chain") return graph_chain(size);
  if (base == "graph_cycle") return graph_cycle(size);
  if (base == "graph_clique") return graph_clique(size);
  if (base.size() == 5 && base.rfind("loop", 0) == 0 && base[4] >= '1' &&
      base[4] <= '5') {
    return loop_structure(base[4] - '0', voc);
  }
  throw StructureError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace hat::fixtures
