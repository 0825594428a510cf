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

#include <algorithm>
#include <sstream>

#include "hat/abstraction.hpp"
#include "hat/error.hpp"
#include "hat/parser.hpp"

namespace hat {

Formula NodeFormulaMap::instantiate(std::size_t u,
                                    const std::string& var) const {
  if (u >= formulas.size()) throw FormulaError("no node formula for node");
  return rename_free_variable(formulas[u], variable, var);
}

Formula truth_char(const Vocabulary& voc, std::string_view predicate,
                   TruthValue b, const std::vector<std::string>& vars) {
  auto id = voc.at(predicate);
  if (voc[id].arity != vars.size()) {
    throw FormulaError("predicate '" + std::string(predicate) +
                       "' has arity " + std::to_string(voc[id].arity) +
                       ", given " + std::to_string(vars.size()));
  }
  switch (b) {
    case TruthValue::False:
      return Formula::negation(Formula::atom(std::string(predicate), vars));
    case TruthValue::True:
      return Formula::atom(std::string(predicate), vars);
    case TruthValue::Half:
      break;
  }
  return Formula::verum();
}

NodeFormulaMap unary_node_formulas(const ThreeValuedStructure& s) {
  const auto& voc = s.vocabulary();
  NodeFormulaMap map;
  for (std::size_t u = 0; u < s.size(); ++u) {
    std::vector<Formula> parts;
    for (auto p : voc.unary()) {
      parts.push_back(truth_char(voc, voc[p].name, s.unary_truth(p, u),
                                 {map.variable}));
    }
    map.formulas.push_back(conjoin(parts));
  }
  return map;
}

NodeFormulaMap node_formulas_bounded(const ThreeValuedStructure& s) {
  if (!is_bounded(s)) {
    std::vector<Violation> pairs;
    for (auto& v : ica_check(s)) {
      if (v.rule == "bounded") pairs.push_back(std::move(v));
    }
    std::string message = "structure is not bounded";
    if (!pairs.empty()) {
      message += ": nodes " + pairs[0].tuple[0] + " and " + pairs[0].tuple[1] +
                 " are indistinguishable";
    }
    throw PreconditionError(message, std::move(pairs));
  }
  return unary_node_formulas(s);
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= r; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Formula nullary_part(const ThreeValuedStructure& s) {
  const auto& voc = s.vocabulary();
  std::vector<Formula> parts;
  for (auto p : voc.of_arity(0)) {
    parts.push_back(
        truth_char(voc, voc[p].name, s.truth_unchecked(p, nullptr), {}));
  }
  return conjoin(parts);
}

Formula totality(const ThreeValuedStructure& s, const NodeFormulaMap& nodes) {
  std::vector<Formula> cases;
  for (std::size_t u = 0; u < s.size(); ++u) {
    cases.push_back(nodes.instantiate(u, "w"));
  }
  return Formula::forall("w", disjoin(cases));
}

// A w1..wr: AND over tuples with definite value of
//   node(w1) & ... & node(wr) -> p^value(w1..wr)
void predicate_blocks(const ThreeValuedStructure& s,
                      const NodeFormulaMap& nodes, bool include_unary,
                      std::vector<Formula>& out) {
  const auto& voc = s.vocabulary();
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    std::size_t r = voc[p].arity;
    if (r == 0 || (r == 1 && !include_unary)) continue;
    auto vars = numbered("w", r);
    std::vector<Formula> block;
    for_each_tuple(s.size(), r, [&](auto t) {
      TruthValue v = s.truth_unchecked(p, t.data());
      if (!is_definite(v)) return;
      std::vector<Formula> guard;
      for (std::size_t j = 0; j < r; ++j) {
        guard.push_back(nodes.instantiate(t[j], vars[j]));
      }
      block.push_back(Formula::implication(
          conjoin(guard), truth_char(voc, voc[p].name, v, vars)));
    });
    if (block.empty()) continue;
    out.push_back(Formula::forall(vars, conjoin(block)));
  }
}

void check_cover(const ThreeValuedStructure& s, const NodeFormulaMap& nodes) {
  if (nodes.formulas.size() != s.size()) {
    throw FormulaError("node formulas cover " +
                       std::to_string(nodes.formulas.size()) + " of " +
                       std::to_string(s.size()) + " nodes");
  }
  for (const auto& f : nodes.formulas) {
    auto fv = free_variables(f);
    if (fv.size() > 1 || (fv.size() == 1 && !fv.count(nodes.variable))) {
      throw FormulaError("node formula '" + print_formula(f) +
                         "' has free variables other than " + nodes.variable);
    }
  }
}

}  // namespace

Formula char_formula(const ThreeValuedStructure& s, const NodeFormulaMap& nodes,
                     const CharFormulaOptions& options) {
  check_cover(s, nodes);
  std::vector<Formula> parts;
  for (std::size_t u = 0; u < s.size(); ++u) {
    parts.push_back(Formula::exists("v", nodes.instantiate(u, "v")));
  }
  parts.push_back(totality(s, nodes));
  parts.push_back(nullary_part(s));
  predicate_blocks(s, nodes, !options.omit_unary_blocks, parts);
  return conjoin(parts);
}

Formula gamma_hat(std::span<const ThreeValuedStructure> xs,
                  std::span<const NodeFormulaMap> node_maps,
                  const Formula& integrity, const CharFormulaOptions& options) {
  if (xs.size() != node_maps.size()) {
    throw FormulaError("one node formula map is needed per structure");
  }
  std::vector<Formula> disjuncts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    disjuncts.push_back(char_formula(xs[i], node_maps[i], options));
  }
  return Formula::conjunction(integrity, disjoin(disjuncts));
}

Formula gamma_hat(std::span<const ThreeValuedStructure> xs,
                  const Formula& integrity, const CharFormulaOptions& options) {
  std::vector<NodeFormulaMap> maps;
  for (const auto& s : xs) maps.push_back(node_formulas_bounded(s));
  return gamma_hat(xs, maps, integrity, options);
}

Formula tau_formula(const ThreeValuedStructure& s,
                    const CharFormulaOptions& options) {
  auto violations = ica_check(s);
  if (!violations.empty()) {
    std::string message = "structure is not an image of canonical abstraction: " +
                          violations[0].to_string();
    throw PreconditionError(message, std::move(violations));
  }
  auto nodes = node_formulas_bounded(s);
  std::vector<Formula> parts{char_formula(s, nodes, options)};
  const auto& voc = s.vocabulary();
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    std::size_t r = voc[p].arity;
    if (r < 2) continue;
    auto vars = numbered("w", r);
    for_each_tuple(s.size(), r, [&](auto t) {
      if (s.truth_unchecked(p, t.data()) != TruthValue::Half) return;
      std::vector<Formula> guard;
      for (std::size_t j = 0; j < r; ++j) {
        guard.push_back(nodes.instantiate(t[j], vars[j]));
      }
      for (TruthValue v : {TruthValue::True, TruthValue::False}) {
        auto body = guard;
        body.push_back(truth_char(voc, voc[p].name, v, vars));
        parts.push_back(Formula::exists(vars, conjoin(body)));
      }
    });
  }
  return conjoin(parts);
}

Formula gamma_hat_c(std::span<const ThreeValuedStructure> xs,
                    const Formula& integrity,
                    const CharFormulaOptions& options) {
  std::vector<Formula> disjuncts;
  for (const auto& s : xs) disjuncts.push_back(tau_formula(s, options));
  return Formula::conjunction(integrity, disjoin(disjuncts));
}

Formula np_char_formula(const ThreeValuedStructure& s) {
  std::size_t n = s.size();
  auto sets = numbered("$V", n);
  NodeFormulaMap nodes;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.formulas.push_back(Formula::member(nodes.variable, sets[i]));
  }
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(Formula::exists("w", nodes.instantiate(i, "w")));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (k == j) continue;
      parts.push_back(Formula::forall(
          std::vector<std::string>{"w1", "w2"},
          Formula::implication(
              Formula::conjunction(nodes.instantiate(k, "w1"),
                                   nodes.instantiate(j, "w2")),
              Formula::negation(Formula::atom(s.vocabulary().eq_symbol(),
                                              {"w1", "w2"})))));
    }
  }
  parts.push_back(totality(s, nodes));
  parts.push_back(nullary_part(s));
  predicate_blocks(s, nodes, true, parts);
  return Formula::exists_sets(sets, conjoin(parts));
}

Formula gamma_hat_np(std::span<const ThreeValuedStructure> xs,
                     const Formula& integrity) {
  std::vector<Formula> disjuncts;
  for (const auto& s : xs) disjuncts.push_back(np_char_formula(s));
  return Formula::conjunction(integrity, disjoin(disjuncts));
}

std::string_view to_string(CharacterizationMode mode) noexcept {
  switch (mode) {
    case CharacterizationMode::FirstOrder:
      return "fo";
    case CharacterizationMode::Canonical:
      return "canonical";
    case CharacterizationMode::NP:
      break;
  }
  return "np";
}

std::optional<CharacterizationMode> parse_mode(std::string_view text) noexcept {
  if (text == "fo") return CharacterizationMode::FirstOrder;
  if (text == "canonical") return CharacterizationMode::Canonical;
  if (text == "np") return CharacterizationMode::NP;
  return std::nullopt;
}

namespace {

bool is_concrete(const ThreeValuedStructure& s) {
  const auto& voc = s.vocabulary();
  for (std::size_t i = 0; i < voc.size(); ++i) {
    bool definite = true;
    for_each_tuple(s.size(), voc[PredicateId{i}].arity,
                   [&](std::span<const std::size_t> t) {
                     definite = definite && is_definite(s.value(PredicateId{i}, t));
                   });
    if (!definite) return false;
  }
  return true;
}

}  // namespace

Formula characterize(std::span<const ThreeValuedStructure> xs,
                     const Formula& integrity, CharacterizationMode mode,
                     std::span<const std::optional<NodeFormulaMap>> overrides,
                     const CharFormulaOptions& options) {
  switch (mode) {
    case CharacterizationMode::Canonical:
      return gamma_hat_c(xs, integrity, options);
    case CharacterizationMode::NP:
      return gamma_hat_np(xs, integrity);
    case CharacterizationMode::FirstOrder:
      break;
  }
  std::vector<Formula> disjuncts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i < overrides.size() && overrides[i]) {
      disjuncts.push_back(char_formula(xs[i], *overrides[i], options));
    } else if (!is_bounded(xs[i]) && is_concrete(xs[i])) {
      // A concrete structure whose nodes unary predicates cannot tell apart.
      disjuncts.push_back(np_char_formula(xs[i]));
    } else {
      disjuncts.push_back(
          char_formula(xs[i], node_formulas_bounded(xs[i]), options));
    }
  }
  return Formula::conjunction(integrity, disjoin(disjuncts));
}

NodeFormulaMap parse_node_formulas(std::string_view text,
                                   const ThreeValuedStructure& s) {
  NodeFormulaMap map = unary_node_formulas(s);
  std::vector<bool> given(s.size(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto fail = [&](const std::string& msg) {
      throw StructureError("line " + std::to_string(number) + ": " + msg);
    };
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::string keyword, node, assign;
    if (!(ls >> keyword)) continue;
    if (keyword != "nodeformula" || !(ls >> node >> assign) || assign != ":=") {
      fail("expected 'nodeformula <node> := <formula>'");
    }
    auto u = s.find_node(node);
    if (!u) fail("unknown node '" + node + "'");
    if (given[*u]) fail("duplicate node formula for '" + node + "'");
    std::string rest;
    std::getline(ls, rest);
    Formula f = parse_formula(rest, s.vocabulary());
    auto fv = free_variables(f);
    if (fv.size() > 1 || (fv.size() == 1 && !fv.count(map.variable))) {
      fail("node formula may only have the free variable " + map.variable);
    }
    map.formulas[*u] = f;
    given[*u] = true;
  }
  return map;
}

namespace {

void require(const Vocabulary& voc, const std::string& name,
             std::size_t arity) {
  auto id = voc.find(name);
  if (!id || voc[*id].arity != arity) {
    throw FormulaError("vocabulary lacks " + name + "/" +
                       std::to_string(arity));
  }
}

}  // namespace

Formula build_F_list(const Vocabulary& voc,
                     const std::vector<std::string>& pvar) {
  require(voc, "n", 2);
  for (const auto& q : pvar) {
    require(voc, q, 1);
    require(voc, "r_" + q, 1);
  }
  std::vector<Formula> parts;
  for (const auto& q : pvar) {
    parts.push_back(parse_formula(
        "A v1,v2: " + q + "(v1) & " + q + "(v2) -> eq(v1,v2)", voc));
  }
  parts.push_back(
      parse_formula("A v,v1,v2: n(v,v1) & n(v,v2) -> eq(v1,v2)", voc));
  if (voc.contains("is")) {
    require(voc, "is", 1);
    parts.push_back(parse_formula(
        "A v: is(v) <-> E v1,v2: !eq(v1,v2) & n(v1,v) & n(v2,v)", voc));
  }
  for (const auto& q : pvar) {
    parts.push_back(parse_formula(
        "A v: r_" + q + "(v) <-> E v1: " + q + "(v1) & n*(v1,v)", voc));
  }
  return conjoin(parts);
}

ListQueries build_listx_queries(const Vocabulary& voc, const std::string& q) {
  require(voc, "n", 2);
  require(voc, "r_" + q, 1);
  ListQueries out;
  out.acyclic = parse_formula(
      "A v1,v2: r_" + q + "(v1) & n+(v1,v2) -> !n+(v2,v1)", voc);
  out.unshared = parse_formula("A v: r_" + q +
                                   "(v) -> !(E w1,w2: !eq(w1,w2) & n(w1,v) & "
                                   "n(w2,v))",
                               voc);
  out.list = Formula::conjunction(out.acyclic, out.unshared);
  return out;
}

Formula query_next_not_null(const Vocabulary& voc, const std::string& q) {
  return parse_formula("E v1,v2: " + q + "(v1) & n(v1,v2)", voc);
}

Formula query_has_last(const Vocabulary& voc) {
  return parse_formula("E v1: A v2: !n(v1,v2)", voc);
}

std::vector<PredicateId> functional_predicates(const Formula& f,
                                               const Vocabulary& voc) {
  std::vector<PredicateId> out;
  for (const auto& c : conjuncts(f)) {
    std::vector<std::string> vars;
    Formula body = c;
    while (auto a = match_forall(body)) {
      vars.push_back(a->first);
      body = a->second;
    }
    if (vars.size() != 3) continue;
    const auto &a = vars[0], &b = vars[1], &d = vars[2];
    if (a == b || b == d || a == d) continue;
    auto imp = match_implication(body);
    if (!imp) continue;
    auto lhs = match_conjunction(imp->first);
    const auto& rhs = imp->second;
    if (!lhs || !rhs.is(Formula::Kind::Atom) ||
        rhs.predicate() != voc.eq_symbol() ||
        rhs.variables() != std::vector<std::string>{b, d}) {
      continue;
    }
    const auto& l = lhs->first;
    const auto& r = lhs->second;
    if (!l.is(Formula::Kind::Atom) || !r.is(Formula::Kind::Atom) ||
        l.predicate() != r.predicate() ||
        l.variables() != std::vector<std::string>{a, b} ||
        r.variables() != std::vector<std::string>{a, d}) {
      continue;
    }
    auto id = voc.find(l.predicate());
    if (!id || *id == voc.eq() || voc[*id].arity != 2) continue;
    if (std::find(out.begin(), out.end(), *id) == out.end()) {
      out.push_back(*id);
    }
  }
  return out;
}

}  // namespace hat
