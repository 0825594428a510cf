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

#include "hat/structure_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hat/error.hpp"

namespace hat {

ThreeValuedStructure StructureFile::as_three_valued() const {
  if (auto* three = std::get_if<ThreeValuedStructure>(&structure)) {
    return *three;
  }
  return ThreeValuedStructure::from(std::get<TwoValuedStructure>(structure));
}

const TwoValuedStructure& StructureFile::as_two_valued() const {
  if (auto* two = std::get_if<TwoValuedStructure>(&structure)) return *two;
  throw StructureError("expected a 2-valued structure");
}

namespace {

struct Fact {
  std::size_t line;
  std::string predicate;
  std::vector<std::string> nodes;
  TruthValue value;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw StructureError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  std::optional<bool> three;
  std::vector<PredicateSymbol> preds;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::string>> summaries;
  std::vector<Fact> facts;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "kind") {
      if (three) fail(line, "duplicate kind line");
      if (tok.size() != 2 || (tok[1] != "two" && tok[1] != "three")) {
        fail(line, "expected 'kind two' or 'kind three'");
      }
      three = tok[1] == "three";
      continue;
    }
    if (!three) fail(line, "the first line must be 'kind two|three'");
    if (head == "pred" && tok.size() == 3 &&
        std::find(tok.begin(), tok.end(), "=") == tok.end()) {
      std::size_t arity = 0;
      try {
        std::size_t used = 0;
        arity = std::stoul(tok[2], &used);
        if (used != tok[2].size()) throw std::invalid_argument("arity");
      } catch (const std::exception&) {
        fail(line, "bad arity '" + tok[2] + "'");
      }
      preds.push_back({tok[1], arity});
      continue;
    }
    if (head == "node" && tok.size() == 2) {
      if (std::find(nodes.begin(), nodes.end(), tok[1]) != nodes.end()) {
        fail(line, "duplicate node '" + tok[1] + "'");
      }
      nodes.push_back(tok[1]);
      continue;
    }
    if (head == "summary" && tok.size() == 2) {
      if (!*three) fail(line, "summary nodes need 'kind three'");
      summaries.emplace_back(line, tok[1]);
      continue;
    }
    if (tok.size() < 3 || tok[tok.size() - 2] != "=") {
      fail(line, "expected '<pred> <node>... = <value>'");
    }
    auto value = parse_truth(tok.back());
    if (!value) fail(line, "bad truth value '" + tok.back() + "'");
    if (!*three && *value == TruthValue::Half) {
      fail(line, "1/2 in a 2-valued structure");
    }
    facts.push_back({line, head,
                     std::vector<std::string>(tok.begin() + 1, tok.end() - 2),
                     *value});
  }
  if (!three) throw StructureError("missing 'kind two|three' line");

  Vocabulary voc;
  for (const auto& p : preds) {
    try {
      voc.add(p.name, p.arity);
    } catch (const Error& e) {
      throw StructureError(e.what());
    }
  }

  auto build = [&](auto& s, auto&& store) {
    for (const auto& [l, name] : summaries) {
      auto u = s.find_node(name);
      if (!u) fail(l, "unknown node '" + name + "'");
      std::vector<std::size_t> self{*u, *u};
      store(s, voc.eq(), self, TruthValue::Half);
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, TruthValue>
        seen;
    for (const auto& f : facts) {
      auto p = voc.find(f.predicate);
      if (!p) fail(f.line, "unknown predicate '" + f.predicate + "'");
      if (voc[*p].arity != f.nodes.size()) {
        fail(f.line, "predicate '" + f.predicate + "' has arity " +
                         std::to_string(voc[*p].arity));
      }
      std::vector<std::size_t> args;
      for (const auto& n : f.nodes) {
        auto u = s.find_node(n);
        if (!u) fail(f.line, "unknown node '" + n + "'");
        args.push_back(*u);
      }
      auto [it, fresh] = seen.emplace(std::pair{p->index, args}, f.value);
      if (!fresh && it->second != f.value) {
        fail(f.line, "conflicting values for " + f.predicate);
      }
      store(s, *p, args, f.value);
    }
    return seen;
  };

  try {
    if (!*three) {
      TwoValuedStructure s(voc, nodes);
      build(s, [](TwoValuedStructure& t, PredicateId p,
                  const std::vector<std::size_t>& a,
                  TruthValue v) { t.set(p, a, v == TruthValue::True); });
      auto violations = validate(s);
      return {std::move(s), std::move(violations)};
    }
    ThreeValuedStructure s(voc, nodes);
    auto seen = build(s, [](ThreeValuedStructure& t, PredicateId p,
                            const std::vector<std::size_t>& a,
                            TruthValue v) { t.set(p, a, v); });
    std::vector<Violation> violations;
    for (std::size_t i = 1; i < voc.size(); ++i) {
      PredicateId p{i};
      for_each_tuple(s.size(), voc[p].arity, [&](auto t) {
        std::vector<std::size_t> key(t.begin(), t.end());
        if (seen.count({i, key})) return;
        std::vector<std::string> names;
        for (auto u : t) names.push_back(s.node_name(u));
        violations.push_back(
            {"missing-fact", voc[p].name, names, "no value given"});
      });
    }
    auto more = validate(s);
    violations.insert(violations.end(), more.begin(), more.end());
    return {std::move(s), std::move(violations)};
  } catch (const StructureError&) {
    throw;
  } catch (const Error& e) {
    throw StructureError(e.what());
  }
}

StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure(buf.str());
  } catch (const StructureError& e) {
    throw StructureError(path + ": " + e.what());
  }
}

namespace {

void write_header(std::ostringstream& os, const StructureBase& s,
                  const char* kind) {
  os << "kind " << kind << "\n";
  const auto& voc = s.vocabulary();
  for (std::size_t i = 1; i < voc.size(); ++i) {
    os << "pred " << voc[PredicateId{i}].name << " "
       << voc[PredicateId{i}].arity << "\n";
  }
  for (const auto& n : s.nodes()) os << "node " << n << "\n";
}

void write_fact(std::ostringstream& os, const StructureBase& s,
                PredicateId p, std::span<const std::size_t> t, TruthValue v) {
  os << s.vocabulary()[p].name;
  for (auto u : t) os << " " << s.node_name(u);
  os << " = " << v << "\n";
}

}  // namespace

std::string write_structure(const TwoValuedStructure& s) {
  std::ostringstream os;
  write_header(os, s, "two");
  const auto& voc = s.vocabulary();
  for_each_tuple(s.size(), 2, [&](auto t) {
    bool expected = t[0] == t[1];
    if (s.holds(voc.eq(), t) != expected) {
      write_fact(os, s, voc.eq(), t, s.truth(voc.eq(), t));
    }
  });
  for (std::size_t i = 1; i < voc.size(); ++i) {
    PredicateId p{i};
    for_each_tuple(s.size(), voc[p].arity, [&](auto t) {
      if (s.holds(p, t)) write_fact(os, s, p, t, TruthValue::True);
    });
  }
  return os.str();
}

std::string write_structure(const ThreeValuedStructure& s) {
  std::ostringstream os;
  write_header(os, s, "three");
  const auto& voc = s.vocabulary();
  for (std::size_t u = 0; u < s.size(); ++u) {
    if (s.is_summary(u)) os << "summary " << s.node_name(u) << "\n";
  }
  for_each_tuple(s.size(), 2, [&](auto t) {
    TruthValue v = s.value(voc.eq(), t);
    bool implied = t[0] == t[1]
                       ? (v == TruthValue::True || v == TruthValue::Half)
                       : v == TruthValue::False;
    if (!implied) write_fact(os, s, voc.eq(), t, v);
  });
  for (std::size_t i = 1; i < voc.size(); ++i) {
    PredicateId p{i};
    for_each_tuple(s.size(), voc[p].arity,
                   [&](auto t) { write_fact(os, s, p, t, s.value(p, t)); });
  }
  return os.str();
}

}  // namespace hat
