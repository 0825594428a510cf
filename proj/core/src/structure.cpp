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

#include "hat/structure.hpp"

#include <set>

#include "hat/error.hpp"

namespace hat {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::string> tuple_names(const StructureBase& s,
                                     std::span<const std::size_t> t) {
  std::vector<std::string> out;
  for (auto u : t) out.push_back(s.node_name(u));
  return out;
}

}  // namespace

StructureBase::StructureBase(Vocabulary voc, std::vector<std::string> nodes)
    : voc_(std::move(voc)), nodes_(std::move(nodes)) {
  std::set<std::string> seen;
  for (const auto& n : nodes_) {
    if (n.empty()) throw StructureError("empty node name");
    if (!seen.insert(n).second) {
      throw StructureError("duplicate node '" + n + "'");
    }
  }
  tables_.resize(voc_.size());
  for (std::size_t i = 0; i < voc_.size(); ++i) {
    Table& t = tables_[i];
    t.arity = voc_[PredicateId{i}].arity;
    if (t.arity <= 2) t.dense.assign(power(nodes_.size(), t.arity),
                                      TruthValue::False);
  }
}

std::optional<std::size_t> StructureBase::find_node(
    std::string_view name) const noexcept {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t StructureBase::node(std::string_view name) const {
  if (auto u = find_node(name)) return *u;
  throw StructureError("unknown node '" + std::string(name) + "'");
}

void StructureBase::check_tuple(PredicateId p,
                                std::span<const std::size_t> args) const {
  if (p.index >= tables_.size()) throw StructureError("unknown predicate id");
  if (args.size() != tables_[p.index].arity) {
    throw StructureError("predicate '" + voc_[p].name + "' has arity " +
                         std::to_string(tables_[p.index].arity) + ", given " +
                         std::to_string(args.size()));
  }
  for (auto u : args) {
    if (u >= nodes_.size()) throw StructureError("node index out of range");
  }
}

TruthValue StructureBase::truth(PredicateId p,
                                std::span<const std::size_t> args) const {
  check_tuple(p, args);
  return truth_unchecked(p, args.data());
}

TruthValue StructureBase::sparse_lookup(const Table& t,
                                        const std::size_t* args) noexcept {
  std::vector<std::size_t> key(args, args + t.arity);
  auto it = t.sparse.find(key);
  return it == t.sparse.end() ? TruthValue::False : it->second;
}

void StructureBase::assign(PredicateId p, std::span<const std::size_t> args,
                           TruthValue v) {
  check_tuple(p, args);
  assign_unchecked(p, args.data(), v);
}

void StructureBase::assign_unchecked(PredicateId p, const std::size_t* args,
                                     TruthValue v) {
  Table& t = tables_[p.index];
  switch (t.arity) {
    case 0:
      t.dense[0] = v;
      return;
    case 1:
      t.dense[args[0]] = v;
      return;
    case 2:
      t.dense[args[0] * nodes_.size() + args[1]] = v;
      return;
    default: {
      std::vector<std::size_t> key(args, args + t.arity);
      if (v == TruthValue::False) {
        t.sparse.erase(key);
      } else {
        t.sparse[key] = v;
      }
    }
  }
}

bool StructureBase::same_contents(const StructureBase& other) const {
  if (!(voc_ == other.voc_) || nodes_ != other.nodes_) return false;
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].dense != other.tables_[i].dense ||
        tables_[i].sparse != other.tables_[i].sparse) {
      return false;
    }
  }
  return true;
}

TwoValuedStructure::TwoValuedStructure(Vocabulary voc,
                                       std::vector<std::string> nodes)
    : StructureBase(std::move(voc), std::move(nodes)) {
  for (std::size_t u = 0; u < size(); ++u) {
    std::size_t t[2] = {u, u};
    assign_unchecked(vocabulary().eq(), t, TruthValue::True);
  }
}

TwoValuedStructure TwoValuedStructure::with_canonical_nodes(Vocabulary voc,
                                                            std::size_t k) {
  std::vector<std::string> nodes;
  for (std::size_t i = 1; i <= k; ++i) nodes.push_back(std::to_string(i));
  return TwoValuedStructure(std::move(voc), std::move(nodes));
}

void TwoValuedStructure::set(PredicateId p, std::span<const std::size_t> args,
                             bool value) {
  assign(p, args, to_truth(value));
}

void TwoValuedStructure::set(std::string_view predicate,
                             std::initializer_list<std::string_view> nodes,
                             bool value) {
  std::vector<std::size_t> args;
  for (auto n : nodes) args.push_back(node(n));
  set(vocabulary().at(predicate), args, value);
}

ThreeValuedStructure::ThreeValuedStructure(Vocabulary voc,
                                           std::vector<std::string> nodes)
    : StructureBase(std::move(voc), std::move(nodes)) {
  for (std::size_t u = 0; u < size(); ++u) {
    std::size_t t[2] = {u, u};
    assign_unchecked(vocabulary().eq(), t, TruthValue::True);
  }
}

ThreeValuedStructure ThreeValuedStructure::from(const TwoValuedStructure& s) {
  ThreeValuedStructure out(s.vocabulary(), s.nodes());
  const auto& voc = s.vocabulary();
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    for_each_tuple(s.size(), voc[p].arity, [&](auto t) {
      out.assign_unchecked(p, t.data(), s.truth_unchecked(p, t.data()));
    });
  }
  return out;
}

void ThreeValuedStructure::set(PredicateId p, std::span<const std::size_t> args,
                               TruthValue v) {
  assign(p, args, v);
}

void ThreeValuedStructure::set(std::string_view predicate,
                               std::initializer_list<std::string_view> nodes,
                               TruthValue v) {
  std::vector<std::size_t> args;
  for (auto n : nodes) args.push_back(node(n));
  set(vocabulary().at(predicate), args, v);
}

bool ThreeValuedStructure::is_summary(std::size_t u) const {
  return truth(vocabulary().eq(), {u, u}) == TruthValue::Half;
}

void ThreeValuedStructure::set_summary(std::size_t u, bool summary) {
  set(vocabulary().eq(), {u, u}, summary ? TruthValue::Half : TruthValue::True);
}

std::vector<Violation> validate(const TwoValuedStructure& s) {
  std::vector<Violation> out;
  const auto& voc = s.vocabulary();
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    for_each_tuple(s.size(), voc[p].arity, [&](auto t) {
      TruthValue v = s.truth_unchecked(p, t.data());
      if (!is_definite(v)) {
        out.push_back({"definite", voc[p].name, tuple_names(s, t),
                       "value 1/2 in a 2-valued structure"});
      } else if (p == voc.eq()) {
        bool same = t[0] == t[1];
        if (same && v != TruthValue::True) {
          out.push_back({"eq-reflexive", voc[p].name, tuple_names(s, t),
                         "eq(u,u) must be 1"});
        } else if (!same && v != TruthValue::False) {
          out.push_back({"eq-distinct", voc[p].name, tuple_names(s, t),
                         "eq between distinct nodes must be 0"});
        }
      }
    });
  }
  return out;
}

std::vector<Violation> validate(const ThreeValuedStructure& s) {
  std::vector<Violation> out;
  const auto& voc = s.vocabulary();
  for_each_tuple(s.size(), 2, [&](auto t) {
    TruthValue v = s.truth_unchecked(voc.eq(), t.data());
    if (t[0] == t[1] && v == TruthValue::False) {
      out.push_back({"eq-reflexive", voc.eq_symbol(), tuple_names(s, t),
                     "eq(u,u) must be 1 or 1/2"});
    } else if (t[0] != t[1] && v != TruthValue::False) {
      out.push_back({"eq-distinct", voc.eq_symbol(), tuple_names(s, t),
                     "eq between distinct nodes must be 0"});
    }
  });
  return out;
}

namespace {

template <class S, class Assign>
S restrict_impl(const S& s, const Vocabulary& sub, Assign assign) {
  const auto& voc = s.vocabulary();
  if (sub.eq_symbol() != voc.eq_symbol()) {
    throw StructureError("equality symbols differ");
  }
  S out(sub, s.nodes());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    PredicateId q{i};
    auto p = voc.find(sub[q].name);
    if (!p || voc[*p].arity != sub[q].arity) {
      throw StructureError("'" + sub[q].name +
                           "' is not in the structure's vocabulary");
    }
    for_each_tuple(s.size(), sub[q].arity, [&](auto t) {
      assign(out, q, t, s.truth(*p, t));
    });
  }
  return out;
}

}  // namespace

ThreeValuedStructure restrict_vocabulary(const ThreeValuedStructure& s,
                                         const Vocabulary& sub) {
  return restrict_impl(s, sub, [](ThreeValuedStructure& out, PredicateId q,
                                  auto t, TruthValue v) { out.set(q, t, v); });
}

TwoValuedStructure restrict_vocabulary(const TwoValuedStructure& s,
                                       const Vocabulary& sub) {
  return restrict_impl(s, sub,
                       [](TwoValuedStructure& out, PredicateId q, auto t,
                          TruthValue v) { out.set(q, t, v == TruthValue::True); });
}

}  // namespace hat
