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

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hat/enumerate.hpp"
#include "hat/error.hpp"
#include "hat/semantics.hpp"
#include "hat/structure_io.hpp"

namespace hat {

namespace {

// For each predicate of `from`, the id of the same-named predicate in `to`.
std::vector<PredicateId> predicate_map(const Vocabulary& from,
                                       const Vocabulary& to) {
  if (!from.same_signature(to)) {
    throw StructureError("structures have different vocabularies");
  }
  std::vector<PredicateId> out;
  for (const auto& p : from.predicates()) out.push_back(*to.find(p.name));
  return out;
}

bool contains(std::span<const std::size_t> t, std::size_t u) {
  return std::find(t.begin(), t.end(), u) != t.end();
}

}  // namespace

bool is_embedding(const StructureBase& concrete,
                  const ThreeValuedStructure& abstract,
                  const EmbeddingWitness& f) {
  const auto& voc = concrete.vocabulary();
  auto pmap = predicate_map(voc, abstract.vocabulary());
  if (f.image.size() != concrete.size()) return false;
  std::vector<bool> hit(abstract.size(), false);
  for (auto a : f.image) {
    if (a >= abstract.size()) return false;
    hit[a] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    bool ok = true;
    std::vector<std::size_t> image(voc[p].arity);
    for_each_tuple(concrete.size(), voc[p].arity, [&](auto t) {
      if (!ok) return;
      for (std::size_t j = 0; j < t.size(); ++j) image[j] = f.image[t[j]];
      ok = information_leq(concrete.truth_unchecked(p, t.data()),
                           abstract.truth_unchecked(pmap[i], image.data()));
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<EmbeddingWitness> find_embedding(
    const TwoValuedStructure& concrete, const ThreeValuedStructure& abstract,
    const EmbeddingOptions& options) {
  const auto& voc = concrete.vocabulary();
  auto pmap = predicate_map(voc, abstract.vocabulary());
  std::size_t n = concrete.size();
  std::size_t m = abstract.size();
  if (n < m) return std::nullopt;
  if (n == 0) return EmbeddingWitness{};

  for (auto p : voc.of_arity(0)) {
    if (!information_leq(concrete.truth_unchecked(p, nullptr),
                         abstract.truth_unchecked(pmap[p.index], nullptr))) {
      return std::nullopt;
    }
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t a = 0; a < m; ++a) {
      bool ok = true;
      for (auto p : voc.unary()) {
        if (!information_leq(concrete.unary_truth(p, c),
                             abstract.unary_truth(pmap[p.index], a))) {
          ok = false;
          break;
        }
      }
      if (ok) candidates[c].push_back(a);
    }
    if (candidates[c].empty()) return std::nullopt;
  }

  std::vector<PredicateId> higher;
  for (std::size_t i = 0; i < voc.size(); ++i) {
    if (voc[PredicateId{i}].arity >= 2) higher.push_back(PredicateId{i});
  }

  std::vector<std::size_t> image(n, 0);
  std::vector<std::size_t> uses(m, 0);
  std::size_t unused = m;
  std::uint64_t visited = 0;
  std::vector<std::size_t> abs_tuple;

  // Tuples over nodes 0..c that mention c.
  auto consistent = [&](std::size_t c) {
    for (auto p : higher) {
      std::size_t r = voc[p].arity;
      abs_tuple.resize(r);
      bool ok = true;
      if (r == 2) {
        for (std::size_t d = 0; d <= c && ok; ++d) {
          std::size_t t1[2] = {c, d}, t2[2] = {d, c};
          std::size_t a1[2] = {image[c], image[d]}, a2[2] = {image[d], image[c]};
          ok = information_leq(concrete.truth_unchecked(p, t1),
                               abstract.truth_unchecked(pmap[p.index], a1)) &&
               information_leq(concrete.truth_unchecked(p, t2),
                               abstract.truth_unchecked(pmap[p.index], a2));
        }
      } else {
        for_each_tuple(c + 1, r, [&](auto t) {
          if (!ok || !contains(t, c)) return;
          for (std::size_t j = 0; j < r; ++j) abs_tuple[j] = image[t[j]];
          ok = information_leq(
              concrete.truth_unchecked(p, t.data()),
              abstract.truth_unchecked(pmap[p.index], abs_tuple.data()));
        });
      }
      if (!ok) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t c) {
    if (c == n) return unused == 0;
    if (n - c < unused) return false;
    for (auto a : candidates[c]) {
      if (options.budget != 0 && ++visited > options.budget) {
        throw BudgetExceeded("embedding search exceeded its budget", 0,
                             visited, options.budget);
      }
      image[c] = a;
      if (uses[a]++ == 0) --unused;
      if (consistent(c) && place(c + 1)) return true;
      if (--uses[a] == 0) ++unused;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return EmbeddingWitness{image};
}

bool in_gamma(const TwoValuedStructure& concrete,
              const ThreeValuedStructure& abstract, const Formula& integrity,
              const EmbeddingOptions& options) {
  if (!is_closed(integrity)) throw FormulaError("integrity formula not closed");
  return eval2(concrete, integrity) &&
         find_embedding(concrete, abstract, options).has_value();
}

std::string CanonicalName::to_string() const {
  auto list = [](const std::set<std::string>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : s) {
      if (!first) out += ", ";
      out += p;
      first = false;
    }
    return out + "}";
  };
  return "(" + list(true_predicates) + ", " + list(false_predicates) + ")";
}

CanonicalName canonical_name(const StructureBase& s, std::size_t u) {
  if (u >= s.size()) throw StructureError("node index out of range");
  CanonicalName name;
  const auto& voc = s.vocabulary();
  for (auto p : voc.unary()) {
    TruthValue v = s.unary_truth(p, u);
    if (v == TruthValue::True) name.true_predicates.insert(voc[p].name);
    if (v == TruthValue::False) name.false_predicates.insert(voc[p].name);
  }
  return name;
}

CanonicalName canonical_name(const StructureBase& s, std::string_view node) {
  return canonical_name(s, s.node(node));
}

CanonicalAbstraction canonical_abstraction(const TwoValuedStructure& concrete) {
  const auto& voc = concrete.vocabulary();
  std::size_t n = concrete.size();
  std::vector<std::size_t> map(n);
  std::vector<CanonicalName> names;
  std::vector<std::vector<TruthValue>> keys;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<TruthValue> key;
    for (auto p : voc.unary()) key.push_back(concrete.unary_truth(p, c));
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      map[c] = keys.size();
      keys.push_back(key);
      names.push_back(canonical_name(concrete, c));
    } else {
      map[c] = static_cast<std::size_t>(it - keys.begin());
    }
  }
  std::size_t k = keys.size();
  std::vector<std::string> nodes;
  for (std::size_t a = 0; a < k; ++a) nodes.push_back("u" + std::to_string(a + 1));
  ThreeValuedStructure s(voc, nodes);

  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    std::size_t r = voc[p].arity;
    std::map<std::vector<std::size_t>, TruthValue> joined;
    image.resize(r);
    for_each_tuple(n, r, [&](auto t) {
      for (std::size_t j = 0; j < r; ++j) image[j] = map[t[j]];
      TruthValue v = concrete.truth_unchecked(p, t.data());
      auto [it, fresh] = joined.emplace(image, v);
      if (!fresh) it->second = truth_join(it->second, v);
    });
    for (const auto& [t, v] : joined) s.set(p, t, v);
  }
  return {std::move(s), std::move(map), std::move(names)};
}

namespace {

bool separated(const StructureBase& s, std::size_t u, std::size_t w) {
  for (auto p : s.vocabulary().unary()) {
    TruthValue a = s.unary_truth(p, u);
    TruthValue b = s.unary_truth(p, w);
    if (is_definite(a) && is_definite(b) && a != b) return true;
  }
  return false;
}

}  // namespace

bool is_bounded(const StructureBase& s) {
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t w = u + 1; w < s.size(); ++w) {
      if (!separated(s, u, w)) return false;
    }
  }
  return true;
}

std::vector<Violation> ica_check(const ThreeValuedStructure& s) {
  std::vector<Violation> out;
  const auto& voc = s.vocabulary();
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t w = u + 1; w < s.size(); ++w) {
      if (!separated(s, u, w)) {
        out.push_back({"bounded", "", {s.node_name(u), s.node_name(w)},
                       "no definite unary predicate separates the nodes"});
      }
    }
  }
  for (auto p : voc.of_arity(0)) {
    if (!is_definite(s.truth_unchecked(p, nullptr))) {
      out.push_back({"definite-nullary", voc[p].name, {}, "value is 1/2"});
    }
  }
  for (auto p : voc.unary()) {
    for (std::size_t u = 0; u < s.size(); ++u) {
      if (!is_definite(s.unary_truth(p, u))) {
        out.push_back(
            {"definite-unary", voc[p].name, {s.node_name(u)}, "value is 1/2"});
      }
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> isomorphic_by_canonical_names(
    const ThreeValuedStructure& a, const ThreeValuedStructure& b) {
  const auto& voc = a.vocabulary();
  if (!voc.same_signature(b.vocabulary()) || a.size() != b.size()) {
    return std::nullopt;
  }
  auto pmap = predicate_map(voc, b.vocabulary());
  std::vector<CanonicalName> an, bn;
  for (std::size_t u = 0; u < a.size(); ++u) an.push_back(canonical_name(a, u));
  for (std::size_t u = 0; u < b.size(); ++u) bn.push_back(canonical_name(b, u));
  std::vector<std::size_t> bij(a.size());
  std::vector<bool> used(b.size(), false);
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (std::count(an.begin(), an.end(), an[u]) != 1) return std::nullopt;
    auto it = std::find(bn.begin(), bn.end(), an[u]);
    if (it == bn.end() || std::count(bn.begin(), bn.end(), an[u]) != 1) {
      return std::nullopt;
    }
    bij[u] = static_cast<std::size_t>(it - bn.begin());
    used[bij[u]] = true;
  }
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < voc.size(); ++i) {
    PredicateId p{i};
    bool ok = true;
    image.resize(voc[p].arity);
    for_each_tuple(a.size(), voc[p].arity, [&](auto t) {
      if (!ok) return;
      for (std::size_t j = 0; j < t.size(); ++j) image[j] = bij[t[j]];
      ok = a.truth_unchecked(p, t.data()) ==
           b.truth_unchecked(pmap[i], image.data());
    });
    if (!ok) return std::nullopt;
  }
  return bij;
}

bool in_gamma_c(const TwoValuedStructure& concrete,
                const ThreeValuedStructure& abstract, const Formula& integrity) {
  auto violations = ica_check(abstract);
  if (!violations.empty()) {
    throw PreconditionError("structure is not an image of canonical abstraction",
                            std::move(violations));
  }
  if (!eval2(concrete, integrity)) return false;
  if (!concrete.vocabulary().same_signature(abstract.vocabulary())) {
    throw StructureError("structures have different vocabularies");
  }
  auto beta = canonical_abstraction(concrete);
  return isomorphic_by_canonical_names(beta.structure, abstract).has_value();
}

bool in_ica_complement(const TwoValuedStructure& concrete,
                       const ThreeValuedStructure& abstract,
                       const Formula& integrity) {
  bool member = in_gamma_c(concrete, abstract, integrity);
  return !member && eval2(concrete, integrity);
}

std::optional<TwoValuedStructure> find_ica_witness(
    const ThreeValuedStructure& s, std::size_t max_nodes,
    std::uint64_t budget) {
  const auto& voc = s.vocabulary();
  if (!ica_check(s).empty() || s.size() == 0) return std::nullopt;
  EnumerationOptions options;
  options.max_nodes = max_nodes;
  options.budget = budget;
  for (std::size_t u = 0; u < s.size(); ++u) {
    std::vector<bool> sig;
    for (auto p : voc.unary()) {
      sig.push_back(s.unary_truth(p, u) == TruthValue::True);
    }
    options.space.unary_signatures.push_back(sig);
  }
  if (voc.unary().empty()) options.space.unary_signatures.clear();
  StructureEnumerator e(voc, options);
  while (e.next()) {
    const auto& c = e.current();
    if (c.size() < s.size()) continue;
    if (isomorphic_by_canonical_names(canonical_abstraction(c).structure, s)) {
      return c;
    }
  }
  return std::nullopt;
}

void for_each_embedded_structure(
    const ThreeValuedStructure& abstract, std::size_t max_nodes,
    const std::function<bool(const TwoValuedStructure&,
                             const EmbeddingWitness&)>& visit,
    std::uint64_t budget) {
  const auto& voc = abstract.vocabulary();
  std::size_t m = abstract.size();
  bool dedupe = !is_bounded(abstract);
  std::unordered_set<std::string> seen;
  std::uint64_t generated = 0;
  bool stop = false;

  struct Free {
    PredicateId p;
    std::vector<std::size_t> tuple;
  };

  auto valuations = [&](std::size_t k, const std::vector<std::size_t>& image) {
    auto s = TwoValuedStructure::with_canonical_nodes(voc, k);
    std::vector<Free> free;
    std::vector<std::size_t> abs;
    for (std::size_t i = 1; i < voc.size(); ++i) {
      PredicateId p{i};
      abs.resize(voc[p].arity);
      for_each_tuple(k, voc[p].arity, [&](auto t) {
        for (std::size_t j = 0; j < t.size(); ++j) abs[j] = image[t[j]];
        TruthValue v = abstract.truth_unchecked(p, abs.data());
        if (v == TruthValue::Half) {
          free.push_back({p, std::vector<std::size_t>(t.begin(), t.end())});
        } else {
          s.set_unchecked(p, t.data(), v == TruthValue::True);
        }
      });
    }
    if (free.size() >= 63) {
      throw BudgetExceeded("too many unknown tuples to enumerate", 0,
                           generated, budget);
    }
    std::uint64_t count = std::uint64_t{1} << free.size();
    if (budget != 0 && generated + count > budget) {
      throw BudgetExceeded("embedding closure exceeded its budget", 0,
                           generated, budget);
    }
    EmbeddingWitness witness{image};
    for (std::uint64_t bits = 0; bits < count && !stop; ++bits) {
      ++generated;
      for (std::size_t j = 0; j < free.size(); ++j) {
        s.set_unchecked(free[j].p, free[j].tuple.data(), (bits >> j) & 1);
      }
      if (dedupe && !seen.insert(write_structure(s)).second) continue;
      if (!visit(s, witness)) stop = true;
    }
  };

  for (std::size_t k = std::max<std::size_t>(m, 1); k <= max_nodes && !stop;
       ++k) {
    if (m == 0) break;
    std::vector<std::size_t> image(k);
    std::vector<std::size_t> uses(m, 0);
    std::size_t unused = m;
    std::function<void(std::size_t)> assign = [&](std::size_t c) {
      if (stop) return;
      if (c == k) {
        if (unused == 0) valuations(k, image);
        return;
      }
      if (k - c < unused) return;
      for (std::size_t a = 0; a < m && !stop; ++a) {
        if (uses[a] > 0 && !abstract.is_summary(a)) continue;
        image[c] = a;
        if (uses[a]++ == 0) --unused;
        assign(c + 1);
        if (--uses[a] == 0) ++unused;
      }
    };
    assign(0);
  }
}

}  // namespace hat
