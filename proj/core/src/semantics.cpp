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

#include "hat/semantics.hpp"

#include <algorithm>

#include "hat/error.hpp"

namespace hat {

namespace {

enum class Op : std::uint8_t {
  False,
  True,
  Atom,
  Not,
  Or,
  Exists,
  TransitiveClosure,
  Member,
  ExistsSets,
};

struct Instr {
  Op op;
  PredicateId pred;
  // Atom: argument slots; TC: {b1, b2, a1, a2}; Member: {var slot, set
  // slot}; ExistsSets: set slots; Exists: {slot}.
  std::vector<std::size_t> slots;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  // TC: index into the per-evaluation closure cache, or npos.
  std::size_t cache = static_cast<std::size_t>(-1);
};

constexpr std::size_t kNoCache = static_cast<std::size_t>(-1);

struct SetValue {
  std::uint64_t known = 0;
  std::uint64_t value = 0;
};

}  // namespace

struct CompiledFormula::Impl {
  Formula formula;
  Vocabulary voc;
  std::vector<Instr> code;
  std::size_t root = 0;
  std::vector<std::string> free_vars;
  std::vector<std::string> free_sets;
  std::size_t num_slots = 0;
  std::size_t num_set_slots = 0;
  std::size_t num_caches = 0;
  bool sets = false;

  struct Scope {
    std::vector<std::pair<std::string, std::size_t>> vars;
    std::vector<std::pair<std::string, std::size_t>> sets;
  };

  Impl(const Formula& f, const Vocabulary& v) : formula(f), voc(v) {
    sets = hat::uses_sets(f);
    Scope scope;
    for (const auto& name : free_variables(f)) {
      free_vars.push_back(name);
      scope.vars.emplace_back(name, num_slots++);
    }
    for (const auto& name : free_set_variables(f)) {
      free_sets.push_back(name);
      scope.sets.emplace_back(name, num_set_slots++);
    }
    root = compile(f, scope);
  }

  static std::size_t lookup(
      const std::vector<std::pair<std::string, std::size_t>>& names,
      const std::string& name) {
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    throw FormulaError("unbound variable '" + name + "'");
  }

  std::size_t emit(Instr instr) {
    code.push_back(std::move(instr));
    return code.size() - 1;
  }

  std::size_t compile(const Formula& f, Scope& scope) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::False:
        return emit({Op::False, {}, {}});
      case K::True:
        return emit({Op::True, {}, {}});
      case K::Atom: {
        auto id = voc.find(f.predicate());
        if (!id) {
          throw FormulaError("unknown predicate '" + f.predicate() + "'");
        }
        if (voc[*id].arity != f.variables().size()) {
          throw FormulaError("predicate '" + f.predicate() + "' has arity " +
                             std::to_string(voc[*id].arity));
        }
        Instr in{Op::Atom, *id, {}};
        for (const auto& v : f.variables()) {
          in.slots.push_back(lookup(scope.vars, v));
        }
        return emit(std::move(in));
      }
      case K::Not: {
        std::size_t c = compile(f.body(), scope);
        Instr in{Op::Not, {}, {}};
        in.lhs = c;
        return emit(std::move(in));
      }
      case K::Or: {
        std::size_t a = compile(f.lhs(), scope);
        std::size_t b = compile(f.rhs(), scope);
        Instr in{Op::Or, {}, {}};
        in.lhs = a;
        in.rhs = b;
        return emit(std::move(in));
      }
      case K::Exists: {
        std::size_t slot = num_slots++;
        scope.vars.emplace_back(f.bound_variable(), slot);
        std::size_t c = compile(f.body(), scope);
        scope.vars.pop_back();
        Instr in{Op::Exists, {}, {slot}};
        in.lhs = c;
        return emit(std::move(in));
      }
      case K::TransitiveClosure: {
        const auto& v = f.variables();
        std::size_t a1 = lookup(scope.vars, v[2]);
        std::size_t a2 = lookup(scope.vars, v[3]);
        std::size_t b1 = num_slots++;
        std::size_t b2 = num_slots++;
        scope.vars.emplace_back(v[0], b1);
        scope.vars.emplace_back(v[1], b2);
        std::size_t c = compile(f.body(), scope);
        scope.vars.pop_back();
        scope.vars.pop_back();
        Instr in{Op::TransitiveClosure, {}, {b1, b2, a1, a2}};
        in.lhs = c;
        auto fv = free_variables(f.body());
        bool self_contained =
            free_set_variables(f.body()).empty() &&
            std::all_of(fv.begin(), fv.end(), [&](const std::string& x) {
              return x == v[0] || x == v[1];
            });
        if (self_contained) in.cache = num_caches++;
        return emit(std::move(in));
      }
      case K::SetMember: {
        Instr in{Op::Member, {}, {lookup(scope.vars, f.variables()[0]),
                                  lookup(scope.sets, f.variables()[1])}};
        return emit(std::move(in));
      }
      case K::ExistsSets: {
        Instr in{Op::ExistsSets, {}, {}};
        for (const auto& name : f.variables()) {
          std::size_t slot = num_set_slots++;
          scope.sets.emplace_back(name, slot);
          in.slots.push_back(slot);
        }
        in.lhs = compile(f.body(), scope);
        for (std::size_t i = 0; i < f.variables().size(); ++i) {
          scope.sets.pop_back();
        }
        return emit(std::move(in));
      }
    }
    throw FormulaError("unsupported formula");
  }
};

namespace {

struct Context {
  const StructureBase& s;
  const std::vector<Instr>& code;
  std::size_t n;
  std::vector<std::size_t> env;
  std::vector<SetValue> sets;
  std::vector<std::vector<TruthValue>> caches;

  TruthValue eval(std::size_t pc) {
    const Instr& in = code[pc];
    switch (in.op) {
      case Op::False:
        return TruthValue::False;
      case Op::True:
        return TruthValue::True;
      case Op::Atom: {
        std::size_t args[8];
        std::size_t r = in.slots.size();
        if (r <= 8) {
          for (std::size_t i = 0; i < r; ++i) args[i] = env[in.slots[i]];
          return s.truth_unchecked(in.pred, args);
        }
        std::vector<std::size_t> big(r);
        for (std::size_t i = 0; i < r; ++i) big[i] = env[in.slots[i]];
        return s.truth_unchecked(in.pred, big.data());
      }
      case Op::Not:
        return kleene_not(eval(in.lhs));
      case Op::Or: {
        TruthValue a = eval(in.lhs);
        if (a == TruthValue::True) return a;
        return kleene_or(a, eval(in.rhs));
      }
      case Op::Exists: {
        TruthValue best = TruthValue::False;
        std::size_t slot = in.slots[0];
        for (std::size_t u = 0; u < n; ++u) {
          env[slot] = u;
          best = kleene_or(best, eval(in.lhs));
          if (best == TruthValue::True) break;
        }
        return best;
      }
      case Op::TransitiveClosure: {
        std::size_t a1 = env[in.slots[2]];
        std::size_t a2 = env[in.slots[3]];
        if (in.cache != kNoCache) {
          auto& m = caches[in.cache];
          if (m.empty()) m = closure(in);
          return m[a1 * n + a2];
        }
        return closure(in)[a1 * n + a2];
      }
      case Op::Member: {
        std::size_t u = env[in.slots[0]];
        const SetValue& v = sets[in.slots[1]];
        std::uint64_t bit = std::uint64_t{1} << u;
        if ((v.known & bit) == 0) return TruthValue::Half;
        return to_truth((v.value & bit) != 0);
      }
      case Op::ExistsSets: {
        for (auto slot : in.slots) sets[slot] = {};
        return search_sets(in, 0);
      }
    }
    return TruthValue::Half;
  }

  std::vector<TruthValue> closure(const Instr& in) {
    std::size_t b1 = in.slots[0], b2 = in.slots[1];
    std::vector<TruthValue> m(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = 0; w < n; ++w) {
        env[b1] = u;
        env[b2] = w;
        m[u * n + w] = eval(in.lhs);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        TruthValue ik = m[i * n + k];
        if (ik == TruthValue::False) continue;
        for (std::size_t j = 0; j < n; ++j) {
          TruthValue via = kleene_and(ik, m[k * n + j]);
          m[i * n + j] = kleene_or(m[i * n + j], via);
        }
      }
    }
    return m;
  }

  // Decides memberships node by node, all sets of a node at a time.
  TruthValue search_sets(const Instr& in, std::size_t depth) {
    TruthValue v = eval(in.lhs);
    std::size_t k = in.slots.size();
    if (is_definite(v) || depth == n * k) return v;
    std::size_t u = depth / k;
    std::size_t slot = in.slots[depth % k];
    std::uint64_t bit = std::uint64_t{1} << u;
    TruthValue best = TruthValue::False;
    for (int choice = 0; choice < 2; ++choice) {
      sets[slot].known |= bit;
      if (choice) {
        sets[slot].value |= bit;
      } else {
        sets[slot].value &= ~bit;
      }
      best = kleene_or(best, search_sets(in, depth + 1));
      if (best == TruthValue::True) break;
    }
    sets[slot].known &= ~bit;
    sets[slot].value &= ~bit;
    return best;
  }
};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, const Vocabulary& voc)
    : impl_(std::make_unique<Impl>(f, voc)) {}
CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula&&) noexcept = default;
CompiledFormula& CompiledFormula::operator=(CompiledFormula&&) noexcept =
    default;

const Formula& CompiledFormula::formula() const noexcept {
  return impl_->formula;
}
const Vocabulary& CompiledFormula::vocabulary() const noexcept {
  return impl_->voc;
}
bool CompiledFormula::uses_sets() const noexcept { return impl_->sets; }

TruthValue CompiledFormula::evaluate(const StructureBase& s,
                                     const Assignment& z) const {
  const Impl& c = *impl_;
  if (!(s.vocabulary() == c.voc)) {
    throw FormulaError("structure vocabulary differs from the formula's");
  }
  std::size_t n = s.size();
  if (c.sets && n > 64) {
    throw FormulaError("set formulas need a universe of at most 64 nodes");
  }
  Context ctx{s, c.code, n, std::vector<std::size_t>(c.num_slots, 0),
              std::vector<SetValue>(c.num_set_slots),
              std::vector<std::vector<TruthValue>>(c.num_caches)};
  for (std::size_t i = 0; i < c.free_vars.size(); ++i) {
    auto it = z.nodes.find(c.free_vars[i]);
    if (it == z.nodes.end()) {
      throw FormulaError("assignment misses variable '" + c.free_vars[i] +
                         "'");
    }
    if (it->second >= n) {
      throw FormulaError("variable '" + c.free_vars[i] +
                         "' is assigned a node outside the universe");
    }
    ctx.env[i] = it->second;
  }
  for (std::size_t i = 0; i < c.free_sets.size(); ++i) {
    auto it = z.sets.find(c.free_sets[i]);
    if (it == z.sets.end()) {
      throw FormulaError("unbound set variable '" + c.free_sets[i] + "'");
    }
    SetValue v{n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0};
    for (auto u : it->second) {
      if (u >= n) {
        throw FormulaError("set variable '" + c.free_sets[i] +
                           "' contains a node outside the universe");
      }
      v.value |= std::uint64_t{1} << u;
    }
    ctx.sets[i] = v;
  }
  return ctx.eval(c.root);
}

namespace {

void require_set_free(const Formula& f) {
  if (uses_sets(f)) {
    throw FormulaError("set constructs need eval_mso");
  }
}

}  // namespace

bool eval2(const TwoValuedStructure& s, const Formula& f, const Assignment& z) {
  require_set_free(f);
  return CompiledFormula(f, s.vocabulary()).evaluate(s, z) == TruthValue::True;
}

bool eval2(const TwoValuedStructure& s, const CompiledFormula& f,
           const Assignment& z) {
  require_set_free(f.formula());
  return f.evaluate(s, z) == TruthValue::True;
}

TruthValue eval3(const ThreeValuedStructure& s, const Formula& f,
                 const Assignment& z) {
  require_set_free(f);
  return CompiledFormula(f, s.vocabulary()).evaluate(s, z);
}

TruthValue eval3(const ThreeValuedStructure& s, const CompiledFormula& f,
                 const Assignment& z) {
  require_set_free(f.formula());
  return f.evaluate(s, z);
}

bool eval_mso(const TwoValuedStructure& s, const Formula& f,
              const Assignment& z) {
  return CompiledFormula(f, s.vocabulary()).evaluate(s, z) == TruthValue::True;
}

bool eval_mso(const TwoValuedStructure& s, const CompiledFormula& f,
              const Assignment& z) {
  return f.evaluate(s, z) == TruthValue::True;
}

}  // namespace hat
