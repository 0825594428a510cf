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

#include "hat/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "hat/error.hpp"
#include "hat/semantics.hpp"

namespace hat {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kMax / b) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kMax - b ? kMax : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp && r != kMax; ++i) r = sat_mul(r, base);
  return r;
}

bool is_functional(const SearchSpace& space, PredicateId p) {
  return std::find(space.functional.begin(), space.functional.end(), p) !=
         space.functional.end();
}

void check_space(const Vocabulary& voc, const SearchSpace& space) {
  for (const auto& sig : space.unary_signatures) {
    if (sig.size() != voc.unary().size()) {
      throw FormulaError("unary signature size does not match the vocabulary");
    }
  }
  for (auto p : space.functional) {
    if (p.index >= voc.size() || voc[p].arity != 2 || p == voc.eq()) {
      throw FormulaError("functional predicates must be binary and not eq");
    }
  }
}

std::uint64_t count_for_size(const Vocabulary& voc, const SearchSpace& space,
                             std::size_t n) {
  std::uint64_t total = 1;
  std::uint64_t bits = 0;
  for (std::size_t i = 1; i < voc.size(); ++i) {
    PredicateId p{i};
    std::size_t r = voc[p].arity;
    if (r == 1 && !space.unary_signatures.empty()) continue;
    if (is_functional(space, p)) {
      total = sat_mul(total, sat_pow(n + 1, n));
      continue;
    }
    bits = sat_add(bits, sat_pow(n, r));
  }
  if (!space.unary_signatures.empty()) {
    total = sat_mul(total, sat_pow(space.unary_signatures.size(), n));
  }
  if (bits >= 64) return total == 0 ? 0 : kMax;
  return sat_mul(total, std::uint64_t{1} << bits);
}

}  // namespace

std::uint64_t predicted_count(const Vocabulary& voc,
                              const EnumerationOptions& options) {
  check_space(voc, options.space);
  std::uint64_t total = 0;
  for (std::size_t n = options.include_empty ? 0 : 1; n <= options.max_nodes;
       ++n) {
    total = sat_add(total, count_for_size(voc, options.space, n));
  }
  return total;
}

struct StructureEnumerator::Impl {
  enum class DigitKind { Nullary, Signature, UnaryBit, Successor, Bit };

  struct Digit {
    DigitKind kind;
    PredicateId p;
    std::size_t radix;
    std::size_t node = 0;
    std::size_t args_offset = 0;
  };

  Vocabulary voc;
  EnumerationOptions options;
  std::optional<CompiledFormula> filter;
  std::uint64_t examined = 0;
  std::uint64_t predicted = 0;

  std::size_t n = 0;
  bool started = false;
  bool done = false;
  std::optional<TwoValuedStructure> current;
  std::vector<Digit> digits;
  std::vector<std::size_t> values;
  std::vector<std::size_t> args;

  Impl(Vocabulary v, EnumerationOptions o)
      : voc(std::move(v)), options(std::move(o)) {
    predicted = predicted_count(voc, options);
    if (options.budget != 0 && predicted > options.budget) {
      throw BudgetExceeded("enumeration space of " + std::to_string(predicted) +
                               " structures exceeds the budget of " +
                               std::to_string(options.budget),
                           predicted, 0, options.budget);
    }
    if (options.filter) {
      if (!is_closed(*options.filter)) {
        throw FormulaError("enumeration filter must be closed");
      }
      filter.emplace(*options.filter, voc);
    }
    n = options.include_empty ? 0 : 1;
  }

  void setup() {
    current.emplace(TwoValuedStructure::with_canonical_nodes(voc, n));
    digits.clear();
    args.clear();
    const auto& space = options.space;
    for (auto p : voc.of_arity(0)) {
      digits.push_back({DigitKind::Nullary, p, 2});
    }
    const auto& unary = voc.unary();
    for (std::size_t u = 0; u < n; ++u) {
      if (!space.unary_signatures.empty()) {
        digits.push_back({DigitKind::Signature, PredicateId{},
                          space.unary_signatures.size(), u});
        continue;
      }
      for (auto p : unary) digits.push_back({DigitKind::UnaryBit, p, 2, u});
    }
    for (std::size_t i = 1; i < voc.size(); ++i) {
      PredicateId p{i};
      std::size_t r = voc[p].arity;
      if (r < 2) continue;
      if (is_functional(space, p)) {
        for (std::size_t u = 0; u < n; ++u) {
          digits.push_back({DigitKind::Successor, p, n + 1, u});
        }
        continue;
      }
      for_each_tuple(n, r, [&](auto t) {
        digits.push_back({DigitKind::Bit, p, 2, 0, args.size()});
        args.insert(args.end(), t.begin(), t.end());
      });
    }
    values.assign(digits.size(), 0);
    for (std::size_t d = 0; d < digits.size(); ++d) apply(d);
  }

  void apply(std::size_t d) {
    const Digit& g = digits[d];
    std::size_t v = values[d];
    auto& s = *current;
    switch (g.kind) {
      case DigitKind::Nullary:
        s.set_unchecked(g.p, nullptr, v != 0);
        return;
      case DigitKind::UnaryBit:
        s.set_unchecked(g.p, &g.node, v != 0);
        return;
      case DigitKind::Signature: {
        const auto& sig = options.space.unary_signatures[v];
        const auto& unary = voc.unary();
        for (std::size_t k = 0; k < unary.size(); ++k) {
          s.set_unchecked(unary[k], &g.node, sig[k]);
        }
        return;
      }
      case DigitKind::Successor:
        for (std::size_t w = 0; w < n; ++w) {
          std::size_t t[2] = {g.node, w};
          s.set_unchecked(g.p, t, v == w + 1);
        }
        return;
      case DigitKind::Bit:
        s.set_unchecked(g.p, args.data() + g.args_offset, v != 0);
        return;
    }
  }

  // Advances the odometer; false when the current size is exhausted.
  bool increment() {
    std::size_t d = digits.size();
    while (d > 0) {
      --d;
      if (++values[d] < digits[d].radix) {
        apply(d);
        return true;
      }
      values[d] = 0;
      apply(d);
    }
    return false;
  }

  bool advance() {
    if (done) return false;
    if (!started) {
      started = true;
    } else if (increment()) {
      return true;
    } else {
      ++n;
    }
    while (n <= options.max_nodes) {
      if (count_for_size(voc, options.space, n) != 0) {
        setup();
        return true;
      }
      ++n;
    }
    done = true;
    return false;
  }

  bool next() {
    while (advance()) {
      ++examined;
      if (!filter || filter->evaluate(*current) == TruthValue::True) {
        return true;
      }
    }
    return false;
  }
};

StructureEnumerator::StructureEnumerator(Vocabulary voc,
                                         EnumerationOptions options)
    : impl_(std::make_unique<Impl>(std::move(voc), std::move(options))) {}
StructureEnumerator::~StructureEnumerator() = default;
StructureEnumerator::StructureEnumerator(StructureEnumerator&&) noexcept =
    default;
StructureEnumerator& StructureEnumerator::operator=(
    StructureEnumerator&&) noexcept = default;

bool StructureEnumerator::next() { return impl_->next(); }

const TwoValuedStructure& StructureEnumerator::current() const {
  if (!impl_->current || impl_->done) {
    throw StructureError("enumerator has no current structure");
  }
  return *impl_->current;
}

std::uint64_t StructureEnumerator::examined() const noexcept {
  return impl_->examined;
}

std::uint64_t StructureEnumerator::predicted() const noexcept {
  return impl_->predicted;
}

std::vector<TwoValuedStructure> enumerate_structures(
    const Vocabulary& voc, std::size_t max_nodes,
    const std::optional<Formula>& filter) {
  EnumerationOptions options;
  options.max_nodes = max_nodes;
  options.filter = filter;
  StructureEnumerator e(voc, options);
  std::vector<TwoValuedStructure> out;
  while (e.next()) out.push_back(e.current());
  return out;
}

}  // namespace hat
