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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace hat {

/// Kleene truth values. The numeric encoding realizes the truth order
/// 0 < 1/2 < 1, so Kleene conjunction and disjunction are min and max.
/// The information order is a different relation; see `less_informative`.
enum class TruthValue : std::uint8_t { False = 0, Half = 1, True = 2 };

constexpr TruthValue to_truth(bool b) noexcept {
  return b ? TruthValue::True : TruthValue::False;
}

constexpr bool is_definite(TruthValue v) noexcept {
  return v != TruthValue::Half;
}

constexpr TruthValue kleene_not(TruthValue v) noexcept {
  return static_cast<TruthValue>(2 - static_cast<std::uint8_t>(v));
}

constexpr TruthValue kleene_or(TruthValue a, TruthValue b) noexcept {
  return a < b ? b : a;
}

constexpr TruthValue kleene_and(TruthValue a, TruthValue b) noexcept {
  return a < b ? a : b;
}

/// Information order: a ⊑ b iff a == b or b == 1/2.
constexpr bool information_leq(TruthValue a, TruthValue b) noexcept {
  return a == b || b == TruthValue::Half;
}

/// Least upper bound under the information order.
constexpr TruthValue truth_join(TruthValue a, TruthValue b) noexcept {
  return a == b ? a : TruthValue::Half;
}

/// "0", "1", or "1/2".
std::string_view to_string(TruthValue v) noexcept;

/// Accepts "0", "1", "1/2".
std::optional<TruthValue> parse_truth(std::string_view text) noexcept;

std::ostream& operator<<(std::ostream& os, TruthValue v);

}  // namespace hat
