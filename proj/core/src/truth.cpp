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

#include "hat/truth.hpp"

namespace hat {

std::string_view to_string(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::False:
      return "0";
    case TruthValue::True:
      return "1";
    case TruthValue::Half:
      break;
  }
  return "1/2";
}

std::optional<TruthValue> parse_truth(std::string_view text) noexcept {
  if (text == "0") return TruthValue::False;
  if (text == "1") return TruthValue::True;
  if (text == "1/2") return TruthValue::Half;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, TruthValue v) {
  return os << to_string(v);
}

}  // namespace hat
