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

#include <gtest/gtest.h>

#include <array>
#include <sstream>

namespace hat {
namespace {

constexpr std::array<TruthValue, 3> kAll = {TruthValue::False, TruthValue::Half,
                                            TruthValue::True};

TEST(TruthValue, KleeneTables) {
  EXPECT_EQ(kleene_and(TruthValue::True, TruthValue::Half), TruthValue::Half);
  EXPECT_EQ(kleene_and(TruthValue::False, TruthValue::Half), TruthValue::False);
  EXPECT_EQ(kleene_or(TruthValue::True, TruthValue::Half), TruthValue::True);
  EXPECT_EQ(kleene_or(TruthValue::False, TruthValue::Half), TruthValue::Half);
  EXPECT_EQ(kleene_not(TruthValue::Half), TruthValue::Half);
  EXPECT_EQ(kleene_not(TruthValue::True), TruthValue::False);
}

TEST(TruthValue, LatticeLaws) {
  for (auto a : kAll) {
    EXPECT_EQ(kleene_and(a, a), a);
    EXPECT_EQ(kleene_or(a, a), a);
    EXPECT_EQ(kleene_not(kleene_not(a)), a);
    EXPECT_EQ(kleene_and(a, TruthValue::True), a);
    EXPECT_EQ(kleene_or(a, TruthValue::False), a);
    for (auto b : kAll) {
      EXPECT_EQ(kleene_and(a, b), kleene_and(b, a));
      EXPECT_EQ(kleene_or(a, b), kleene_or(b, a));
      EXPECT_EQ(kleene_and(a, kleene_or(a, b)), a);
      EXPECT_EQ(kleene_or(a, kleene_and(a, b)), a);
      EXPECT_EQ(kleene_not(kleene_and(a, b)),
                kleene_or(kleene_not(a), kleene_not(b)));
      EXPECT_EQ(kleene_not(kleene_or(a, b)),
                kleene_and(kleene_not(a), kleene_not(b)));
      for (auto c : kAll) {
        EXPECT_EQ(kleene_and(a, kleene_and(b, c)), kleene_and(kleene_and(a, b), c));
        EXPECT_EQ(kleene_or(a, kleene_or(b, c)), kleene_or(kleene_or(a, b), c));
        EXPECT_EQ(kleene_and(a, kleene_or(b, c)),
                  kleene_or(kleene_and(a, b), kleene_and(a, c)));
        EXPECT_EQ(kleene_or(a, kleene_and(b, c)),
                  kleene_and(kleene_or(a, b), kleene_or(a, c)));
      }
    }
  }
}

TEST(TruthValue, InformationOrder) {
  for (auto a : kAll) {
    EXPECT_TRUE(information_leq(a, a));
    EXPECT_TRUE(information_leq(a, TruthValue::Half));
    for (auto b : kAll) {
      auto j = truth_join(a, b);
      // least upper bound
      EXPECT_TRUE(information_leq(a, j));
      EXPECT_TRUE(information_leq(b, j));
      for (auto c : kAll) {
        if (information_leq(a, c) && information_leq(b, c)) {
          EXPECT_TRUE(information_leq(j, c));
        }
        if (information_leq(a, b) && information_leq(b, c)) {
          EXPECT_TRUE(information_leq(a, c));
        }
      }
      if (information_leq(a, b) && information_leq(b, a)) EXPECT_EQ(a, b);
    }
  }
  EXPECT_FALSE(information_leq(TruthValue::Half, TruthValue::True));
  EXPECT_FALSE(information_leq(TruthValue::False, TruthValue::True));
}

// The connectives are monotone in the information order.
TEST(TruthValue, ConnectivesAreMonotone) {
  for (auto a : kAll) {
    for (auto a2 : kAll) {
      if (!information_leq(a, a2)) continue;
      EXPECT_TRUE(information_leq(kleene_not(a), kleene_not(a2)));
      for (auto b : kAll) {
        for (auto b2 : kAll) {
          if (!information_leq(b, b2)) continue;
          EXPECT_TRUE(information_leq(kleene_and(a, b), kleene_and(a2, b2)));
          EXPECT_TRUE(information_leq(kleene_or(a, b), kleene_or(a2, b2)));
        }
      }
    }
  }
}

TEST(TruthValue, TextRoundTrip) {
  for (auto a : kAll) {
    auto back = parse_truth(to_string(a));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, a);
  }
  EXPECT_EQ(to_string(TruthValue::Half), "1/2");
  EXPECT_FALSE(parse_truth("2").has_value());
  EXPECT_FALSE(parse_truth("").has_value());
  std::ostringstream os;
  os << TruthValue::True << TruthValue::False;
  EXPECT_EQ(os.str(), "10");
}

}  // namespace
}  // namespace hat
