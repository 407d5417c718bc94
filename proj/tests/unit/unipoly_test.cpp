// Copyright 2026 The lorflats Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lorflats/unipoly.hpp"

#include <gtest/gtest.h>

namespace lorflats {
namespace {

UniPoly from_ints(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return UniPoly(v);
}

TEST(UniPolyTest, TrimsLeadingZeros) {
  EXPECT_EQ(from_ints({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(from_ints({0, 0}).is_zero());
  EXPECT_EQ(UniPoly().degree(), -1);
}

TEST(UniPolyTest, Arithmetic) {
  const UniPoly a = from_ints({-1, 1});
  const UniPoly b = from_ints({-2, 1});
  EXPECT_EQ(a * b, from_ints({2, -3, 1}));
  EXPECT_EQ(a + b, from_ints({-3, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * b).evaluate(2), 0);
  EXPECT_EQ((a * b).evaluate(ratio(1, 2)), ratio(3, 4));
}

TEST(UniPolyTest, DivideByLinear) {
  const auto [q, r] = from_ints({-8, 14, -7, 1}).divide_by_linear(1);
  EXPECT_EQ(q, from_ints({8, -6, 1}));
  EXPECT_EQ(r, 0);
  const auto [q2, r2] = from_ints({1, 0, 1}).divide_by_linear(1);
  EXPECT_EQ(r2, 2);
  EXPECT_EQ(q2 * UniPoly::linear_factor(1) + UniPoly({r2}), from_ints({1, 0, 1}));
}

TEST(UniPolyTest, Formatting) {
  EXPECT_EQ(from_ints({2, -3, 1}).to_string(), "t^2 - 3*t + 2");
  EXPECT_EQ(from_ints({0, -1}).to_string(), "-t");
  EXPECT_EQ(UniPoly().to_string(), "0");
  EXPECT_EQ(from_ints({8, -6, 1}).absolute_coefficients_leading_first(),
            (std::vector<Rational>{1, 6, 8}));
}

}  // namespace
}  // namespace lorflats
