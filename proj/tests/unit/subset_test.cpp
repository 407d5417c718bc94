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

#include "lorflats/subset.hpp"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

namespace lorflats {
namespace {

TEST(SubsetTest, BasicMembership) {
  const Subset s = Subset::of({0, 2, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.elements(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(s.min_element(), 0);
  EXPECT_EQ(s.without(0).min_element(), 2);
  EXPECT_EQ(to_string(s), "[0,2,5]");
  EXPECT_EQ(to_string(Subset()), "[]");
}

TEST(SubsetTest, OrderRelations) {
  const Subset a = Subset::of({1});
  const Subset b = Subset::of({1, 3});
  EXPECT_TRUE(a.is_proper_subset_of(b));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_proper_subset_of(a));
  EXPECT_TRUE(a.comparable_with(b));
  EXPECT_FALSE(Subset::of({0}).comparable_with(Subset::of({1})));
  EXPECT_EQ(b - a, Subset::of({3}));
  EXPECT_EQ(Subset::full(4).size(), 4);
  EXPECT_EQ(Subset::full(64).size(), 64);
}

TEST(SubsetTest, CanonicalOrderIsSizeThenFirstDifference) {
  std::vector<Subset> sets = {Subset::of({1, 2}), Subset::of({2}), Subset(),
                              Subset::of({0, 2}), Subset::of({0})};
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  const std::vector<Subset> expected = {Subset(), Subset::of({0}), Subset::of({2}),
                                        Subset::of({0, 2}), Subset::of({1, 2})};
  EXPECT_EQ(sets, expected);
}

TEST(SubsetTest, SubmaskEnumerationVisitsEveryOnce) {
  const Subset mask = Subset::of({1, 3, 4});
  std::vector<std::uint64_t> seen;
  for_each_submask(mask, [&](Subset s) { seen.push_back(s.bits()); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen.size(), 8U);
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  for (std::uint64_t b : seen) EXPECT_TRUE(Subset(b).is_subset_of(mask));
}

}  // namespace
}  // namespace lorflats
