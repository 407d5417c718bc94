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

#include "lorflats/poset.hpp"

#include <gtest/gtest.h>

#include "lorflats/error.hpp"
#include "lorflats/matroid.hpp"
#include "oracles.hpp"

namespace lorflats {
namespace {

using Index = GradedSubposet::Index;

GradedSubposet boolean(int n) {
  std::vector<Subset> all;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) all.emplace_back(s);
  return GradedSubposet::from_sets(n, all);
}

TEST(PosetTest, ElementsAreCanonicallyOrdered) {
  const GradedSubposet p = boolean(3);
  ASSERT_EQ(p.size(), 8U);
  for (Index i = 0; i + 1 < p.size(); ++i) {
    EXPECT_TRUE(canonical_less(p.element(i), p.element(i + 1)));
  }
  EXPECT_EQ(*p.bottom(), 0U);
  EXPECT_EQ(*p.top(), 7U);
}

TEST(PosetTest, RanksCoversAndIntervals) {
  const GradedSubposet p = boolean(3);
  const Index bot = p.require(Subset());
  const Index one = p.require(Subset::of({0}));
  const Index top = p.require(Subset::full(3));
  EXPECT_EQ(p.rank(bot, top), 3);
  EXPECT_EQ(p.d(bot, top), 2);
  EXPECT_TRUE(p.covers(bot, one));
  EXPECT_FALSE(p.covers(bot, top));
  EXPECT_EQ(p.open_interval(bot, top).size(), 6U);
  EXPECT_EQ(p.closed_interval(one, top).size(), 4U);
  EXPECT_EQ(p.upper_covers(one).size(), 2U);
  EXPECT_EQ(p.maximal_chains(bot, top).size(), 6U);
  const GradedSubposet sub = p.interval(one, top);
  EXPECT_EQ(sub.size(), 4U);
}

TEST(PosetTest, MeetAndJoin) {
  const GradedSubposet p = boolean(3);
  const Index a = p.require(Subset::of({0}));
  const Index b = p.require(Subset::of({1}));
  EXPECT_EQ(p.element(*p.join(a, b)), Subset::of({0, 1}));
  EXPECT_EQ(p.element(*p.meet(a, b)), Subset());
}

TEST(PosetTest, RejectsNonGradedAndDuplicates) {
  try {
    GradedSubposet::from_sets(
        3, {Subset(), Subset::of({0}), Subset::of({0, 1}), Subset::of({2}), Subset::full(3)});
    FAIL() << "accepted a non-graded poset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGraded);
  }
  try {
    GradedSubposet::from_sets(2, {Subset(), Subset()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
  try {
    boolean(2).require(Subset::of({5}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnInterval);
  }
}

TEST(MobiusTest, BooleanLatticeIsSignedPower) {
  const GradedSubposet p = boolean(4);
  const MobiusTable mu = mobius(p);
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) {
        EXPECT_EQ(mu(a, b), 0);
        continue;
      }
      const int k = (p.element(b) - p.element(a)).size();
      EXPECT_EQ(mu(a, b), k % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(MobiusTest, MatchesOracleOnCatalog) {
  for (const auto& [name, m] : testing::catalog()) {
    const FlatLattice lat = flats_lattice(m);
    const MobiusTable mu = mobius(lat.poset());
    std::vector<std::uint64_t> raw;
    for (Subset f : lat.flats()) raw.push_back(f.bits());
    const auto expected = testing::oracle_mobius(raw);
    for (Index a = 0; a < lat.size(); ++a) {
      for (Index b = 0; b < lat.size(); ++b) {
        if (!lat.poset().leq(a, b)) continue;
        EXPECT_EQ(mu(a, b), expected.at({raw[a], raw[b]})) << name;
      }
    }
  }
}

TEST(MobiusTest, FanoTopValue) {
  const FlatLattice lat = flats_lattice(fano_matroid());
  EXPECT_EQ(mobius(lat.poset())(lat.bottom(), lat.top()), -8);
}

TEST(WeisnerTest, HoldsOnCatalogLattices) {
  for (const auto& [name, m] : testing::catalog()) {
    const GradedSubposet p = flats_lattice(m).poset();
    EXPECT_TRUE(check_weisner_all(p, mobius(p))) << name;
  }
}

TEST(WeisnerTest, RejectsBadTriples) {
  const GradedSubposet p = boolean(3);
  const Index bot = p.require(Subset());
  const Index top = p.require(Subset::full(3));
  const Index pair = p.require(Subset::of({0, 1}));
  EXPECT_TRUE(weisner_check(p, bot, p.require(Subset::of({2})), top));
  try {
    weisner_check(p, bot, pair, top);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolation);
  }
}

TEST(PredicateTest, CatalogLatticesSatisfyEverything) {
  for (const auto& [name, m] : testing::catalog()) {
    const GradedSubposet p = flats_lattice(m).poset();
    EXPECT_TRUE(check_lattice_of_flats(p)) << name;
    EXPECT_TRUE(is_semimodular(p)) << name;
    EXPECT_TRUE(is_balanced(p)) << name;
    EXPECT_TRUE(is_one_balanced(p)) << name;
    EXPECT_TRUE(is_interval_connected(p)) << name;
    EXPECT_TRUE(check_mobius_sign_alternation(p, mobius(p))) << name;
  }
}

TEST(PredicateTest, GridIsBalancedButNotConnected) {
  const GradedSubposet p = testing::grid_poset();
  EXPECT_EQ(p.d(*p.bottom(), *p.top()), 2);
  EXPECT_TRUE(is_balanced(p));
  const Check c = check_interval_connected(p);
  EXPECT_FALSE(c);
  EXPECT_FALSE(c.witness.empty());
}

TEST(PredicateTest, TwoChainsFailBalance) {
  const GradedSubposet p = testing::two_chain_poset();
  EXPECT_FALSE(is_balanced(p));
  EXPECT_FALSE(is_interval_connected(p));
  EXPECT_FALSE(check_lattice_of_flats(p));
}

TEST(PredicateTest, NonSemimodularPentagonLike) {
  // {0} and {1} both cover the bottom but their join {0,1,2,3} covers neither.
  const GradedSubposet p = GradedSubposet::from_sets(
      4, {Subset(), Subset::of({0}), Subset::of({1}), Subset::of({0, 2}), Subset::of({1, 3}),
          Subset::full(4)});
  EXPECT_FALSE(is_semimodular(p));
}

}  // namespace
}  // namespace lorflats
