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

#include "lorflats/linalg.hpp"

#include <random>

#include <gtest/gtest.h>

#include "lorflats/error.hpp"
#include "lorflats/lorentzian.hpp"
#include "lorflats/sym_matrix.hpp"
#include "oracles.hpp"

namespace lorflats {
namespace {

TEST(SymMatrixTest, FromRowsAndText) {
  const SymMatrix a = SymMatrix::from_rows({{1, ratio(1, 2)}, {ratio(1, 2), -3}});
  EXPECT_EQ(a(1, 0), ratio(1, 2));
  EXPECT_EQ(a.to_string(), "[[1, 1/2], [1/2, -3]]");
  EXPECT_EQ(a.rows()[1][1], -3);
  SymMatrix b = SymMatrix::identity(2);
  b *= 2;
  EXPECT_EQ((a - b)(0, 0), -1);
  for (const auto& bad : std::vector<std::vector<std::vector<Rational>>>{
           {{1, 2}, {3, 4}}, {{1, 2}, {2}}}) {
    try {
      SymMatrix::from_rows(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
  }
  EXPECT_THROW(SymMatrix(2) - SymMatrix(3), Error);
}

TEST(RowEchelonTest, RankAndReduction) {
  RowEchelon ech(3);
  EXPECT_TRUE(ech.insert({1, 2, 3}));
  EXPECT_TRUE(ech.insert({2, 4, 7}));
  EXPECT_FALSE(ech.insert({3, 6, 10}));
  EXPECT_EQ(ech.rank(), 2U);
  EXPECT_EQ(ech.free_columns(), (std::vector<std::size_t>{1}));
  // Reduced rows express every vector through the free column only.
  const Row r = ech.reduce({0, 1, 0});
  EXPECT_EQ(r[0], 0);
  EXPECT_EQ(r[2], 0);
  EXPECT_EQ(r[1], 1);
  const Row z = ech.reduce({1, 2, 3});
  for (const Rational& x : z) EXPECT_EQ(x, 0);
}

TEST(CharpolyTest, SmallMatrices) {
  // [[2, 1], [1, 2]] has eigenvalues 1 and 3: x^2 - 4x + 3.
  const UniPoly p = characteristic_polynomial(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  EXPECT_EQ(p.to_string("x"), "x^2 - 4*x + 3");
  const std::vector<Row> nonsym = {{0, 1}, {0, 0}};
  EXPECT_EQ(characteristic_polynomial(nonsym).to_string("x"), "x^2");
  EXPECT_EQ(characteristic_polynomial(SymMatrix(0)).to_string("x"), "1");
}

TEST(CharpolyTest, CayleyHamiltonOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const SymMatrix a = testing::random_symmetric(rng, n);
    const UniPoly p = characteristic_polynomial(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    // p(A) = 0 via Horner on matrices.
    std::vector<Row> acc(n, Row(n));
    for (int k = p.degree(); k >= 0; --k) {
      std::vector<Row> next(n, Row(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t l = 0; l < n; ++l) next[i][j] += acc[i][l] * a(l, j);
        }
        next[i][i] += p.coefficient(k);
      }
      acc = std::move(next);
    }
    for (const Row& row : acc) {
      for (const Rational& x : row) EXPECT_EQ(x, 0);
    }
  }
}

TEST(InertiaTest, KnownSignatures) {
  EXPECT_EQ(inertia(SymMatrix::from_rows({{0, 1}, {1, 0}})), (InertiaTriple{1, 0, 1}));
  EXPECT_EQ(inertia(SymMatrix::identity(3)), (InertiaTriple{3, 0, 0}));
  EXPECT_EQ(inertia(SymMatrix(2)), (InertiaTriple{0, 2, 0}));
  EXPECT_EQ(inertia(SymMatrix::from_rows({{1, 1}, {1, 1}})), (InertiaTriple{1, 1, 0}));
  EXPECT_EQ(to_string(InertiaTriple{1, 2, 3}), "(1, 2, 3)");
  const std::vector<Row> ragged = {{1, 2}, {3, 4}};
  try {
    inertia(ragged);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
}

TEST(InertiaTest, AgreesWithFloatEigensolver) {
  std::mt19937_64 rng(19);
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
    const SymMatrix a = testing::random_symmetric(rng, n);
    const auto f = testing::float_inertia(a);
    const InertiaTriple exact = inertia(a);
    EXPECT_EQ(exact.n_plus + exact.n_zero + exact.n_minus, n);
    if (f.n_zero != 0) continue;
    ++compared;
    EXPECT_EQ(exact, (InertiaTriple{f.n_plus, 0, f.n_minus})) << a.to_string();
  }
  EXPECT_GT(compared, 30);
}

TEST(InertiaTest, SingularMatricesCountKernel) {
  // Rank one outer product v v^T has inertia (1, n-1, 0).
  const std::vector<Rational> v = {1, -2, ratio(1, 3), 4};
  SymMatrix a(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) a.set(i, j, v[i] * v[j]);
  }
  EXPECT_EQ(inertia(a), (InertiaTriple{1, 3, 0}));
  a *= -1;
  EXPECT_EQ(inertia(a), (InertiaTriple{0, 3, 1}));
}

}  // namespace
}  // namespace lorflats
