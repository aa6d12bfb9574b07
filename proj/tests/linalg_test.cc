// Copyright 2026 The arcforms Authors
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

#include "arcforms/linalg.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "arcforms/combinatorics.h"
#include "test_util.h"

namespace arcforms {
namespace {

using testing::Ints;

Matrix RandomMatrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.At(rng() % f.order());
  }
  return m;
}

// Leibniz sum over all permutations.
Element LeibnizDet(const Field& f, const Matrix& m) {
  IndexTuple perm(m.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Element total = Field::zero();
  do {
    Element term = f.Sign(InversionParity(perm));
    for (std::size_t i = 0; i < perm.size(); ++i) term = f.Mul(term, m(i, perm[i]));
    total = f.Add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Det, Examples) {
  const Field f5 = Field::OfOrder(5);
  EXPECT_EQ(Det(f5, Matrix::Identity(3)), Field::one());
  const Vector rows[] = {Ints(f5, {1, 2}), Ints(f5, {3, 4})};
  EXPECT_EQ(Det(f5, Matrix::FromRows(rows, 2)), Element(3));
  const Vector repeated[] = {Ints(f5, {1, 2, 3}), Ints(f5, {4, 0, 1}), Ints(f5, {1, 2, 3})};
  EXPECT_EQ(Det(f5, Matrix::FromRows(repeated, 3)), Field::zero());
  EXPECT_ARC_ERROR(Det(f5, Matrix(2, 3)), kNotSquare);
  EXPECT_ARC_ERROR(DetCofactor(f5, Matrix(3, 2)), kNotSquare);
}

TEST(Det, MethodsAgreeWithLeibnizOracle) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {7u, 9u, 8u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix m = RandomMatrix(f, 4, 4, rng);
      const Element oracle = LeibnizDet(f, m);
      EXPECT_EQ(Det(f, m), oracle);
      EXPECT_EQ(DetCofactor(f, m), oracle);
    }
  }
}

TEST(Det, Alternating) {
  std::mt19937_64 rng(3);
  const Field f = Field::OfOrder(11);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = RandomMatrix(f, 4, 4, rng);
    const Element d = Det(f, m);
    m.SwapRows(0, 2);
    EXPECT_EQ(Det(f, m), f.Neg(d));
    for (std::size_t c = 0; c < 4; ++c) m(1, c) = m(3, c);
    EXPECT_EQ(Det(f, m), Field::zero());
  }
}

TEST(Nullspace, Examples) {
  const Field f7 = Field::OfOrder(7);
  const Nullspace id = RightNullspace(f7, Matrix::Identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.basis.rows(), 0u);

  const Nullspace zero = RightNullspace(f7, Matrix(2, 3));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.basis.rows(), 3u);
  EXPECT_EQ(zero.basis, Matrix::Identity(3));

  const Vector rows[] = {Ints(f7, {1, 2, 3}), Ints(f7, {2, 4, 6})};
  const Nullspace prop = RightNullspace(f7, Matrix::FromRows(rows, 3));
  EXPECT_EQ(prop.rank, 1u);
  EXPECT_EQ(prop.basis.rows(), 2u);
}

TEST(Nullspace, BasisIsKernelAndCanonical) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {5u, 8u, 9u}) {
    const Field f = Field::OfOrder(q);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t r = 1 + rng() % 5;
      const std::size_t c = 1 + rng() % 6;
      Matrix m = RandomMatrix(f, r, c, rng);
      if (trial % 3 == 0 && r > 1) {
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);
      }
      const Nullspace ns = RightNullspace(f, m);
      EXPECT_EQ(ns.rank + ns.basis.rows(), c);
      EXPECT_EQ(ns.rank, Rank(f, m));
      for (std::size_t i = 0; i < ns.basis.rows(); ++i) {
        EXPECT_TRUE(IsZeroVector(Apply(f, m, ns.basis.RowVector(i))));
      }
      // Canonical: the basis is its own reduced row-echelon form.
      if (ns.basis.rows() > 0) {
        EXPECT_EQ(ReducedRowEchelon(f, ns.basis).reduced, ns.basis);
      }
      // Rank is invariant under row operations.
      Matrix shuffled = m;
      if (r > 1) shuffled.SwapRows(0, r - 1);
      EXPECT_EQ(Rank(f, shuffled), ns.rank);
    }
  }
}

TEST(Nullspace, RankMatchesIntegerOracle) {
  std::mt19937_64 rng(17);
  const Field f = Field::OfOrder(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    const std::size_t c = 1 + rng() % 6;
    Matrix m(r, c);
    std::vector<std::vector<std::int64_t>> ints(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        // Small values make dependencies common.
        ints[i][j] = static_cast<std::int64_t>(rng() % 3);
        m(i, j) = f.FromInt(ints[i][j]);
      }
    }
    EXPECT_EQ(Rank(f, m), testing::OracleRankModP(ints, 13));
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(23);
  const Field f = Field::OfOrder(16);
  int invertible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = RandomMatrix(f, 4, 4, rng);
    const auto inv = Inverse(f, m);
    EXPECT_EQ(inv.has_value(), !Det(f, m).is_zero());
    if (inv) {
      ++invertible;
      EXPECT_EQ(Multiply(f, m, *inv), Matrix::Identity(4));
      EXPECT_EQ(Multiply(f, *inv, m), Matrix::Identity(4));
    }
  }
  EXPECT_GT(invertible, 50);
}

TEST(Solve, ConsistentAndInconsistent) {
  const Field f = Field::OfOrder(7);
  const Vector rows[] = {Ints(f, {1, 2, 3}), Ints(f, {2, 4, 6})};
  const Matrix m = Matrix::FromRows(rows, 3);
  const auto x = Solve(f, m, Ints(f, {1, 2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(Apply(f, m, *x), Ints(f, {1, 2}));
  EXPECT_FALSE(Solve(f, m, Ints(f, {1, 3})).has_value());
}

TEST(MatrixBasics, TransposeAndShapes) {
  const Field f = Field::OfOrder(5);
  const Vector rows[] = {Ints(f, {1, 2, 3}), Ints(f, {4, 0, 1})};
  const Matrix m = Matrix::FromRows(rows, 3);
  const Matrix t = Transpose(m);
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t(2, 1), Element(1));
  EXPECT_EQ(m.Column(1), Ints(f, {2, 0}));
  EXPECT_EQ(Dot(f, m.row(0), m.row(1)), Element(2));  // 4 + 0 + 3
  EXPECT_ARC_ERROR(Multiply(f, m, m), kDimensionMismatch);
}

}  // namespace
}  // namespace arcforms
