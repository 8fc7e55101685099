#include <gtest/gtest.h>

#include <random>

#include "rlab/exact/snf.hpp"

using namespace rlab;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

IntMatrix diagonal_matrix(const std::vector<BigInt>& d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Snf, DiagonalTwoThree) {
  auto r = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2));
  EXPECT_EQ(r.diagonal, ints({1, 6}));
}

TEST(Snf, Identity) {
  auto r = snf(IntMatrix::identity(5));
  EXPECT_EQ(r.diagonal, ints({1, 1, 1, 1, 1}));
}

TEST(Snf, EmptyMatrices) {
  EXPECT_TRUE(snf(IntMatrix(0, 0)).diagonal.empty());
  EXPECT_EQ(abelian_invariants(IntMatrix(0, 2)), ints({0, 0}));
  EXPECT_TRUE(abelian_invariants(IntMatrix(3, 0)).empty());
  EXPECT_EQ(abelian_invariants(IntMatrix(2, 2)), ints({0, 0}));
}

TEST(Snf, ZerosTrailAndFreeRank) {
  auto inv = abelian_invariants(IntMatrix::from_rows({{0, 4, 0}}, 3));
  EXPECT_EQ(inv, ints({4, 0, 0}));
  EXPECT_EQ(free_rank(inv), 2u);
}

TEST(Snf, FibonacciEightRelationMatrix) {
  // x_i x_{i+1} x_{i+2}^{-1}, indices mod 8
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    m(i, i) += 1;
    m(i, (i + 1) % 8) += 1;
    m(i, (i + 2) % 8) -= 1;
  }
  EXPECT_EQ(abelian_invariants(m), ints({3, 15}));
}

TEST(Snf, TransformsReconstructDiagonal) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 9);
    auto r = snf(m, true);
    ASSERT_TRUE(r.transforms);
    const auto& [left, right] = *r.transforms;
    EXPECT_EQ(left * m * right, diagonal_matrix(r.diagonal, rows, cols));
    EXPECT_EQ(abs(determinant(left)), 1);
    EXPECT_EQ(abs(determinant(right)), 1);
    for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i) {
      EXPECT_GE(r.diagonal[i], 0);
      if (r.diagonal[i + 1] != 0) {
        ASSERT_NE(r.diagonal[i], 0) << "zeros must trail";
        EXPECT_EQ(r.diagonal[i + 1] % r.diagonal[i], 0);
      }
    }
  }
}

TEST(Snf, InvariantUnderElementaryOperations) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    auto base = snf(m).diagonal;
    IntMatrix t = m;
    t.swap_rows(0, rows - 1);
    t.swap_cols(0, cols - 1);
    t.add_row_multiple(1, 0, BigInt(static_cast<long>(rng() % 7) - 3));
    EXPECT_EQ(snf(t).diagonal, base);
    // Duplicated relators do not change the group.
    EXPECT_EQ(abelian_invariants(m.stacked(m)), abelian_invariants(m));
  }
}

TEST(Snf, EntryGrowthStaysBounded) {
  // Entries chosen so naive elimination would produce large intermediates.
  IntMatrix m = IntMatrix::from_rows(
      {{1234567, 7654321, 1111111}, {2345678, 8765432, 2222223}, {3456789, 9876543, 3333335}}, 3);
  auto r = snf(m, true);
  EXPECT_EQ(r.transforms->left * m * r.transforms->right, diagonal_matrix(r.diagonal, 3, 3));
  BigInt det = determinant(m);
  BigInt prod = 1;
  for (const auto& d : r.diagonal) prod *= d;
  EXPECT_EQ(prod, abs(det));
}
