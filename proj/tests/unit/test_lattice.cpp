#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/lattice.hpp"

using namespace toric;

TEST(Numbers, FloorDivisionRoundsDown) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_mod(-7, 2), 1);
}

TEST(Numbers, RationalText) {
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Hermite, Identity) {
  const auto h = hermite_normal_form(IntegerMatrix::identity(3));
  EXPECT_EQ(h.hermite, IntegerMatrix::identity(3));
  EXPECT_EQ(h.transform, IntegerMatrix::identity(3));
}

TEST(Hermite, SmallExample) {
  const IntegerMatrix m{{2, 4}, {1, 1}};
  const auto h = hermite_normal_form(m);
  EXPECT_EQ(h.hermite, (IntegerMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(h.transform * m, h.hermite);
  EXPECT_TRUE(is_unimodular(h.transform));
}

TEST(Hermite, ZeroMatrix) {
  const auto h = hermite_normal_form(IntegerMatrix(2, 2));
  EXPECT_EQ(h.hermite, IntegerMatrix(2, 2));
  EXPECT_EQ(h.transform, IntegerMatrix::identity(2));
}

TEST(Hermite, RandomMatricesSatisfyContract) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-5, 5), dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(rng);
    const auto h = hermite_normal_form(m);
    ASSERT_EQ(h.transform * m, h.hermite);
    ASSERT_TRUE(is_unimodular(h.transform));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(integer_kernel(IntegerMatrix{{1, 1}}), (std::vector<LatticeVector>{{1, -1}}));
  EXPECT_EQ(integer_kernel(IntegerMatrix{{2, 1, 0}, {0, 1, 2}}), (std::vector<LatticeVector>{{1, -2, 1}}));
  EXPECT_TRUE(integer_kernel(IntegerMatrix::identity(2)).empty());
}

TEST(Kernel, RandomRankNullity) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> e(-3, 3), dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(rng);
    const auto k = integer_kernel(m);
    for (const auto& v : k) ASSERT_TRUE((m * v).is_zero());
    ASSERT_EQ(k.size() + rank(m), m.cols());
    if (!k.empty()) {
      // Saturated: the Smith invariants of the basis are all 1.
      for (const auto& d : smith_normal_form(IntegerMatrix::from_rows(k)).invariants) ASSERT_EQ(d, 1);
    }
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntegerMatrix::identity(4)), 1);
  EXPECT_EQ(determinant(IntegerMatrix::from_columns({{1, 1, 0}, {1, 1, 1}, {1, 2, 0}})), -1);
  EXPECT_EQ(determinant(IntegerMatrix::from_columns({{0, 0, 1}, {1, 1, 1}, {1, 2, 0}})), 1);
  EXPECT_THROW(determinant(IntegerMatrix(2, 3)), DomainError);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> e(-6, 6), dim(1, 5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = dim(rng);
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    ASSERT_EQ(determinant(m), oracle::determinant(m)) << to_string(m);
  }
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(is_unimodular(IntegerMatrix::identity(3)));
  EXPECT_FALSE(is_unimodular(IntegerMatrix{{2, 0}, {0, 1}}));
  EXPECT_TRUE(is_unimodular(IntegerMatrix{{0, 1, 1}, {0, 1, 2}, {1, 1, 0}}));
  EXPECT_THROW(is_unimodular(IntegerMatrix(1, 2)), DomainError);
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive({2, 4, 0}), (LatticeVector{1, 2, 0}));
  EXPECT_EQ(primitive({0, 0, 2}), (LatticeVector{0, 0, 1}));
  EXPECT_EQ(primitive({3, 5}), (LatticeVector{3, 5}));
  EXPECT_EQ(primitive({-6, 9}), (LatticeVector{-2, 3}));
  EXPECT_THROW(primitive({0, 0}), DomainError);
}

TEST(Smith, InvariantsDivideAndTransformsAreUnimodular) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> e(-4, 4), dim(1, 4);
  for (int t = 0; t < 100; ++t) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(rng);
    const auto s = smith_normal_form(m);
    ASSERT_EQ(s.left * m * s.right, s.diagonal);
    ASSERT_TRUE(is_unimodular(s.left));
    ASSERT_TRUE(is_unimodular(s.right));
    for (std::size_t i = 1; i < s.invariants.size(); ++i)
      ASSERT_EQ(s.invariants[i] % s.invariants[i - 1], 0);
  }
}

TEST(RationalInverse, RoundTrip) {
  const IntegerMatrix m{{2, 1}, {1, 1}};
  const auto inv = rational_inverse(m);
  EXPECT_EQ(inv[0][0], 1);
  EXPECT_EQ(inv[0][1], -1);
  EXPECT_EQ(inv[1][1], 2);
  EXPECT_THROW(rational_inverse(IntegerMatrix{{1, 2}, {2, 4}}), DomainError);
}
