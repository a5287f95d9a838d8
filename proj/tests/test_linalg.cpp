#include <gtest/gtest.h>

#include <random>

#include "stratify/linalg.hpp"

using namespace stratify;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Scalar p) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  Matrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
  const auto e = rref(Matrix::identity(2, 2));
  EXPECT_EQ(e.reduced, Matrix::identity(2, 2));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.rank(), 2u);
}

TEST(Rref, ZeroMatrix) {
  const auto e = rref(Matrix(3, 3, 2));
  EXPECT_TRUE(e.reduced.is_zero());
  EXPECT_TRUE(e.pivots.empty());
  EXPECT_EQ(e.rank(), 0u);
}

TEST(Rref, RepeatedRowOverF2) {
  const auto e = rref(Matrix::from_rows(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(e.reduced, Matrix::from_rows(2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(e.rank(), 1u);
}

TEST(Rref, Idempotent) {
  std::mt19937 rng(7);
  for (Scalar p : {2u, 3u, 5u}) {
    for (int t = 0; t < 50; ++t) {
      const auto m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 6, p);
      const auto once = rref(m).reduced;
      EXPECT_EQ(rref(once).reduced, once);
    }
  }
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace_basis(Matrix::identity(2, 2)).empty());
  EXPECT_EQ(nullspace_basis(Matrix(1, 3, 2)).size(), 3u);
  const auto k = nullspace_basis(Matrix::from_rows(2, {{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{1, 1}));
}

TEST(Nullspace, VectorsAreIndependentSolutions) {
  std::mt19937 rng(11);
  for (Scalar p : {2u, 3u, 7u}) {
    for (int t = 0; t < 60; ++t) {
      const auto m = random_matrix(rng, 1 + t % 4, 1 + t % 7, p);
      const auto basis = nullspace_basis(m);
      EXPECT_EQ(basis.size(), m.cols() - rank(m));
      for (const auto& x : basis) {
        for (auto v : m.apply(x)) EXPECT_EQ(v, 0u);
      }
      if (!basis.empty()) EXPECT_EQ(rank(Matrix::from_columns(m.cols(), p, basis)), basis.size());
    }
  }
}

TEST(Solve, Examples) {
  const Vector b{1, 0};
  EXPECT_EQ(solve(Matrix::identity(2, 2), b), b);
  EXPECT_FALSE(solve(Matrix(2, 2, 2), b).has_value());
  EXPECT_EQ(solve(Matrix::from_rows(2, {{1, 1}, {0, 1}}), Vector{0, 1}), (Vector{1, 1}));
}

TEST(Solve, SolutionsAreExact) {
  std::mt19937 rng(3);
  for (Scalar p : {2u, 3u, 5u}) {
    for (int t = 0; t < 60; ++t) {
      const auto m = random_matrix(rng, 1 + t % 5, 1 + t % 4, p);
      const auto x0 = random_matrix(rng, m.cols(), 1, p).column(0);
      const auto b = m.apply(x0);
      const auto x = solve(m, b);
      ASSERT_TRUE(x.has_value());
      EXPECT_EQ(m.apply(*x), b);
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    const auto m = random_matrix(rng, 3, 3, 3);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), is_invertible(m));
    if (inv) {
      EXPECT_EQ(*inv * m, Matrix::identity(3, 3));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Field, RejectsNonPrime) {
  EXPECT_THROW(require_prime(4), ValidationError);
  EXPECT_THROW(require_prime(1), ValidationError);
  EXPECT_NO_THROW(require_prime(3));
}
