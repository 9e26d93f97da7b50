#include "homrep/matrix.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"

namespace homrep {
namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<long long>> random_rows(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = dist(rng);
  }
  return rows;
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(from_rows({{-7}})), -7);
  EXPECT_EQ(determinant(from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}})), 1);
  EXPECT_EQ(determinant(from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), PreconditionError);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 6;
    // Sparse {-1,0,1} entries hit the zero-pivot swap path often.
    const auto rows = random_rows(rng, n, trial % 2 ? -1 : -9, trial % 2 ? 1 : 9);
    EXPECT_EQ(determinant(from_rows(rows)), oracle::cofactor_det(rows));
  }
}

TEST(Determinant, OverflowIsDetected) {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  EXPECT_THROW(determinant(from_rows({{big, 3}, {5, big}})), OverflowError);
}

TEST(UnimodularInverse, InvertsAndRejects) {
  const IntMatrix m = from_rows({{2, 3}, {1, 2}});
  const IntMatrix inv = unimodular_inverse(m);
  EXPECT_EQ(inv, from_rows({{2, -3}, {-1, 2}}));
  EXPECT_THROW(unimodular_inverse(from_rows({{2, 0}, {0, 1}})), PreconditionError);
  EXPECT_THROW(unimodular_inverse(from_rows({{1, 2}, {2, 4}})), PreconditionError);
  EXPECT_THROW(unimodular_inverse(IntMatrix(1, 2)), PreconditionError);
  EXPECT_EQ(unimodular_inverse(IntMatrix(0, 0)).size(), 0);
}

TEST(UnimodularInverse, RandomProductsOfElementaryMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    IntMatrix m = IntMatrix::Identity(n, n);
    for (int step = 0; step < 8; ++step) {
      const int i = static_cast<int>(rng() % n);
      const int j = static_cast<int>(rng() % n);
      if (i == j) {
        m.row(i) = -m.row(i);
      } else {
        m.row(i) += (static_cast<int>(rng() % 5) - 2) * m.row(j);
      }
    }
    ASSERT_TRUE(is_unimodular(m));
    const IntMatrix inv = unimodular_inverse(m);
    EXPECT_TRUE(is_identity(checked_product(m, inv)));
    EXPECT_TRUE(is_identity(checked_product(inv, m)));
  }
}

TEST(Predicates, UnimodularAndIdentity) {
  EXPECT_TRUE(is_unimodular(from_rows({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_unimodular(from_rows({{2, 0}, {0, 1}})));
  EXPECT_FALSE(is_unimodular(IntMatrix(2, 3)));
  EXPECT_TRUE(is_identity(IntMatrix::Identity(3, 3)));
  EXPECT_FALSE(is_identity(from_rows({{1, 0}, {1, 1}})));
  EXPECT_TRUE(is_identity(IntMatrix(0, 0)));
}

TEST(CheckedProduct, AgreesWithEigenAndDetectsOverflow) {
  const IntMatrix a = from_rows({{1, -2}, {3, 0}});
  const IntMatrix b = from_rows({{4, 1}, {-1, 2}});
  EXPECT_EQ(checked_product(a, b), IntMatrix(a * b));
  EXPECT_THROW(checked_product(a, IntMatrix(3, 1)), PreconditionError);
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked_product(from_rows({{big}}), from_rows({{2}})), OverflowError);
}

TEST(ModP, ReducesIntoRange) {
  const IntMatrix m = from_rows({{-1, 0, 1}, {5, -4, 2}});
  EXPECT_EQ(matrix_mod_p(m, std::int64_t{2}), from_rows({{1, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(matrix_mod_p(m, std::int64_t{3}), from_rows({{2, 0, 1}, {2, 2, 2}}));
  EXPECT_THROW(matrix_mod_p(m, std::int64_t{4}), PreconditionError);
  EXPECT_THROW(matrix_mod_p(m, std::int64_t{1}), PreconditionError);
}

TEST(ModP, IsPrime) {
  std::vector<int> primes;
  for (int p = -3; p < 60; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_FALSE(is_prime(1'000'000'007LL * 3));
}

TEST(Text, Rendering) {
  EXPECT_EQ(to_text(from_rows({{1, -1}, {0, 2}})), "1 -1\n0 2\n");
  EXPECT_EQ(to_text(IntMatrix(0, 0)), "[]\n");
}

}  // namespace
}  // namespace homrep
