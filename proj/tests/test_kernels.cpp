#include <gtest/gtest.h>

#include <random>

#include "detlab/kernels.hpp"

using namespace detlab;
using namespace detlab::kernels;

namespace {

ModMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  ModMatrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = d(rng);
  }
  return m;
}

// A * B with A rows x k, B k x cols: rank at most k.
ModMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::uint32_t p, std::uint64_t seed) {
  auto a = random_matrix(rows, k, p, seed), b = random_matrix(k, cols, p, seed + 1);
  ModMatrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s = (s + std::uint64_t{a.at(r, i)} * b.at(i, c)) % p;
      m.at(r, c) = static_cast<std::uint32_t>(s);
    }
  }
  return m;
}

}  // namespace

TEST(Kernels, SerialAndParallelEchelonAgree) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{7, 9}, {60, 40}, {150, 200}}) {
      auto m = low_rank(rows, cols, std::min(rows, cols) / 2 + 1, 32003, seed);
      auto s = echelon_serial(m), p = echelon_parallel(m);
      EXPECT_EQ(s.pivots, p.pivots);
      EXPECT_TRUE(s.reduced == p.reduced);
    }
  }
}

TEST(Kernels, RankOfLowRankProducts) {
  for (std::size_t k : {1u, 5u, 20u}) {
    auto m = low_rank(40, 50, k, 32003, 10 + k);
    EXPECT_EQ(rank_serial(m), k);
    EXPECT_EQ(rank_parallel(m), k);
    EXPECT_EQ(rank(m), k);
  }
  EXPECT_EQ(rank(ModMatrix(0, 5, 7)), 0u);
}

TEST(Kernels, ReducedFormIsIdempotent) {
  auto e = echelon(random_matrix(30, 30, 65537, 4));
  auto again = echelon(e.reduced);
  EXPECT_TRUE(again.reduced == e.reduced);
}

TEST(Kernels, RankAndDeterminantOverRationals) {
  Field q = Field::rationals();
  auto s = [&](std::int64_t a, std::int64_t b = 1) { return q.from_fraction(a, b); };
  std::vector<std::vector<Scalar>> m{{s(1), s(2), s(3)}, {s(4), s(5), s(6)}, {s(7), s(8), s(10)}};
  EXPECT_EQ(determinant_over(q, m), s(-3));
  std::vector<std::vector<Scalar>> singular{{s(1, 2), s(1)}, {s(1), s(2)}};
  EXPECT_EQ(rank_over(q, singular), 1u);
  EXPECT_EQ(determinant_over(q, singular), s(0));
}
