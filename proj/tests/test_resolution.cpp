#include <gtest/gtest.h>

#include "detlab/constructions.hpp"
#include "detlab/detcheck.hpp"
#include "detlab/errors.hpp"
#include "detlab/resolution.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

namespace {

void expect_sound(const FreeResolution& res, const Ideal& i) {
  EXPECT_TRUE(res.minimal);
  EXPECT_TRUE(res.complete);
  EXPECT_TRUE(composes_to_zero(res));
  EXPECT_TRUE(matches_hilbert_series(res, i));
}

}  // namespace

TEST(Resolution, KoszulComplex) {
  // Betti numbers of the maximal ideal are binomial coefficients.
  for (std::size_t n = 1; n <= 5; ++n) {
    Ring r(n);
    Ideal m = Ideal::maximal(r);
    auto res = free_resolution(m);
    expect_sound(res, m);
    auto table = betti_table(res);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(table.at({static_cast<int>(i), static_cast<int>(i + 1)}),
                binomial_coefficient(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i + 1)));
    }
  }
}

TEST(Resolution, SquareOfMaximalIdealInTwoVariables) {
  Ring r(2);
  Ideal m2 = power(Ideal::maximal(r), 2);
  auto res = free_resolution(m2);
  expect_sound(res, m2);
  EXPECT_EQ(ranks(res), (std::vector<std::int64_t>{3, 2}));
}

TEST(Resolution, EagonNorthcottShapeForRandomLinearMatrices) {
  // 2 x (c+1) generic linear matrix: ranks C(c+1, k+1) * k... via the
  // Eagon-Northcott formula beta_k = (k+1) C(c+1, k+2) for t = 2.
  for (std::size_t q = 3; q <= 5; ++q) {
    auto m = random_linear_matrix(2, q, q + 1, q);
    Ideal i = minors_ideal(m);
    auto res = free_resolution(i);
    expect_sound(res, i);
    auto rk = ranks(res);
    ASSERT_EQ(rk.size(), q - 1);
    for (std::size_t k = 0; k + 1 < q; ++k) {
      EXPECT_EQ(rk[k], static_cast<std::int64_t>(k + 1) *
                           binomial_coefficient(static_cast<std::int64_t>(q), static_cast<std::int64_t>(k + 2)));
    }
  }
}

TEST(Resolution, VeroneseBettiNumbers) {
  Ring r(6);
  Ideal v = ideal_of(r, {"x0*x3-x1^2", "x0*x4-x1*x2", "x0*x5-x2^2", "x1*x4-x2*x3", "x1*x5-x2*x4", "x3*x5-x4^2"});
  auto res = free_resolution(v);
  expect_sound(res, v);
  EXPECT_EQ(ranks(res), (std::vector<std::int64_t>{6, 8, 3}));
  EXPECT_TRUE(is_acm(v));
}

TEST(Resolution, NonSaturatedInputIsRejectedForAcm) {
  Ring r(3);
  Ideal i = product(ideal_of(r, {"x0"}), Ideal::maximal(r));
  EXPECT_THROW(is_acm(i), PreconditionError);
}

TEST(Resolution, TwoSkewLinesAreNotAcm) {
  Ring r(4);
  Ideal lines = intersect(ideal_of(r, {"x0", "x1"}), ideal_of(r, {"x2", "x3"}));
  auto res = free_resolution(lines);
  expect_sound(res, lines);
  EXPECT_EQ(res.projective_dimension(), 3);
  EXPECT_FALSE(is_acm(lines));
}

TEST(Resolution, GridAndNumerator) {
  Ring r(2);
  auto table = betti_table(free_resolution(power(Ideal::maximal(r), 2)));
  EXPECT_EQ(betti_numerator(table), (IntPoly{1, 0, -3, 2}));
  EXPECT_NE(betti_grid(table).find("total"), std::string::npos);
}

TEST(Resolution, MinimalizeCancelsUnits) {
  Ring r(3);
  // Redundant generator x0 + x1 makes the first syzygy step non-minimal
  // if kept; minimalize must drop it again.
  FreeResolution res = free_resolution(ideal_of(r, {"x0", "x1", "x0 + x1"}));
  EXPECT_TRUE(res.minimal);
  EXPECT_EQ(ranks(res), (std::vector<std::int64_t>{2, 1}));
}

TEST(Resolution, LastMapMinorsOfCurve) {
  auto c = n_plus_1_curve(3);
  auto res = free_resolution(c.curve);
  expect_sound(res, c.curve);
  EXPECT_EQ(ranks(res), (std::vector<std::int64_t>{6, 8, 3}));
  EXPECT_TRUE(equal(last_map_minor_ideal(res, 2), n_plus_1_minor_target(3)));
}
