#include <gtest/gtest.h>

#include <random>

#include "detlab/errors.hpp"
#include "detlab/ideal.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

namespace {

Ideal veronese(const Ring& r) {
  return ideal_of(r, {"x0*x3-x1^2", "x0*x4-x1*x2", "x0*x5-x2^2", "x1*x4-x2*x3", "x1*x5-x2*x4", "x3*x5-x4^2"});
}

}  // namespace

TEST(Ideal, Membership) {
  Ring r(3);
  Ideal i = ideal_of(r, {"x0*x1", "x2^2"});
  EXPECT_TRUE(i.contains(poly(r, "x0^2*x1 + x2^3")));
  EXPECT_FALSE(i.contains(poly(r, "x0*x2")));
  EXPECT_TRUE(Ideal::unit(r).is_unit());
  EXPECT_TRUE(Ideal::zero(r).is_zero());
  EXPECT_THROW(ideal_of(r, {"x0 + x1^2"}), PreconditionError);
}

TEST(Ideal, IntersectionOfCoordinateLines) {
  Ring r(3);
  Ideal a = ideal_of(r, {"x0", "x1"}), b = ideal_of(r, {"x1", "x2"}), c = ideal_of(r, {"x0", "x2"});
  Ideal both = intersect(a, b);
  EXPECT_TRUE(equal(both, ideal_of(r, {"x1", "x0*x2"})));
  std::vector<Ideal> all{a, b, c};
  EXPECT_TRUE(equal(intersect(all), ideal_of(r, {"x0*x1", "x1*x2", "x0*x2"})));
}

TEST(Ideal, QuotientsAndSaturation) {
  Ring r(3);
  Ideal m = Ideal::maximal(r);
  Ideal i = product(ideal_of(r, {"x0"}), m);
  EXPECT_TRUE(equal(quotient(i, m), ideal_of(r, {"x0"})));
  EXPECT_TRUE(equal(saturate(i), ideal_of(r, {"x0"})));
  EXPECT_FALSE(is_saturated(i));
  EXPECT_TRUE(is_saturated(ideal_of(r, {"x0"})));
  EXPECT_TRUE(saturate(power(m, 3)).is_unit());
  EXPECT_TRUE(equal(variable_quotient(ideal_of(r, {"x0*x1", "x1*x2^2"}), 1), ideal_of(r, {"x0", "x2^2"})));
  EXPECT_TRUE(equal(variable_saturation(ideal_of(r, {"x0*x2^3", "x1*x2"}), 2), ideal_of(r, {"x0", "x1"})));
}

TEST(Ideal, DimensionOfVeronese) {
  Ring r(6);
  Ideal v = veronese(r);
  EXPECT_EQ(v.dimension().krull_dim, 3);
  EXPECT_EQ(v.dimension().height, 3);
  EXPECT_EQ(mu(v), 6);
}

TEST(Ideal, MuByTwoRoutes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Ring r(4);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_form(r, 2, 3, rng));
    gens.push_back(gens[0] * Polynomial::variable(r, 1));
    Ideal i(r, gens);
    EXPECT_EQ(mu_graded(i), mu_graded_linear_algebra(i));
  }
}

TEST(Ideal, SquareOfVeroneseExploratory) {
  // Two independent routes agree on 21.
  Ring r(6);
  Ideal sq = power(veronese(r), 2);
  EXPECT_EQ(mu(sq), 21);
  EXPECT_EQ(mu_graded_linear_algebra(sq).at(4), 21);
}

TEST(Ideal, HyperplaneSectionOfVeronese) {
  Ring r(6);
  std::mt19937_64 rng(9);
  auto sec = hyperplane_section(veronese(r), random_linear_form(r, rng), true);
  EXPECT_EQ(sec.ideal.ring().nvars, 5u);
  EXPECT_EQ(to_string(sec.ideal.hilbert_polynomial()), "4*t + 1");
  EXPECT_TRUE(*sec.saturated);
  EXPECT_EQ(sec.pivot, 5u);
}

TEST(Ideal, SectionByCoordinateHyperplane) {
  Ring r(3);
  auto sec = hyperplane_section(ideal_of(r, {"x0*x2 - x1^2"}), poly(r, "x2 - x0"));
  EXPECT_TRUE(equal(sec.ideal, ideal_of(sec.ideal.ring(), {"x0^2 - x1^2"})));
}

TEST(Ideal, ArtinianReductionOfVeroneseIsMSquared) {
  // h-vector oracle: HF of the reduction is 1, 3, 0.
  Ring r(6);
  auto ar = artinian_reduction(veronese(r), 4);
  const Ring& s = ar.ideal.ring();
  ASSERT_EQ(s.nvars, 3u);
  EXPECT_EQ(hilbert_function_oracle(ar.ideal, 1), 3);
  EXPECT_EQ(hilbert_function_oracle(ar.ideal, 2), 0);
  EXPECT_TRUE(equal(ar.ideal, power(Ideal::maximal(s), 2)));
  EXPECT_EQ(ar.forms.size(), 3u);
}

TEST(Ideal, Radical) {
  Ring r(3);
  Ideal i = ideal_of(r, {"x0^2", "x1^3*x2"});
  EXPECT_TRUE(radical_contains(i, poly(r, "x0")));
  EXPECT_TRUE(radical_contains(i, poly(r, "x1*x2")));
  EXPECT_FALSE(radical_contains(i, poly(r, "x1")));
}

TEST(Ideal, ChangeFieldKeepsHilbertSeriesOfIntegralIdeals) {
  Ring r(6);
  Ideal v = veronese(r);
  EXPECT_EQ(change_field(v, Field::prime(65537)).ring().field.characteristic(), 65537u);
  EXPECT_TRUE(hilbert_series_agrees_at(v, 65537));
}

TEST(Ideal, SumProductPower) {
  Ring r(2);
  Ideal m = Ideal::maximal(r);
  EXPECT_EQ(mu(power(m, 4)), 5);
  EXPECT_TRUE(equal(product(m, m), power(m, 2)));
  EXPECT_TRUE(equal(sum(ideal_of(r, {"x0"}), ideal_of(r, {"x1"})), m));
}
