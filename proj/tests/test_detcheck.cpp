#include <gtest/gtest.h>

#include "detlab/constructions.hpp"
#include "detlab/detcheck.hpp"
#include "detlab/errors.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

namespace {

DegreeMatrix filled(std::size_t q, std::size_t t, int value) {
  DegreeMatrix u;
  u.u.assign(q, std::vector<int>(t, value));
  u.a.assign(q, value);
  u.b.assign(t, 0);
  return u;
}

// C(m+1,2) - mu(I^2) for the generic t x q matrix: an independent route to
// the Pluecker count through Hilbert functions.
std::int64_t defect_via_mu(std::size_t t, std::size_t q) {
  Ring r(t * q);
  PolyMatrix g(r, t, q);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < q; ++j) g.at(i, j) = Polynomial::variable(r, i * q + j);
  }
  Ideal i = minors_ideal(g);
  std::int64_t m = mu(i);
  return m * (m + 1) / 2 - mu(power(i, 2));
}

}  // namespace

TEST(DetCheck, StandardOnTwistedCubic) {
  Ring r(4);
  auto m = matrix_of(r, {{"x0", "x1", "x2"}, {"x1", "x2", "x3"}});
  auto rep = check_standard(m);
  EXPECT_EQ(rep.verdict, Verdict::certified_yes);
  EXPECT_EQ(rep.height, 2);
  auto good = check_good(m, 8, 1);
  EXPECT_EQ(good.verdict, Verdict::certified_yes);
  EXPECT_TRUE(replay_good_witness(m, good));
}

TEST(DetCheck, DegenerateMatrixIsNotStandard) {
  Ring r(4);
  auto m = matrix_of(r, {{"x0", "x1", "x2"}, {"x0", "x1", "x2"}});
  EXPECT_EQ(check_standard(m).verdict, Verdict::certified_no);
  EXPECT_THROW(check_standard(matrix_of(r, {{"x0"}, {"x1"}})), PreconditionError);
}

TEST(DetCheck, CompleteIntersectionIsGoodByConvention) {
  Ring r(3);
  auto rep = check_good(matrix_of(r, {{"x0", "x1^2"}}), 8, 1);
  EXPECT_EQ(rep.verdict, Verdict::certified_yes);
}

TEST(DetCheck, SectionExample) {
  auto c = section_example_matrix(SectionExample::C);
  auto z = section_example_matrix(SectionExample::Z);
  EXPECT_EQ(check_standard(c).height, 3);
  auto rc = check_good(c, 8, 1);
  EXPECT_EQ(rc.verdict, Verdict::certified_yes);
  EXPECT_TRUE(replay_good_witness(c, rc));
  auto rz = check_good(z, 8, 1);
  EXPECT_EQ(rz.verdict, Verdict::certified_no);
  ASSERT_EQ(rz.sweep.size(), 6u);
  for (const auto& p : rz.sweep) EXPECT_EQ(p.height, 3);
}

TEST(DetCheck, SweepRowsOfZ) {
  auto z = section_example_matrix(SectionExample::Z);
  const Ring& r = z.ring();
  auto row = z.row(0);
  auto r2 = z.row(1);
  Scalar a = r.field.from_int(5);
  std::vector<Polynomial> g;
  for (std::size_t j = 0; j < 4; ++j) g.push_back(row[j].scaled(a) + r2[j]);
  EXPECT_EQ(g[0], poly(r, "5*x0"));
  EXPECT_EQ(g[1], poly(r, "6*x1"));
  EXPECT_EQ(g[2], poly(r, "x2"));
  EXPECT_EQ(g[3], poly(r, "x0 + x1 + 5*x2"));
}

TEST(DetCheck, TrialMonotonicity) {
  auto m = squarefree_matrix(4, 3);
  auto few = check_good(m, 2, 7), many = check_good(m, 20, 7);
  ASSERT_EQ(few.verdict, Verdict::certified_yes);
  EXPECT_EQ(many.verdict, Verdict::certified_yes);
  EXPECT_EQ(few.summary, many.summary);
}

TEST(DetCheck, PlueckerDefect) {
  EXPECT_EQ(plucker_defect(1, 4), 0);
  EXPECT_EQ(plucker_defect(2, 4), 1);
  EXPECT_EQ(plucker_defect(2, 4), defect_via_mu(2, 4));
  EXPECT_EQ(plucker_defect(2, 5), defect_via_mu(2, 5));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(plucker_defect(3, 5, seed), 5);
  EXPECT_THROW(plucker_defect(3, 3), PreconditionError);
  EXPECT_THROW(plucker_defect(4, 9), PreconditionError);
}

TEST(DetCheck, GenericScrollIsNotRefuted) {
  auto con = construct("scroll?seed=2");
  auto rep = refute_standard_linear(con.ideal, 3, 5);
  EXPECT_EQ(rep.verdict, Verdict::probable_no);
  EXPECT_LE(*rep.mu_square, 50);
  EXPECT_THROW(refute_standard_linear(con.ideal, 2, 5), PreconditionError);
}

TEST(DetCheck, AcmLiftBound) {
  auto u = filled(4, 2, 5);  // c = 3, column t entries 5, 5
  EXPECT_TRUE(acm_lift_bound(u, 9, 1));
  EXPECT_FALSE(acm_lift_bound(u, 10, 1));
  EXPECT_TRUE(acm_lift_bound(u, 100, 2));
  auto ones = filled(4, 2, 1);
  EXPECT_FALSE(acm_lift_bound(ones, 4, 1));
}

TEST(DetCheck, SectConditions) {
  auto ones = filled(4, 2, 1);  // t = 2, q = 4, c = 3
  EXPECT_EQ(sect_conditions(ones, 5, 3), 1);
  EXPECT_EQ(sect_conditions(ones, 4, 3), 0);
  auto c4 = filled(5, 2, 0);  // c = 4
  EXPECT_EQ(sect_conditions(c4, 6, 4), 4);
  EXPECT_EQ(sect_conditions(c4, 5, 4), 0);
  EXPECT_THROW(sect_conditions(ones, 5, 4), PreconditionError);
}

TEST(DetCheck, OneGenericImpliesGood) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto m = random_linear_matrix(2, 4, 6, seed);
    ASSERT_EQ(is_one_generic(m, OneGenericMode::rows_cols, 0, seed).verdict, OneGenericVerdict::yes);
    EXPECT_EQ(check_standard(m).verdict, Verdict::certified_yes);
    EXPECT_EQ(check_good(m, 8, seed).verdict, Verdict::certified_yes);
  }
}
