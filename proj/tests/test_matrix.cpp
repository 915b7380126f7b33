#include <gtest/gtest.h>

#include <random>

#include "detlab/constructions.hpp"
#include "detlab/errors.hpp"
#include "detlab/matrix.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

TEST(Matrix, MinorsMatchReference) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto m = random_linear_matrix(3, 6, 5, seed);
    for (std::size_t s = 1; s <= 3; ++s) EXPECT_EQ(minors(m, s), minors_reference(m, s));
  }
  Ring r(4);
  auto sq = matrix_of(r, {{"x0", "x1", "x2"}, {"x1", "x2^2", "x3"}, {"x2", "0", "x0*x1"}});
  EXPECT_EQ(minors(sq, 2), minors_reference(sq, 2));
}

TEST(Matrix, TwistedCubicMinors) {
  Ring r(4);
  auto m = matrix_of(r, {{"x0", "x1", "x2"}, {"x1", "x2", "x3"}});
  auto mins = maximal_minors(m);
  ASSERT_EQ(mins.size(), 3u);
  EXPECT_EQ(mins[0], poly(r, "x0*x2 - x1^2"));
  EXPECT_EQ(mins[2], poly(r, "x1*x3 - x2^2"));
  EXPECT_EQ(determinant(matrix_of(r, {{"x0", "x1"}, {"x2", "x3"}})), poly(r, "x0*x3 - x1*x2"));
}

TEST(Matrix, DegreeMatrixOfLinearMatrixIsAllOnes) {
  Ring r(4);
  auto u = degree_matrix(matrix_of(r, {{"x0", "x1", "x2"}, {"x1", "x2", "x3"}}));
  ASSERT_EQ(u.q(), 3u);
  ASSERT_EQ(u.t(), 2u);
  for (std::size_t j = 1; j <= 3; ++j) {
    for (std::size_t i = 1; i <= 2; ++i) EXPECT_EQ(u.at(j, i), 1);
  }
}

TEST(Matrix, DegreeMatrixSortsRowsAndColumns) {
  Ring r(3);
  auto m = matrix_of(r, {{"x0^2", "x1"}, {"x1^3", "x2^2"}});
  auto u = degree_matrix(m);
  EXPECT_EQ(u.b, (std::vector<int>{0, 1}));
  EXPECT_EQ(u.a, (std::vector<int>{2, 3}));
  // Entries grow right to left and top to bottom.
  EXPECT_LE(u.at(1, 2), u.at(1, 1));
  EXPECT_LE(u.at(1, 1), u.at(2, 1));
  EXPECT_THROW(degree_matrix(matrix_of(r, {{"x0", "x1^2"}, {"x1", "x2"}})), PreconditionError);
}

TEST(Matrix, MinorIdealInvariantUnderRowAndColumnOperations) {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto m = random_linear_matrix(2, 4, 5, seed);
    Ideal base = minors_ideal(m);
    for (int op = 0; op < 20; ++op) {
      auto g = random_invertible(m.ring().field, 2, rng);
      auto h = random_invertible(m.ring().field, 4, rng);
      EXPECT_TRUE(equal(minors_ideal(col_ops(row_ops(m, g), h)), base));
    }
  }
}

TEST(Matrix, GradedRowAutomorphismKeepsMinorIdeal) {
  Ring r(4);
  auto d = matrix_of(r, {{"x0", "x1", "x2"}, {"x1^2", "x2^2", "x3^2"}});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    auto g = random_graded_row_automorphism(d, rng);
    auto gd = g * d;
    EXPECT_TRUE(is_homogeneous_matrix(gd));
    EXPECT_TRUE(equal(minors_ideal(gd), minors_ideal(d)));
    EXPECT_TRUE(determinant(g).is_constant());
    EXPECT_FALSE(determinant(g).is_zero());
  }
}

TEST(Matrix, RowColumnEditing) {
  Ring r(3);
  auto m = matrix_of(r, {{"x0", "x1"}, {"x1", "x2"}});
  auto added = insert_column(m, 1, std::vector<Polynomial>{poly(r, "x2"), poly(r, "x0")});
  EXPECT_EQ(added.cols(), 3u);
  EXPECT_EQ(added(0, 1), poly(r, "x2"));
  EXPECT_TRUE(delete_column(added, 1) == m);
  EXPECT_TRUE(delete_row(insert_row(m, 0, std::vector<Polynomial>{poly(r, "x0"), poly(r, "x0")}), 0) == m);
  EXPECT_THROW(row_ops(m, ScalarMatrix{{r.field.one(), r.field.one()}, {r.field.one(), r.field.one()}}),
               PreconditionError);
}

TEST(Matrix, OneGenericity) {
  Ring r(4);
  auto cat = matrix_of(r, {{"x0", "x1", "x2"}, {"x1", "x2", "x3"}});
  EXPECT_EQ(is_one_generic(cat, OneGenericMode::rows_cols, 0, 1).verdict, OneGenericVerdict::yes);
  EXPECT_NE(is_one_generic(cat, OneGenericMode::generalized, 8, 1).verdict, OneGenericVerdict::no);
  auto bad = matrix_of(r, {{"x0", "x0", "x2"}, {"x1", "x2", "x3"}});
  EXPECT_EQ(is_one_generic(bad, OneGenericMode::rows_cols, 0, 1).verdict, OneGenericVerdict::no);
  auto zero_entry = matrix_of(r, {{"x0", "0", "x2"}, {"x1", "x2", "x3"}});
  EXPECT_EQ(is_one_generic(zero_entry, OneGenericMode::rows_cols, 0, 1).verdict, OneGenericVerdict::no);
  EXPECT_THROW(is_one_generic(matrix_of(r, {{"x0^2", "x1^2"}}), OneGenericMode::rows_cols, 0, 1),
               PreconditionError);
}

TEST(Matrix, RationalEntries) {
  Ring r(2, Field::rationals());
  auto m = matrix_of(r, {{"1/2*x0", "x1"}, {"x1", "2/3*x0"}});
  EXPECT_EQ(determinant(m), poly(r, "1/3*x0^2 - x1^2"));
}
