#include <gtest/gtest.h>

#include "detlab/constructions.hpp"
#include "detlab/detcheck.hpp"
#include "detlab/errors.hpp"
#include "detlab/resolution.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

TEST(Constructions, PowerIdealMatrix) {
  auto m = power_ideal_matrix(3, 2);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 4u);
  EXPECT_TRUE(equal(minors_ideal(m), power(Ideal::maximal(m.ring()), 2)));
  EXPECT_TRUE(equal(minors_ideal(power_ideal_matrix(4, 1)), Ideal::maximal(Ring(4))));
}

TEST(Constructions, SquarefreeMatrix) {
  auto m = squarefree_matrix(3, 2);
  const Ring& r = m.ring();
  EXPECT_EQ(m(1, 3), poly(r, "8*x3"));
  EXPECT_TRUE(equal(minors_ideal(m), squarefree_ideal(r, 2)));
  Field f;
  EXPECT_THROW(squarefree_matrix(3, 2, {f.from_int(2), f.from_int(2)}), PreconditionError);
  EXPECT_THROW(squarefree_matrix(3, 2, {f.from_int(0), f.from_int(2)}), PreconditionError);
}

TEST(Constructions, HankelDisplays) {
  for (std::size_t t : {2u, 3u}) {
    auto y = symmetric_family(t, SymmetricVariant::Y);
    auto u = symmetric_family(t, SymmetricVariant::U);
    ASSERT_EQ(y.ring().nvars, 2 * t + 1);
    ASSERT_EQ(u.rows(), t);
    ASSERT_EQ(u.cols(), t + 2);
    for (std::size_t i = 0; i <= t; ++i) {
      for (std::size_t j = 0; j <= t; ++j) EXPECT_EQ(y(i, j), Polynomial::variable(y.ring(), i + j));
    }
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t + 2; ++j) EXPECT_EQ(u(i, j), Polynomial::variable(u.ring(), i + j));
    }
  }
}

TEST(Constructions, SymmetricFamilyShapes) {
  auto x = symmetric_family(2, SymmetricVariant::X);
  EXPECT_EQ(x.ring().nvars, 6u);
  EXPECT_TRUE(x == x.transposed());
  auto z = symmetric_family(3, SymmetricVariant::Z, 4);
  auto y = symmetric_family(3, SymmetricVariant::Y, 4);
  EXPECT_TRUE(z == z.transposed());
  for (std::size_t j = 0; j <= 3; ++j) {
    EXPECT_EQ(z(0, j), y(0, j));
    EXPECT_EQ(z(3, j), y(3, j));
  }
  Field f;
  auto z1 = symmetric_family(3, SymmetricVariant::Zs, 4, f.one());
  EXPECT_TRUE(z1 == z);
  auto z0 = symmetric_family(3, SymmetricVariant::Zs, 4, f.zero());
  EXPECT_TRUE(z0 == y);
}

TEST(Constructions, NPlusOneCurve) {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto c = n_plus_1_curve(n);
    EXPECT_TRUE(equal(c.curve, c.from_components));
    EXPECT_TRUE(equal(sum(c.c1, c.c2), c.point));
    EXPECT_EQ(c.curve.hilbert().degree(), static_cast<std::int64_t>(n + 1));
    EXPECT_TRUE(is_saturated(c.curve));
  }
  EXPECT_THROW(n_plus_1_curve(1), PreconditionError);
}

TEST(Constructions, BasicDoubleLink) {
  auto c = n_plus_1_curve(3);
  const Ring& r = c.curve.ring();
  auto link = basic_double_link(c.curve, c.surface, poly(r, "x1"));
  EXPECT_TRUE(link.saturated);
  EXPECT_TRUE(link.ideal.contains(c.surface));
  for (const auto& g : c.curve.generators()) EXPECT_TRUE(link.ideal.contains(g * poly(r, "x1")));
  // deg D = deg C + deg F * deg S, from the computed Hilbert series.
  auto link2 = basic_double_link(c.curve, c.surface, poly(r, "x1^2 + x4^2"));
  EXPECT_EQ(link2.ideal.hilbert().degree(), c.curve.hilbert().degree() + 2 * c.surface.hilbert().degree());
  // F = 1 gives the curve back.
  EXPECT_TRUE(equal(basic_double_link(c.curve, c.surface, Polynomial::constant(r, 1)).ideal, c.curve));
  EXPECT_THROW(basic_double_link(c.surface, c.curve, poly(r, "x1")), PreconditionError);
  EXPECT_THROW(basic_double_link(c.curve, c.surface, poly(r, "x0")), PreconditionError);
}

TEST(Constructions, BdlMatrixBothModes) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto n = random_linear_matrix(2, 3, 6, seed);
    auto m = delete_row(n, 1);
    Polynomial f = poly(n.ring(), "x0^2 + x3*x5");
    auto o = bdl_matrix(m, n, f, BdlMode::row_added, 1, 3);
    EXPECT_TRUE(equal(minors_ideal(o), basic_double_link(minors_ideal(m), minors_ideal(n), f).ideal));
    auto m2 = random_linear_matrix(2, 4, 6, seed);
    auto n2 = delete_column(m2, 2);
    auto o2 = bdl_matrix(m2, n2, f, BdlMode::column_removed, 2);
    EXPECT_TRUE(equal(minors_ideal(o2), basic_double_link(minors_ideal(m2), minors_ideal(n2), f).ideal));
    EXPECT_THROW(bdl_matrix(m2, n, f, BdlMode::column_removed, 2), PreconditionError);
    EXPECT_THROW(bdl_matrix(m, n, f, BdlMode::row_added, 1, 0), PreconditionError);
  }
  // t = 1: a single F column extends the complete intersection by F.
  Ring r(3);
  auto n = matrix_of(r, {{"x0", "x1"}});
  auto o = bdl_matrix(PolyMatrix(r, 0, 2), n, poly(r, "x2"), BdlMode::row_added, 0, 2);
  EXPECT_TRUE(equal(minors_ideal(o), ideal_of(r, {"x0", "x1", "x2"})));
}

TEST(Constructions, ConeFamily) {
  Ring r(6);
  Ideal v = ideal_of(r, {"x0*x3-x1^2", "x0*x4-x1*x2", "x0*x5-x2^2", "x1*x4-x2*x3", "x1*x5-x2*x4", "x3*x5-x4^2"});
  Field f;
  EXPECT_TRUE(equal(cone_family(v, f.one()).ideal, v));
  auto c0 = cone_family(v, f.zero());
  for (const auto& g : c0.ideal.generators()) {
    for (const auto& t : g.terms()) EXPECT_EQ(t.mon[5], 0);
  }
  EXPECT_TRUE(cone_family(v, f.from_int(3)).ideal.hilbert() == v.hilbert());
}

TEST(Constructions, VeroneseDeformation) {
  Field f;
  auto m1 = veronese_deformation_matrix(f.one());
  EXPECT_TRUE(m1 == m1.transposed());
  EXPECT_EQ(m1(1, 1), Polynomial::variable(m1.ring(), 3));
  auto m0 = veronese_deformation_matrix(f.zero());
  EXPECT_EQ(m0(1, 1), Polynomial::variable(m0.ring(), 2));
}

TEST(Constructions, RulingLinesHaveDegreeNine) {
  Ideal d = ruling_lines_curve(3, 6);
  EXPECT_EQ(d.hilbert().degree(), 9);
  EXPECT_TRUE(d.contains(poly(d.ring(), "x0*x3 - x1*x2")));
}

TEST(Constructions, Registry) {
  for (const auto& pattern : registry_ids()) {
    std::string id = pattern.substr(0, pattern.find('?'));
    auto c = construct(id);
    EXPECT_FALSE(c.ideal.is_zero()) << id;
    for (const auto& g : c.ideal.generators()) EXPECT_TRUE(g.is_homogeneous()) << id;
  }
  auto y = symmetric_family(3, SymmetricVariant::Y);
  EXPECT_TRUE(equal(construct("symm.Y?t=3").ideal, Ideal(y.ring(), minors(y, 3))));
  EXPECT_THROW(construct("nope"), PreconditionError);
  EXPECT_THROW(construct("artin?n=3&q=2"), PreconditionError);
  EXPECT_THROW(construct("artin?n=x"), PreconditionError);
  auto over = construct("vero", Field::prime(65537));
  EXPECT_EQ(over.ideal.ring().field.characteristic(), 65537u);
}

TEST(Constructions, OutputsAreSaturated) {
  for (const char* id : {"vero", "n+1curve?n=3", "gensect.S?n=3", "bdl.gensectbdl?n=3", "deg9gen10", "stgood.C"}) {
    EXPECT_TRUE(is_saturated(construct(id).ideal)) << id;
  }
}
