#include <gtest/gtest.h>

#include <random>

#include "detlab/errors.hpp"
#include "detlab/polynomial.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.add(f.from_int(5), f.from_int(4)), f.from_int(2));
  EXPECT_EQ(f.mul(f.from_int(3), f.inv(f.from_int(3))), f.one());
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.to_string(f.from_int(6)), "-1");
  EXPECT_EQ(f.pow(f.from_int(3), 6), f.one());
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(Field, FieldAxiomsHoldOnRandomSamples) {
  for (Field f : {Field(), Field::prime(65537), Field::rationals()}) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      Scalar a = f.random_nonzero(rng), b = f.random_nonzero(rng), c = f.random_nonzero(rng);
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    }
  }
}

TEST(Field, Rationals) {
  Field q = Field::rationals();
  Scalar h = q.from_fraction(1, 2), t = q.from_fraction(1, 3);
  EXPECT_EQ(q.add(h, t), q.from_fraction(5, 6));
  EXPECT_EQ(q.from_fraction(2, -4), q.from_fraction(-1, 2));
  EXPECT_EQ(q.to_string(q.from_fraction(-3, 6)), "-1/2");
  Scalar big = q.from_int(std::int64_t{1} << 62);
  EXPECT_THROW(q.mul(big, big), std::overflow_error);
}

TEST(Field, RejectsCompositeModulus) {
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(32001));
  EXPECT_THROW(Field::prime(32001), PreconditionError);
}

TEST(Polynomial, RingAxiomsOnRandomForms) {
  Ring r(4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto a = random_form(r, 2, 5, rng), b = random_form(r, 2, 4, rng), c = random_form(r, 1, 3, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, ParsePrintRoundTrip) {
  Ring r(3);
  auto p = poly(r, "3*x0^2*x1 - x2^3 + 1/2*x0*x1*x2");
  EXPECT_EQ(poly(r, p.to_string()), p);
  EXPECT_EQ(p.homogeneous_degree(), 3);
  EXPECT_FALSE(poly(r, "x0 + x1^2").is_homogeneous());
  EXPECT_EQ(Polynomial(r).homogeneous_degree(), kAnyDegree);
  Ring q(3, Field::rationals());
  auto pq = poly(q, "1/2*x0 - 2/3*x1");
  EXPECT_EQ(poly(q, pq.to_string()), pq);
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  Ring r(3);
  try {
    parse_polynomial("x0 + x7", r, 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_polynomial("x0 +", r), ParseError);
  EXPECT_THROW(parse_polynomial("x0 ^ ", r), ParseError);
}

TEST(Polynomial, ContextMismatch) {
  Ring a(3), b(4), c(3, Field::prime(7));
  EXPECT_THROW(poly(a, "x0") + poly(b, "x0"), ContextMismatch);
  EXPECT_THROW(poly(a, "x0") * poly(c, "x0"), ContextMismatch);
}

TEST(Polynomial, SubstituteIsARingMap) {
  Ring r(3);
  std::vector<Polynomial> images{poly(r, "x1 + x2"), poly(r, "x0"), poly(r, "2*x2")};
  auto f = poly(r, "x0*x1 - x2^2"), g = poly(r, "x0 + x1");
  EXPECT_EQ((f * g).substitute(images), f.substitute(images) * g.substitute(images));
  EXPECT_EQ(f.substitute(images), poly(r, "x0*x1 + x0*x2 - 4*x2^2"));
}

TEST(Monomial, OrdersRefineDivisibility) {
  Monomial a(3, std::vector<unsigned>{1, 0, 1}), b(3, std::vector<unsigned>{2, 1, 1});
  for (auto o : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
    EXPECT_LT(o.compare(a, b), 0) << o.name();
  }
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
}
