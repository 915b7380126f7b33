#include <gtest/gtest.h>

#include "detlab/constructions.hpp"
#include "detlab/errors.hpp"
#include "detlab/io.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

namespace {

template <typename F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Io, IdealRoundTrip) {
  auto c = construct("verodeform?seed=2");
  Ideal back = parse_ideal(format_ideal(c.ideal));
  ASSERT_EQ(back.size(), c.ideal.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back.generators()[i], c.ideal.generators()[i]);
}

TEST(Io, MatrixRoundTrip) {
  auto m = random_linear_matrix(3, 5, 7, 4);
  EXPECT_TRUE(parse_matrix(format_matrix(m)) == m);
  Ring q(2, Field::rationals());
  auto mq = matrix_of(q, {{"1/2*x0", "x1"}, {"0", "-3/4*x0"}});
  EXPECT_TRUE(parse_matrix(format_matrix(mq)) == mq);
}

TEST(Io, CommentsBlankLinesAndHeader) {
  auto i = parse_ideal("# twisted cubic\n\nring n=4 p=101\n  # inner comment\nx0*x2 - x1^2\n\nx1*x3 - x2^2\n");
  EXPECT_EQ(i.ring().nvars, 4u);
  EXPECT_EQ(i.ring().field.characteristic(), 101u);
  EXPECT_EQ(i.size(), 2u);
  auto q = parse_ideal("ring n=2 p=0\nx0 - 1/2*x1\n");
  EXPECT_FALSE(q.ring().field.is_prime());
  auto defaulted = parse_ideal("ring n=2\nx0\n");
  EXPECT_EQ(defaulted.ring().field.characteristic(), 32003u);
  auto over = parse_ideal("ring n=2 p=101\nx0\n", 65537);
  EXPECT_EQ(over.ring().field.characteristic(), 65537u);
}

TEST(Io, ErrorsCiteLineAndColumn) {
  auto e1 = parse_error_of([] { parse_ideal("ring n=2\nx0 + x5\n"); });
  EXPECT_EQ(e1.line(), 2u);
  EXPECT_EQ(e1.column(), 6u);
  auto e2 = parse_error_of([] { parse_matrix("ring n=3\nx0 ; x1\nx1 ; x2 +* x0\n"); });
  EXPECT_EQ(e2.line(), 3u);
  EXPECT_EQ(e2.column(), 10u);
  auto e3 = parse_error_of([] { parse_matrix("ring n=3\nx0 ; x1\nx2\n"); });
  EXPECT_EQ(e3.line(), 3u);
  auto e4 = parse_error_of([] { parse_matrix("ring n=3\n"); });
  EXPECT_EQ(e4.line(), 1u);
  auto e5 = parse_error_of([] { parse_ideal("ring n=2 p=12\nx0\n"); });
  EXPECT_EQ(e5.line(), 1u);
  auto e6 = parse_error_of([] { parse_ideal("x0\n"); });
  EXPECT_EQ(e6.line(), 1u);
  auto e7 = parse_error_of([] { parse_ideal("ring n=2\nx0 + x1^2\n"); });
  EXPECT_EQ(e7.line(), 2u);
  auto e8 = parse_error_of([] { parse_matrix("ring n=2\nx0 ; ; x1\n"); });
  EXPECT_EQ(e8.column(), 5u);
  EXPECT_THROW(parse_ideal("ring n=2 q=3\nx0\n"), ParseError);
}

TEST(Io, JsonShapes) {
  auto c = construct("stgood.Z");
  auto rep = check_good(*c.matrix, 8, 1);
  auto j = to_json(rep);
  EXPECT_EQ(j["verdict"], "certified_no");
  EXPECT_EQ(j["sweep"].size(), 6u);
  auto h = to_json(c.ideal.hilbert());
  EXPECT_EQ(h["krull_dim"], 1);
  auto parsed = nlohmann::json::parse(j.dump());
  EXPECT_EQ(parsed, j);
  EXPECT_EQ(to_json(c.ideal)["field"], "F_32003");
}
