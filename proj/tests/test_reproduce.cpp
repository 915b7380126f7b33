#include <gtest/gtest.h>

#include "detlab/errors.hpp"
#include "detlab/reproduce.hpp"

using namespace detlab;

TEST(Reproduce, CatalogIsComplete) {
  auto ids = reproduce_ids();
  EXPECT_EQ(ids.size(), 12u);
  EXPECT_THROW(reproduce("nope"), PreconditionError);
}

class ReproduceEach : public ::testing::TestWithParam<std::string> {};

TEST_P(ReproduceEach, AllClaimsHold) {
  auto r = reproduce(GetParam());
  EXPECT_FALSE(r.claims.empty());
  for (const auto& c : r.claims) {
    EXPECT_TRUE(c.passed) << c.label << "\n  expected " << c.expected << "\n  actual   " << c.actual;
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, ReproduceEach, ::testing::ValuesIn(reproduce_ids()),
                         [](const auto& info) {
                           std::string name;
                           for (char ch : info.param) name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
                           return name;
                         });

TEST(Reproduce, OtherSeedsAndSizes) {
  ReproduceOptions opts;
  opts.seed = 3;
  EXPECT_TRUE(reproduce("verodeform", opts).passed());
  EXPECT_TRUE(reproduce("stgood", opts).passed());
  opts.n = 5;
  EXPECT_TRUE(reproduce("gensectbdl", opts).passed());
  EXPECT_TRUE(reproduce("n+1curve", opts).passed());
}

TEST(Reproduce, SecondPrime) {
  ReproduceOptions opts;
  opts.field = Field::prime(65537);
  for (const char* id : {"stgood", "sqfr", "vero", "deg9gen10-betti"}) EXPECT_TRUE(reproduce(id, opts).passed()) << id;
}

TEST(Reproduce, JsonReport) {
  auto j = to_json(reproduce("artin"));
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["claims"].size(), 32u);
}
