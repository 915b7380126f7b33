#include <gtest/gtest.h>

#include <random>

#include "detlab/hilbert.hpp"
#include "support.hpp"

using namespace detlab;
using namespace testing_support;

namespace {

// Count standard monomials directly.
std::int64_t count_standard(std::span<const Monomial> gens, std::size_t n, unsigned d) {
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(n, d)) {
    bool in = false;
    for (const auto& g : gens) in = in || g.divides(m);
    if (!in) ++count;
  }
  return count;
}

}  // namespace

TEST(Hilbert, MonomialSeriesMatchesCounting) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<Monomial> gens;
    std::uniform_int_distribution<unsigned> e(0, 3);
    for (int k = 0; k < 4; ++k) {
      std::vector<unsigned> v(n);
      for (auto& x : v) x = e(rng);
      Monomial m(n, v);
      if (!m.is_one()) gens.push_back(m);
    }
    auto hs = monomial_hilbert_series(gens, n);
    for (unsigned d = 0; d <= 9; ++d) EXPECT_EQ(hs.function(static_cast<int>(d)), count_standard(gens, n, d));
  }
}

TEST(Hilbert, PolynomialRing) {
  auto hs = monomial_hilbert_series({}, 3);
  EXPECT_EQ(hs.dimension(), 3);
  EXPECT_EQ(hs.degree(), 1);
  EXPECT_EQ(to_string(hs.polynomial()), "1/2*t^2 + 3/2*t + 1");
}

TEST(Hilbert, TwistedCubic) {
  Ring r(4);
  Ideal i = ideal_of(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  EXPECT_EQ(to_string(i.hilbert_polynomial()), "3*t + 1");
  EXPECT_EQ(i.hilbert().degree(), 3);
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(i.hilbert_function(d), hilbert_function_oracle(i, d));
}

TEST(Hilbert, ArtinianQuotient) {
  Ring r(2);
  Ideal m3 = power(Ideal::maximal(r), 3);
  EXPECT_EQ(m3.hilbert().dimension(), 0);
  EXPECT_EQ(m3.hilbert().degree(), 6);
  EXPECT_EQ(m3.hilbert_function(2), 3);
  EXPECT_EQ(m3.hilbert_function(3), 0);
  EXPECT_TRUE(m3.hilbert_polynomial().empty() || to_string(m3.hilbert_polynomial()) == "0");
}

TEST(Hilbert, UnitIdeal) {
  Ring r(3);
  EXPECT_EQ(Ideal::unit(r).hilbert().dimension(), -1);
  EXPECT_EQ(Ideal::unit(r).hilbert_function(0), 0);
}

TEST(Hilbert, MinimalizeMonomials) {
  Monomial a(2, std::vector<unsigned>{1, 0}), b(2, std::vector<unsigned>{2, 1}), c(2, std::vector<unsigned>{0, 3});
  EXPECT_EQ(minimalize_monomials({a, b, c}).size(), 2u);
  std::vector<Monomial> gens{a, c};
  EXPECT_EQ(monomial_krull_dimension(gens, 3), 1);
}
