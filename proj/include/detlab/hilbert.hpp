#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "detlab/monomial.hpp"

namespace detlab {

/// Univariate integer polynomial; entry k is the coefficient of T^k.
using IntPoly = std::vector<std::int64_t>;
using Rational = boost::rational<long long>;
/// Univariate rational polynomial; entry k is the coefficient of t^k.
using RatPoly = std::vector<Rational>;

/// Hilbert series numerator(T) / (1-T)^nvars of a graded quotient R/I.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, std::size_t nvars);

  const IntPoly& numerator() const { return numerator_; }
  std::size_t nvars() const { return nvars_; }

  /// Numerator after cancelling every factor (1-T).
  const IntPoly& h_vector() const { return h_; }
  /// Krull dimension of R/I; -1 for the zero ring.
  int dimension() const { return dim_; }
  /// h(1): the degree of the scheme (0 for the zero ring).
  std::int64_t degree() const;

  /// dim_k (R/I)_d.
  std::int64_t function(int d) const;
  /// Polynomial in t agreeing with function(t) for t large.
  RatPoly polynomial() const;

  std::string to_string() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.nvars_ == b.nvars_ && a.numerator_ == b.numerator_;
  }

 private:
  IntPoly numerator_;
  std::size_t nvars_ = 0;
  IntPoly h_;
  int dim_ = -1;
};

/// Hilbert series of R/(gens) for monomial generators, by pivot recursion
/// N(I) = N(I + (x)) + T N(I : x).
HilbertSeries monomial_hilbert_series(std::span<const Monomial> gens, std::size_t nvars);

/// Krull dimension of R/(gens) for monomial generators: nvars minus the
/// size of a smallest set of variables meeting every generator's support.
/// Returns -1 if some generator is 1.
int monomial_krull_dimension(std::span<const Monomial> gens, std::size_t nvars);

/// Removes generators divisible by other generators; sorted by degree.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// Evaluates a rational polynomial at an integer.
Rational evaluate(const RatPoly& p, long long t);
std::string to_string(const RatPoly& p, const std::string& var = "t");
std::string to_string(const IntPoly& p, const std::string& var = "T");

}  // namespace detlab
