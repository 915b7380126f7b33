#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detlab/groebner.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/polynomial.hpp"

namespace detlab {

struct Dimension {
  /// Krull dimension of R/I; -1 for the unit ideal.
  int krull_dim = 0;
  /// nvars - krull_dim (nvars + 1 for the unit ideal).
  int height = 0;
};

/// Homogeneous ideal with a lazily computed Groebner basis (w.r.t. the
/// ring's order) and Hilbert series. Copies share the cache; the cache is
/// filled at most once even under concurrent readers.
class Ideal {
 public:
  Ideal();
  /// Zero generators are dropped. Throws PreconditionError on an
  /// inhomogeneous generator and ContextMismatch on a foreign ring.
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  /// (x0, ..., x{n-1}).
  static Ideal maximal(const Ring& ring);
  /// (x_i : i in vars).
  static Ideal variables(const Ring& ring, std::span<const std::size_t> vars);

  const Ring& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const GroebnerBasis& groebner() const;
  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;

  Dimension dimension() const;
  const HilbertSeries& hilbert() const;
  std::int64_t hilbert_function(int d) const { return hilbert().function(d); }
  RatPoly hilbert_polynomial() const { return hilbert().polynomial(); }

  /// Largest generator degree (-1 for the zero ideal).
  int max_degree() const;

  std::string to_string() const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned k);
/// Via <t*I, (1-t)*J> intersected with k[x].
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(std::span<const Ideal> ideals);
/// (I : g) = (I intersect (g)) / g.
Ideal quotient(const Ideal& a, const Polynomial& g);
/// (I : J) = intersection of (I : g) over the generators of J.
Ideal quotient(const Ideal& a, const Ideal& b);
/// (I : x_i), read off a degrevlex basis with x_i last.
Ideal variable_quotient(const Ideal& a, std::size_t var);
/// (I : x_i^infinity), same technique.
Ideal variable_saturation(const Ideal& a, std::size_t var);
/// I : m^infinity for the irrelevant ideal m.
Ideal saturate(const Ideal& a);
/// I : J^infinity, iterating quotients until stable.
Ideal saturate(const Ideal& a, const Ideal& b);
bool is_saturated(const Ideal& a);
/// Reduced Groebner bases coincide.
bool equal(const Ideal& a, const Ideal& b);

/// Minimal homogeneous generating set chosen among the generators.
Ideal minimalize(const Ideal& a);

/// Number of minimal generators per degree, computed from Hilbert
/// functions: mu_d = HF(R/mI, d) - HF(R/I, d).
std::map<int, std::int64_t> mu_graded(const Ideal& a);
std::int64_t mu(const Ideal& a);
/// Same numbers by rank computations over F_p:
/// mu_d = rank(I_{<d} multiples + gens of degree d) - rank(I_{<d} multiples).
std::map<int, std::int64_t> mu_graded_linear_algebra(const Ideal& a);

struct Section {
  Ideal ideal;               ///< I + (H) / (H) in one fewer variable
  std::size_t pivot = 0;     ///< eliminated variable x_j
  Polynomial image;          ///< x_j expressed in the remaining variables
  std::optional<bool> saturated;
};

/// Hyperplane section by a nonzero linear form H. The pivot is the largest
/// index with nonzero coefficient; the result lives in nvars - 1 variables
/// x0.. renumbered consecutively.
Section hyperplane_section(const Ideal& a, const Polynomial& h, bool check_saturation = false);

/// Random linear form with coefficients in F_p \ {0} (small nonzero
/// integers over the rationals).
Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng);

struct ArtinianReduction {
  Ideal ideal;
  std::vector<Polynomial> forms;  ///< each in the ring of its step
};

/// Iterated general hyperplane sections until dimension 0. Each form must
/// be a nonzerodivisor; 10 fresh draws are allowed per step.
ArtinianReduction artinian_reduction(const Ideal& a, std::uint64_t seed);

/// f lies in the radical of I: 1 in I + (1 - y f) with an extra variable y.
bool radical_contains(const Ideal& a, const Polynomial& f);

/// Reduce coefficients into another field (symmetric lifts).
Ideal change_field(const Ideal& a, const Field& field);

/// Hilbert series over F_q equals the one over the working field. A false
/// result flags a possible characteristic artifact.
bool hilbert_series_agrees_at(const Ideal& a, std::uint32_t other_prime);

}  // namespace detlab
