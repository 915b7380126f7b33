#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "detlab/polynomial.hpp"

namespace detlab {

/// Term c * m * e_pos of a free module R^r.
struct VTerm {
  Monomial mon;
  std::uint32_t pos = 0;
  Scalar coef;
};

/// Free-module element: terms strictly decreasing in a ModuleOrder.
using Vec = std::vector<VTerm>;

/// Order on the terms of a graded free module.
///
/// Positions below `block` form a distinguished block that is compared
/// above every other position. Within a block the order is either
/// position-over-term (`position_first`) or term-over-position, where the
/// term part compares the shifted degree deg(m) + shifts[pos] first when
/// the monomial order is graded, then the monomial, then the position
/// (smaller index is larger).
struct ModuleOrder {
  MonomialOrder mono;
  std::vector<int> shifts;
  std::uint32_t block = 0;
  bool position_first = false;

  static ModuleOrder for_ideal(const MonomialOrder& mono) { return ModuleOrder{mono, {0}, 0, false}; }

  int degree(const VTerm& t) const { return static_cast<int>(t.mon.degree()) + shifts[t.pos]; }
  int compare(const VTerm& a, const VTerm& b) const;
};

struct GroebnerOptions {
  /// Stop after every pair and input of degree <= limit has been treated
  /// (homogeneous input only). Negative means no limit.
  int degree_limit = -1;
};

struct ModuleBasis {
  /// Reduced (truncated, if limited) Groebner basis, monic, sorted by
  /// increasing leading term.
  std::vector<Vec> elements;
  /// For homogeneous input: indices of the inputs that form a minimal
  /// generating set (processed in order of degree, then input order).
  std::vector<std::size_t> minimal_inputs;
  bool homogeneous = false;
  bool truncated = false;
};

/// Buchberger's algorithm in a free module. Normal selection strategy,
/// Gebauer-Moeller criteria; the coprime criterion only applies to rank 1.
ModuleBasis module_groebner(const Field& field, const ModuleOrder& order, std::vector<Vec> inputs,
                            const GroebnerOptions& options = {});

/// Full reduction of `f` by `basis` (any generating set; the remainder is
/// unique when `basis` is a Groebner basis).
Vec module_normal_form(const Field& field, const ModuleOrder& order, const Vec& f,
                       std::span<const Vec> basis);

/// Polynomial <-> rank-1 vector.
Vec to_vec(const Polynomial& p, std::uint32_t pos = 0);
Polynomial component(const Vec& v, std::uint32_t pos, const Ring& ring);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements, bool reduced, bool truncated = false);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_.order; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }
  bool truncated() const { return truncated_; }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  /// Remainder of full division; zero iff p lies in the ideal (for a
  /// complete basis).
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
  std::vector<Vec> vecs_;
  bool reduced_ = false;
  bool truncated_ = false;
};

/// Reduced Groebner basis w.r.t. `ring.order`. Generators must live in a
/// ring with the same variables and field (they are re-sorted if their
/// order differs).
GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> gens,
                         const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// Generators of I intersected with k[x_k, ..., x_{n-1}], expressed in the
/// original ring (the first k variables do not occur).
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::size_t k);

/// A minimal homogeneous generating set chosen among `gens`.
std::vector<Polynomial> minimal_generators(std::span<const Polynomial> gens);

/// True iff every S-polynomial of the basis reduces to zero (no criteria
/// applied; brute force).
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Element of a graded free module F = sum R(-shifts[i]).
struct ModuleElement {
  std::vector<Polynomial> components;
  std::vector<int> shifts;

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  /// Common value of deg(component_i) + shifts[i] over nonzero components;
  /// kAnyDegree for zero, nullopt when inhomogeneous.
  std::optional<int> degree() const;
};

/// Generators of the first syzygy module of `vectors` (all of one rank and
/// shifts). The result lives in sum R(-deg v_i) and is a minimal generating
/// set. Throws PreconditionError on inhomogeneous input.
std::vector<ModuleElement> syzygies(std::span<const ModuleElement> vectors);

/// Minimal generating subset of homogeneous module elements.
std::vector<ModuleElement> minimal_generators(std::span<const ModuleElement> vectors);

}  // namespace detlab
