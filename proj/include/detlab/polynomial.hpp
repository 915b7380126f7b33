#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detlab/field.hpp"
#include "detlab/monomial.hpp"

namespace detlab {

/// Ring context k[x0, ..., x{n-1}] with a monomial order.
struct Ring {
  std::size_t nvars = 0;
  Field field;
  MonomialOrder order;

  Ring() = default;
  Ring(std::size_t n, Field f = Field(), MonomialOrder o = MonomialOrder::degrevlex());

  /// Same field and order, different variable count.
  Ring with_nvars(std::size_t n) const { return Ring(n, field, order); }
  Ring with_order(MonomialOrder o) const { return Ring(nvars, field, o); }
  Ring with_field(Field f) const { return Ring(nvars, f, order); }

  std::string describe() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Monomial mon;
  Scalar coef;
};

/// Degree reported for the zero polynomial: compatible with every degree.
inline constexpr int kAnyDegree = -1;

/// Sparse polynomial; terms strictly decreasing in the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Scalar& c);
  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial monomial(const Ring& ring, const Monomial& m, const Scalar& c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);
  /// Trusts that `terms` is already normalized for `ring`.
  static Polynomial from_sorted_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  const Term& leading() const { return terms_.front(); }

  /// Common total degree of all terms, kAnyDegree for zero, nullopt when
  /// the polynomial is not homogeneous.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }
  /// Largest total degree of a term, kAnyDegree for zero.
  int total_degree() const;
  /// True for a nonzero homogeneous polynomial of degree 1.
  bool is_linear_form() const;
  /// Coefficient of x_i in a linear form.
  Scalar linear_coefficient(std::size_t i) const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  /// Ring morphism x_i -> images[i]; images share one target ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Re-express in `target` (same variable count, possibly different order
  /// or same field) by re-sorting the terms.
  Polynomial reordered(const Ring& target) const;
  /// Variables are renamed x_i -> x_{perm[i]} in `target`.
  Polynomial permuted(std::span<const std::size_t> perm, const Ring& target) const;
  /// Reduce integer coefficients into another field via symmetric lifts.
  Polynomial change_field(const Field& field) const;

  /// Exact division; nullopt when `divisor` does not divide *this.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_context(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Parses `x0^2*x1 - 3*x2^3` style input. Coefficients are integers or
/// fractions a/b; variables are x0 .. x{n-1}.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1);

}  // namespace detlab
