#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace detlab {

/// Field element. For prime fields `num` is the residue in [0, p) and `den`
/// is 1; for the rationals it is a reduced fraction with den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Exact coefficient field: a prime field F_p or the rationals.
///
/// Rational arithmetic uses checked 64-bit numerators and denominators; an
/// intermediate result that does not fit raises std::overflow_error. All
/// heavy computations in this library run over prime fields.
class Field {
 public:
  enum class Kind { prime, rationals };

  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() : Field(prime(kDefaultPrime)) {}

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::rationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  /// Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar{0, 1}; }
  Scalar one() const { return Scalar{1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t n, std::int64_t d) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
      std::int64_t s = a.num + b.num;
      if (s >= static_cast<std::int64_t>(p_)) s -= p_;
      return Scalar{s, 1};
    }
    return rat_add(a, b);
  }
  Scalar neg(const Scalar& a) const {
    if (kind_ == Kind::prime) return Scalar{a.num == 0 ? 0 : p_ - a.num, 1};
    return Scalar{-a.num, a.den};
  }
  Scalar sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::prime) {
      return Scalar{static_cast<std::int64_t>(
                        (static_cast<std::uint64_t>(a.num) *
                         static_cast<std::uint64_t>(b.num)) %
                        p_),
                    1};
    }
    return rat_mul(a, b);
  }
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;

  /// Uniform sample from the field minus {0} (or minus {0, 1} when
  /// `avoid_one`). For the rationals, draws small integers.
  Scalar random_nonzero(std::mt19937_64& rng, bool avoid_one = false) const;

  /// Prime fields print the symmetric representative in (-p/2, p/2].
  std::string to_string(const Scalar& a) const;
  /// Integer representative used when moving data between fields.
  std::int64_t symmetric_lift(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Scalar rat_add(const Scalar& a, const Scalar& b) const;
  Scalar rat_mul(const Scalar& a, const Scalar& b) const;

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace detlab
