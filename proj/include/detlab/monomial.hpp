#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace detlab {

inline constexpr std::size_t kMaxVars = 32;
using Exponent = std::uint16_t;

/// Exponent vector over a fixed number of variables (at most kMaxVars).
/// Unused slots are kept at zero so equality and hashing can look at the
/// whole array.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires `other` to divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Degree in the variables [begin, end).
  unsigned partial_degree(std::size_t begin, std::size_t end) const;

  std::vector<unsigned> exponents() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }

 private:
  void refresh();

  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t mask_ = 0;
  std::uint32_t degree_ = 0;
  std::uint16_t nvars_ = 0;
};

/// All monomials of total degree d in n variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial order. All kinds refine divisibility.
///
/// `elimination(k)` compares the first k variables by degrevlex first and
/// breaks ties by degrevlex on the remaining ones, so any monomial that
/// involves one of the first k variables is larger than every monomial
/// free of them.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  MonomialOrder() = default;
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::elimination, k); }

  Kind kind() const { return kind_; }
  std::size_t eliminated() const { return block_; }
  /// True when total degree is compared first.
  bool is_graded() const { return kind_ == Kind::degrevlex; }

  /// Negative, zero, positive as a <, ==, > b. Throws ContextMismatch when
  /// the variable counts differ.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Same as compare but without the variable-count check.
  int compare_unchecked(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::degrevlex;
  std::size_t block_ = 0;
};

}  // namespace detlab
