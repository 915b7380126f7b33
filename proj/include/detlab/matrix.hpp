#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "detlab/polynomial.hpp"

namespace detlab {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<Polynomial> row(std::size_t r) const;
  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> entries() const { return data_; }

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix transposed() const;
  bool is_zero() const;
  /// Every entry is a linear form or zero.
  bool is_linear() const;
  PolyMatrix substitute(std::span<const Polynomial> images) const;
  PolyMatrix change_field(const Field& field) const;

  std::string to_string() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

PolyMatrix identity_matrix(const Ring& ring, std::size_t n);
PolyMatrix scalar_matrix(const Ring& ring, const ScalarMatrix& g);

/// Degree matrix of a homogeneous t x q matrix: u[j][i] = a_j - b_i, stored
/// transposed (q rows, t columns), with a and b sorted ascending so entries
/// grow from right to left and from top to bottom. b_1 = 0 after
/// normalization.
struct DegreeMatrix {
  std::vector<std::vector<int>> u;
  std::vector<int> a;
  std::vector<int> b;
  /// Normalized column j is original column column_perm[j]; same for rows.
  std::vector<std::size_t> column_perm;
  std::vector<std::size_t> row_perm;
  /// Some a_j / b_i were not determined by nonzero entries.
  bool ambiguous = false;

  std::size_t t() const { return b.size(); }
  std::size_t q() const { return a.size(); }
  /// 1-based access u_{ji}, j in 1..q, i in 1..t.
  int at(std::size_t j, std::size_t i) const { return u.at(j - 1).at(i - 1); }
  std::string to_string() const;
};

/// Throws PreconditionError when M is not homogeneous.
DegreeMatrix degree_matrix(const PolyMatrix& m);
bool is_homogeneous_matrix(const PolyMatrix& m);

/// All s x s minors; row subsets in lexicographic order, and for each of
/// them column subsets in lexicographic order. Memoized Laplace expansion
/// along the first row of each subset, levels computed in parallel.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t s);
/// Reference: direct cofactor recursion, no sharing, serial.
std::vector<Polynomial> minors_reference(const PolyMatrix& m, std::size_t s);
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);
Polynomial determinant(const PolyMatrix& m);

/// G * M for an invertible scalar matrix G. Throws on singular G or when the
/// result is not homogeneous.
PolyMatrix row_ops(const PolyMatrix& m, const ScalarMatrix& g);
/// M * H for an invertible scalar matrix H.
PolyMatrix col_ops(const PolyMatrix& m, const ScalarMatrix& h);
PolyMatrix delete_row(const PolyMatrix& m, std::size_t i);
PolyMatrix delete_column(const PolyMatrix& m, std::size_t j);
/// Inserts `col` so that it becomes column j.
PolyMatrix insert_column(const PolyMatrix& m, std::size_t j, std::span<const Polynomial> col);
PolyMatrix insert_row(const PolyMatrix& m, std::size_t i, std::span<const Polynomial> row);

/// Random invertible scalar matrix (rejection sampling on the determinant).
ScalarMatrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng);

/// Random graded automorphism of the row module: G[k][i] is a random form
/// of degree b_i - b_k when b_i >= b_k (a nonzero scalar on equal-degree
/// blocks) and zero otherwise. G * M is homogeneous with the same degree
/// matrix and G is invertible.
PolyMatrix random_graded_row_automorphism(const PolyMatrix& m, std::mt19937_64& rng);

enum class OneGenericMode { rows_cols, generalized };
enum class OneGenericVerdict { yes, no, probably_yes };

struct OneGenericReport {
  OneGenericVerdict verdict = OneGenericVerdict::no;
  std::string reason;
};

/// Requires linear entries (PreconditionError otherwise).
OneGenericReport is_one_generic(const PolyMatrix& m, OneGenericMode mode, int trials, std::uint64_t seed);

std::string to_string(OneGenericVerdict v);

}  // namespace detlab
