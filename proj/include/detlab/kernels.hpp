#pragma once

// Data-parallel linear algebra over prime fields. Every kernel comes in a
// serial reference version and an OpenMP version; the two must agree
// bit-for-bit (tests/test_kernels.cpp, bench/bench_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detlab/field.hpp"

namespace detlab::kernels {

/// Dense row-major matrix with entries in [0, p).
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// Row reduction result: reduced row echelon form and its pivot columns.
struct Echelon {
  ModMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon_serial(ModMatrix m);
Echelon echelon_parallel(ModMatrix m);

std::size_t rank_serial(ModMatrix m);
std::size_t rank_parallel(ModMatrix m);

/// Dispatches to the parallel kernel for large inputs.
std::size_t rank(ModMatrix m);
Echelon echelon(ModMatrix m);

/// Rank over any supported field; small dense input.
std::size_t rank_over(const Field& field, std::vector<std::vector<Scalar>> rows);

/// Determinant over any supported field by fraction-free style elimination
/// (plain Gaussian elimination with exact field arithmetic).
Scalar determinant_over(const Field& field, std::vector<std::vector<Scalar>> rows);

/// Whether the OpenMP kernels were compiled with OpenMP enabled.
bool parallel_enabled();

}  // namespace detlab::kernels
