#include <algorithm>
#include <utility>

#include "detlab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace detlab::kernels {

namespace {

constexpr std::size_t kParallelThreshold = 1u << 16;  // entries

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

// Same pivot sequence as echelon_serial; the elimination of all other rows
// against the pivot row is the data-parallel inner loop.
Echelon echelon_parallel(ModMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint64_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.at(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;
    if (found != r) std::swap_ranges(m.row(found), m.row(found) + cols, m.row(r));
    const std::uint64_t inv = inv_mod(m.at(r, c), m.modulus());
    std::uint32_t* prow = m.row(r);
    for (std::size_t k = c; k < cols; ++k) prow[k] = static_cast<std::uint32_t>(prow[k] * inv % p);

    const auto nrows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (rows * (cols - c) > 4096)
    for (std::ptrdiff_t si = 0; si < nrows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      std::uint32_t* row = m.row(i);
      if (i == r || row[c] == 0) continue;
      const std::uint64_t f = p - row[c];
      for (std::size_t k = c; k < cols; ++k) {
        row[k] = static_cast<std::uint32_t>((row[k] + f * prow[k]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank_parallel(ModMatrix m) { return echelon_parallel(std::move(m)).rank(); }

std::size_t rank(ModMatrix m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return rank_parallel(std::move(m));
  return rank_serial(std::move(m));
}

Echelon echelon(ModMatrix m) {
  if (m.rows() * m.cols() >= kParallelThreshold) return echelon_parallel(std::move(m));
  return echelon_serial(std::move(m));
}

}  // namespace detlab::kernels
