#include <utility>

#include "detlab/kernels.hpp"

namespace detlab::kernels {

namespace {

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

// Reference implementation: textbook Gauss-Jordan, one row at a time.
Echelon echelon_serial(ModMatrix m) {
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
    if (found != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(found, k), m.at(r, k));
    }
    std::uint64_t inv = inv_mod(m.at(r, c), m.modulus());
    for (std::size_t k = c; k < cols; ++k) m.at(r, k) = static_cast<std::uint32_t>(m.at(r, k) * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::uint64_t f = p - m.at(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        m.at(i, k) = static_cast<std::uint32_t>((m.at(i, k) + f * m.at(r, k)) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank_serial(ModMatrix m) { return echelon_serial(std::move(m)).rank(); }

std::size_t rank_over(const Field& field, std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  if (field.is_prime()) {
    ModMatrix m(rows.size(), rows.front().size(), field.characteristic());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = static_cast<std::uint32_t>(rows[i][j].num);
    }
    return rank(std::move(m));
  }
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (!field.is_zero(rows[i][c])) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[r]);
    Scalar inv = field.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (field.is_zero(rows[i][c])) continue;
      Scalar f = field.mul(rows[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

Scalar determinant_over(const Field& field, std::vector<std::vector<Scalar>> rows) {
  const std::size_t n = rows.size();
  Scalar det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!field.is_zero(rows[i][c])) {
        found = i;
        break;
      }
    }
    if (found == n) return field.zero();
    if (found != c) {
      std::swap(rows[found], rows[c]);
      det = field.neg(det);
    }
    det = field.mul(det, rows[c][c]);
    Scalar inv = field.inv(rows[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(rows[i][c])) continue;
      Scalar f = field.mul(rows[i][c], inv);
      for (std::size_t k = c; k < n; ++k) rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[c][k]));
    }
  }
  return det;
}

}  // namespace detlab::kernels
