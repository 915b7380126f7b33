#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "detlab/ideal.hpp"
#include "detlab/matrix.hpp"

namespace detlab {

/// Graded free resolution of R/I, written
///   0 <- R <- F_0 <- F_1 <- ... <- F_L <- 0.
/// maps[0] is the 1 x rank(F_0) generator row, maps[i] the matrix of
/// F_i -> F_{i-1}. degrees[i] lists the twists of F_i: F_i = sum R(-d).
struct FreeResolution {
  Ring ring;
  std::vector<PolyMatrix> maps;
  std::vector<std::vector<int>> degrees;
  /// No nonzero constant entry in any map.
  bool minimal = false;
  /// Ended with a zero syzygy module (false: max_length reached).
  bool complete = false;

  /// Index of the last free module (-1 for the zero ideal).
  int length() const { return static_cast<int>(maps.size()) - 1; }
  /// Projective dimension of R/I.
  int projective_dimension() const { return static_cast<int>(maps.size()); }
};

/// Iterated minimal syzygies. max_length < 0 means nvars + 1.
FreeResolution free_resolution(const Ideal& ideal, int max_length = -1);

/// Cancels unit entries (row-major scan) until none remain.
void minimalize(FreeResolution& res);

/// beta[(i, j)]: rank of the degree-j part of the generators of F_i.
using BettiTable = std::map<std::pair<int, int>, std::int64_t>;

/// Throws PreconditionError for a non-minimal resolution.
BettiTable betti_table(const FreeResolution& res);
/// Rows are j - i, columns i, Macaulay style, plus a "total" row.
std::string betti_grid(const BettiTable& table);
/// Total rank per homological index.
std::vector<std::int64_t> betti_ranks(const BettiTable& table);

/// maps[i-1] * maps[i] == 0 for every i.
bool composes_to_zero(const FreeResolution& res);
/// 1 + sum_i (-1)^(i+1) sum_j beta_ij T^j.
IntPoly betti_numerator(const BettiTable& table);
/// The numerator identity against the Hilbert series of the ideal.
bool matches_hilbert_series(const FreeResolution& res, const Ideal& ideal);

/// pd(R/I) == height(I). Throws PreconditionError if I is not saturated.
bool is_acm(const Ideal& ideal);

/// Ideal of the size x size minors of the last map.
Ideal last_map_minor_ideal(const FreeResolution& res, std::size_t size);

}  // namespace detlab
