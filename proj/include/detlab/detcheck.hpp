#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detlab/ideal.hpp"
#include "detlab/matrix.hpp"

namespace detlab {

enum class Verdict { certified_yes, certified_no, probable_no };

std::string to_string(Verdict v);

struct TrialRecord {
  int trial = 0;
  std::size_t deleted_row = 0;
  int height = 0;
};

/// One evaluation of the generalized-row sweep: the row alpha*r1 + r2
/// (alpha empty for r1 itself) and the height of its entries.
struct SweepPoint {
  std::optional<std::int64_t> alpha;
  int height = 0;
};

struct CheckReport {
  Verdict verdict = Verdict::probable_no;
  std::string summary;
  int height = -1;
  int expected_height = -1;
  /// Witness for a good-determinantal certificate: row transform and the
  /// deleted row of G * M.
  std::optional<PolyMatrix> row_transform;
  std::optional<std::size_t> deleted_row;
  std::vector<TrialRecord> trials_log;
  std::vector<SweepPoint> sweep;
  /// Refutation numbers.
  std::optional<std::int64_t> mu;
  std::optional<std::int64_t> mu_square;
  std::optional<std::int64_t> bound;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Height of I_t(M) against q - t + 1.
CheckReport check_standard(const PolyMatrix& m);

/// Random graded row automorphisms followed by each row deletion; a height
/// c + 1 deletion certifies. For two rows of linear forms an exhausted
/// failure is upgraded to certified_no by the generalized-row sweep.
CheckReport check_good(const PolyMatrix& m, int trials = 8, std::uint64_t seed = 1);

/// Recomputes the witness of a certified_yes good-determinantal report.
bool replay_good_witness(const PolyMatrix& m, const CheckReport& report);

/// Generalized-row sweep for t = 2 with linear entries: the height of the
/// entries of r1 and of alpha*r1 + r2 for alpha = 0..c+1. If all stay
/// below c + 1 then no row deletion after row operations reaches c + 1.
std::vector<SweepPoint> generalized_row_sweep(const PolyMatrix& m);

/// dim_v >= 2, or u_{1,t} + ... + u_{c-1,t} >= n + 1 (1-based u_{j,i}
/// of the normalized degree matrix).
bool acm_lift_bound(const DegreeMatrix& u, int n, int dim_v);

/// Evaluates the six sufficient conditions for a general hyperplane
/// section to stay good determinantal. Entries are read as u(i, j) with
/// i = 1..t the row and j = 0..q-1 the column of the normalized matrix.
/// Returns the first satisfied condition (1-based) or 0.
int sect_conditions(const DegreeMatrix& u, int n, int c);

/// C(m+1, 2) - rank of the products p_J p_K of the maximal minors of the
/// generic t x q matrix. Requires m = C(q, t) <= 60.
std::int64_t plucker_defect(std::size_t t, std::size_t q, std::uint64_t seed = 1);

/// Refutes "I = I_t of a linear t x q matrix" when mu(I^2) exceeds the
/// count of products minus the quadratic relations among maximal minors.
/// certified_no when refuted, probable_no (no conclusion) otherwise.
CheckReport refute_standard_linear(const Ideal& ideal, std::size_t t, std::size_t q);

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k);

}  // namespace detlab
