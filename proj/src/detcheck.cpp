#include "detlab/detcheck.hpp"

#include <algorithm>
#include <unordered_map>

#include "detlab/errors.hpp"
#include "detlab/kernels.hpp"

namespace detlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_yes:
      return "certified_yes";
    case Verdict::certified_no:
      return "certified_no";
    case Verdict::probable_no:
      return "probable_no";
  }
  return "?";
}

std::int64_t binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

int height_of(const Ring& ring, std::vector<Polynomial> gens) {
  return Ideal(ring, std::move(gens)).dimension().height;
}

int height_of_maximal_minors(const PolyMatrix& m) {
  if (m.rows() == 0) return 0;
  return height_of(m.ring(), maximal_minors(m));
}

void require_shape(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw PreconditionError("empty matrix");
  if (m.rows() > m.cols()) throw PreconditionError("matrix has more rows than columns");
  degree_matrix(m);
}

}  // namespace

CheckReport check_standard(const PolyMatrix& m) {
  require_shape(m);
  CheckReport report;
  const int c = static_cast<int>(m.cols() - m.rows() + 1);
  report.expected_height = c;
  report.height = height_of_maximal_minors(m);
  report.trials = 0;
  if (report.height == c) {
    report.verdict = Verdict::certified_yes;
    report.summary = "maximal minors have height " + std::to_string(c) + " = q - t + 1";
  } else {
    report.verdict = Verdict::certified_no;
    report.summary = "maximal minors have height " + std::to_string(report.height) + ", expected " +
                     std::to_string(c);
  }
  return report;
}

std::vector<SweepPoint> generalized_row_sweep(const PolyMatrix& m) {
  if (m.rows() != 2 || !m.is_linear()) {
    throw PreconditionError("generalized-row sweep needs two rows of linear forms");
  }
  const Ring& ring = m.ring();
  const int c = static_cast<int>(m.cols() - 1);
  auto r1 = m.row(0);
  auto r2 = m.row(1);
  std::vector<SweepPoint> out;
  out.push_back({std::nullopt, height_of(ring, r1)});
  // The (c+1)-minors of the coefficient matrix of alpha*r1 + r2 have degree
  // at most c + 1 in alpha, so c + 2 values decide them.
  for (std::int64_t alpha = 0; alpha <= c + 1; ++alpha) {
    Scalar a = ring.field.from_int(alpha);
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < r1.size(); ++j) row.push_back(r1[j].scaled(a) + r2[j]);
    out.push_back({alpha, height_of(ring, row)});
  }
  return out;
}

CheckReport check_good(const PolyMatrix& m, int trials, std::uint64_t seed) {
  CheckReport report = check_standard(m);
  report.seed = seed;
  if (report.verdict != Verdict::certified_yes) {
    report.summary = "not standard determinantal: " + report.summary;
    return report;
  }
  const int c = report.expected_height;
  report.expected_height = c + 1;
  if (m.rows() == 1) {
    report.summary = "t = 1: complete intersection, good by convention";
    return report;
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    PolyMatrix g = random_graded_row_automorphism(m, rng);
    PolyMatrix gm = g * m;
    ++report.trials;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      int h = height_of_maximal_minors(delete_row(gm, row));
      report.trials_log.push_back({trial, row, h});
      if (h == c + 1) {
        report.verdict = Verdict::certified_yes;
        report.height = h;
        report.row_transform = g;
        report.deleted_row = row;
        report.summary = "row " + std::to_string(row) + " of G*M deleted in trial " + std::to_string(trial) +
                         ": height " + std::to_string(h);
        return report;
      }
    }
  }
  report.verdict = Verdict::probable_no;
  report.summary = "no deletion reached height " + std::to_string(c + 1) + " in " + std::to_string(trials) +
                   " trials";
  if (m.rows() == 2 && m.is_linear()) {
    report.sweep = generalized_row_sweep(m);
    bool all_low = std::all_of(report.sweep.begin(), report.sweep.end(),
                               [&](const SweepPoint& p) { return p.height < c + 1; });
    if (all_low) {
      report.verdict = Verdict::certified_no;
      report.summary = "every generalized row has entries of height below " + std::to_string(c + 1) +
                       " (sweep over alpha = 0.." + std::to_string(c + 1) + " and the first row)";
    }
  }
  return report;
}

bool replay_good_witness(const PolyMatrix& m, const CheckReport& report) {
  if (report.verdict != Verdict::certified_yes) return false;
  const int c = static_cast<int>(m.cols() - m.rows() + 1);
  if (height_of_maximal_minors(m) != c) return false;
  if (m.rows() == 1) return true;
  if (!report.row_transform || !report.deleted_row) return false;
  const PolyMatrix& g = *report.row_transform;
  if (g.rows() != m.rows() || g.cols() != m.rows()) return false;
  // G must be invertible: its determinant is a nonzero constant.
  Polynomial det = determinant(g);
  if (det.is_zero() || !det.is_constant()) return false;
  return height_of_maximal_minors(delete_row(g * m, *report.deleted_row)) == c + 1;
}

bool acm_lift_bound(const DegreeMatrix& u, int n, int dim_v) {
  if (dim_v >= 2) return true;
  const std::size_t t = u.t();
  if (t == 0 || u.q() < t) throw PreconditionError("malformed degree matrix");
  const std::size_t c = u.q() - t + 1;
  long long sum = 0;
  for (std::size_t j = 1; j < c; ++j) sum += u.at(j, t);
  return sum >= n + 1;
}

namespace {

class SectView {
 public:
  explicit SectView(const DegreeMatrix& u) : u_(u) {}
  int t() const { return static_cast<int>(u_.t()); }
  int operator()(int i, int j) const {
    if (i < 1 || i > t() || j < 0 || j >= static_cast<int>(u_.q())) {
      throw PreconditionError("degree matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
    }
    return u_.at(static_cast<std::size_t>(j) + 1, static_cast<std::size_t>(i));
  }
  bool band_nonnegative(int w) const {
    int m = std::min(w, t());
    for (int i = m; i <= t(); ++i) {
      if ((*this)(i, i - m) < 0) return false;
    }
    return true;
  }

 private:
  const DegreeMatrix& u_;
};

}  // namespace

int sect_conditions(const DegreeMatrix& u, int n, int c) {
  if (u.t() == 0 || u.q() + 1 != u.t() + static_cast<std::size_t>(c)) {
    throw PreconditionError("degree matrix shape does not match the codimension");
  }
  SectView v(u);
  const int t = v.t();
  if (c == 3) {
    if (n >= 5) return 1;
    if (n >= 4 && v.band_nonnegative(2) && v(t, t + 1) > v(t, t) + (t >= 2 ? v(1, t - 1) : 0)) return 2;
    if (n == 4 && v(t, 0) > v(t, 1) + v(t, 2)) return 3;
    return 0;
  }
  if (c == 4) {
    if (n >= 6 && v.band_nonnegative(3)) return 4;
    if (n >= 5 && v.band_nonnegative(3) && v(t, t + 2) > v(t, t) + (t >= 2 ? v(1, t - 1) : 0)) return 5;
    return 0;
  }
  if (c >= 5 && n >= c + 1 && v.band_nonnegative(3)) {
    for (int j = 5; j <= c; ++j) {
      int rhs = (t >= 2 ? v(1, t - 1) : 0);
      for (int k = t; k <= t + j - 4; ++k) rhs += v(t, k);
      for (int k = 0; k <= j - 5; ++k) rhs -= v(t, k);
      if (!(v(t, t + j - 2) > rhs)) return 0;
    }
    return 6;
  }
  return 0;
}

std::int64_t plucker_defect(std::size_t t, std::size_t q, std::uint64_t seed) {
  if (t == 0 || t >= q) throw PreconditionError("plucker defect needs 0 < t < q");
  const std::int64_t m = binomial_coefficient(static_cast<std::int64_t>(q), static_cast<std::int64_t>(t));
  if (m > 60) throw PreconditionError("too many maximal minors for the Pluecker count");
  if (t * q > kMaxVars) throw PreconditionError("generic matrix needs too many variables");
  Ring ring(t * q);
  // Rescaling the variables does not change the rank; the seed only picks
  // the scaling.
  std::mt19937_64 rng(seed);
  PolyMatrix g(ring, t, q);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      g.at(i, j) = Polynomial::variable(ring, i * q + j).scaled(ring.field.random_nonzero(rng));
    }
  }
  auto mins = maximal_minors(g);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t a = 0; a < mins.size(); ++a) {
    for (std::size_t b = a; b < mins.size(); ++b) {
      Polynomial prod = mins[a] * mins[b];
      std::vector<std::pair<std::size_t, Scalar>> row;
      for (const auto& term : prod.terms()) {
        auto [it, inserted] = column.emplace(term.mon, column.size());
        row.push_back({it->second, term.coef});
      }
      rows.push_back(std::move(row));
    }
  }
  kernels::ModMatrix mat(rows.size(), column.size(), ring.field.characteristic());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [col, coef] : rows[r]) mat.at(r, col) = static_cast<std::uint32_t>(coef.num);
  }
  auto rank = static_cast<std::int64_t>(kernels::rank(std::move(mat)));
  return m * (m + 1) / 2 - rank;
}

CheckReport refute_standard_linear(const Ideal& ideal, std::size_t t, std::size_t q) {
  CheckReport report;
  auto minimal = minimalize(ideal);
  const std::int64_t mu_i = static_cast<std::int64_t>(minimal.size());
  const std::int64_t expected = binomial_coefficient(static_cast<std::int64_t>(q), static_cast<std::int64_t>(t));
  if (mu_i != expected) {
    throw PreconditionError("ideal has " + std::to_string(mu_i) + " minimal generators, a " + std::to_string(t) +
                            "x" + std::to_string(q) + " matrix gives " + std::to_string(expected));
  }
  for (const auto& g : minimal.generators()) {
    if (*g.homogeneous_degree() != static_cast<int>(t)) {
      throw PreconditionError("generators must all have degree " + std::to_string(t));
    }
  }
  report.mu = mu_i;
  report.mu_square = mu(power(minimal, 2));
  report.bound = mu_i * (mu_i + 1) / 2 - plucker_defect(t, q);
  if (*report.mu_square > *report.bound) {
    report.verdict = Verdict::certified_no;
    report.summary = "mu(I^2) = " + std::to_string(*report.mu_square) + " > " + std::to_string(*report.bound) +
                     ": I is not the ideal of maximal minors of a linear " + std::to_string(t) + "x" +
                     std::to_string(q) + " matrix";
  } else {
    report.verdict = Verdict::probable_no;
    report.summary = "mu(I^2) = " + std::to_string(*report.mu_square) + " <= " + std::to_string(*report.bound) +
                     ": no conclusion";
  }
  return report;
}

}  // namespace detlab
