#include "detlab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "detlab/errors.hpp"
#include "detlab/kernels.hpp"

namespace detlab {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, std::vector<std::vector<Polynomial>> rows) : ring_(std::move(ring)) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  for (auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("matrix rows of different lengths");
    for (auto& p : r) {
      if (p.ring().nvars != ring_.nvars || !(p.ring().field == ring_.field)) {
        throw ContextMismatch("matrix entry from another ring");
      }
      data_.push_back(p.ring().order == ring_.order ? std::move(p) : p.reordered(ring_));
    }
  }
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw PreconditionError("matrix product size mismatch");
  if (!(ring_ == other.ring_)) throw ContextMismatch("matrix product over different rings");
  PolyMatrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        const auto& b = other(k, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::is_linear() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Polynomial& p) { return p.is_zero() || p.is_linear_form(); });
}

PolyMatrix PolyMatrix::substitute(std::span<const Polynomial> images) const {
  if (images.empty()) return *this;
  PolyMatrix out(images.front().ring(), rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].substitute(images);
  return out;
}

PolyMatrix PolyMatrix::change_field(const Field& field) const {
  PolyMatrix out(ring_.with_field(field), rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].change_field(field);
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += " ; ";
      out += (*this)(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

PolyMatrix identity_matrix(const Ring& ring, std::size_t n) {
  PolyMatrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Polynomial::constant(ring, 1);
  return out;
}

PolyMatrix scalar_matrix(const Ring& ring, const ScalarMatrix& g) {
  PolyMatrix out(ring, g.size(), g.empty() ? 0 : g.front().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) out.at(i, j) = Polynomial::constant(ring, g[i][j]);
  }
  return out;
}

std::string DegreeMatrix::to_string() const {
  std::ostringstream out;
  for (const auto& row : u) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

namespace {

// Solves a_j - b_i = deg(M_ij) over the bipartite graph of nonzero
// entries. Returns false if inconsistent.
bool solve_degrees(const PolyMatrix& m, std::vector<int>& a, std::vector<int>& b, bool& ambiguous) {
  const std::size_t t = m.rows(), q = m.cols();
  std::vector<std::vector<int>> deg(t, std::vector<int>(q, kAnyDegree));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const auto& p = m(i, j);
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d) return false;
      deg[i][j] = *d;
    }
  }
  std::vector<bool> seen_a(q, false), seen_b(t, false);
  a.assign(q, 0);
  b.assign(t, 0);
  int components = 0;
  std::vector<bool> free_a(q, true), free_b(t, true);
  for (std::size_t start = 0; start < t; ++start) {
    if (seen_b[start]) continue;
    ++components;
    std::vector<std::size_t> comp_rows, comp_cols;
    std::queue<std::pair<bool, std::size_t>> queue;  // (is_row, index)
    seen_b[start] = true;
    b[start] = 0;
    queue.push({true, start});
    while (!queue.empty()) {
      auto [is_row, k] = queue.front();
      queue.pop();
      if (is_row) {
        comp_rows.push_back(k);
        for (std::size_t j = 0; j < q; ++j) {
          if (deg[k][j] == kAnyDegree) continue;
          int val = b[k] + deg[k][j];
          if (seen_a[j]) {
            if (a[j] != val) return false;
          } else {
            seen_a[j] = true;
            a[j] = val;
            queue.push({false, j});
          }
        }
      } else {
        comp_cols.push_back(k);
        for (std::size_t i = 0; i < t; ++i) {
          if (deg[i][k] == kAnyDegree) continue;
          int val = a[k] - deg[i][k];
          if (seen_b[i]) {
            if (b[i] != val) return false;
          } else {
            seen_b[i] = true;
            b[i] = val;
            queue.push({true, i});
          }
        }
      }
    }
    if (comp_cols.empty()) {
      free_b[start] = true;  // isolated zero row, fixed later
      continue;
    }
    int shift = std::numeric_limits<int>::max();
    for (auto i : comp_rows) shift = std::min(shift, b[i]);
    for (auto i : comp_rows) {
      b[i] -= shift;
      free_b[i] = false;
    }
    for (auto j : comp_cols) {
      a[j] -= shift;
      free_a[j] = false;
    }
  }
  int bound_components = components;
  for (std::size_t i = 0; i < t; ++i) {
    if (free_b[i]) --bound_components;
  }
  ambiguous = bound_components > 1;
  // Unconstrained rows/columns: smallest value keeping all their entries
  // of nonnegative degree.
  int max_b = 0, min_a = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < t; ++i) {
    if (!free_b[i]) max_b = std::max(max_b, b[i]);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (!free_a[j]) min_a = std::min(min_a, a[j]);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (free_a[j]) {
      a[j] = max_b;
      ambiguous = true;
    }
  }
  if (min_a == std::numeric_limits<int>::max()) min_a = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (free_b[i]) {
      b[i] = min_a;
      ambiguous = true;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= (std::uint64_t{1} << i);
  return m;
}

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
  }
};

using Key = std::pair<std::uint64_t, std::uint64_t>;

Polynomial cofactor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Polynomial acc(m.ring());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& e = m(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != k) sub_cols.push_back(cols[l]);
    }
    Polynomial term = e * cofactor_det(m, sub_rows, sub_cols);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

bool is_homogeneous_matrix(const PolyMatrix& m) {
  std::vector<int> a, b;
  bool amb = false;
  return solve_degrees(m, a, b, amb);
}

DegreeMatrix degree_matrix(const PolyMatrix& m) {
  DegreeMatrix out;
  std::vector<int> a, b;
  if (!solve_degrees(m, a, b, out.ambiguous)) throw PreconditionError("matrix is not homogeneous");
  out.column_perm.resize(a.size());
  out.row_perm.resize(b.size());
  std::iota(out.column_perm.begin(), out.column_perm.end(), 0);
  std::iota(out.row_perm.begin(), out.row_perm.end(), 0);
  std::stable_sort(out.column_perm.begin(), out.column_perm.end(),
                   [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
  std::stable_sort(out.row_perm.begin(), out.row_perm.end(),
                   [&](std::size_t x, std::size_t y) { return b[x] < b[y]; });
  int anchor = b.empty() ? 0 : b[out.row_perm[0]];
  for (auto j : out.column_perm) out.a.push_back(a[j] - anchor);
  for (auto i : out.row_perm) out.b.push_back(b[i] - anchor);
  out.u.assign(out.a.size(), std::vector<int>(out.b.size(), 0));
  for (std::size_t j = 0; j < out.a.size(); ++j) {
    for (std::size_t i = 0; i < out.b.size(); ++i) out.u[j][i] = out.a[j] - out.b[i];
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t s) {
  if (s == 0 || s > std::min(m.rows(), m.cols())) throw PreconditionError("minor size out of range");
  if (m.rows() > 64 || m.cols() > 64) throw PreconditionError("matrices larger than 64 are not supported");
  auto row_sets = combinations(m.rows(), s);
  auto col_sets = combinations(m.cols(), s);

  // Needed (rows, cols) keys per level, top-down.
  std::vector<std::vector<Key>> levels(s + 1);
  std::vector<std::unordered_map<Key, std::size_t, KeyHash>> index(s + 1);
  auto need = [&](std::size_t level, Key k) {
    auto [it, inserted] = index[level].emplace(k, levels[level].size());
    if (inserted) levels[level].push_back(k);
  };
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) need(s, Key{mask_of(r), mask_of(c)});
  }
  for (std::size_t level = s; level > 1; --level) {
    for (const auto& [rm, cm] : levels[level]) {
      std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rm));
      for (std::uint64_t c = cm; c != 0; c &= c - 1) {
        std::size_t col = static_cast<std::size_t>(std::countr_zero(c));
        if (m(r0, col).is_zero()) continue;
        need(level - 1, Key{rm & (rm - 1), cm & ~(std::uint64_t{1} << col)});
      }
    }
  }

  std::vector<std::vector<Polynomial>> values(s + 1);
  for (std::size_t level = 1; level <= s; ++level) {
    const auto& keys = levels[level];
    values[level].assign(keys.size(), Polynomial(m.ring()));
    std::exception_ptr error;
    const auto count = static_cast<std::ptrdiff_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 4) if (count > 16)
    for (std::ptrdiff_t sk = 0; sk < count; ++sk) {
      try {
        const auto [rm, cm] = keys[static_cast<std::size_t>(sk)];
        std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rm));
        if (level == 1) {
          values[level][sk] = m(r0, static_cast<std::size_t>(std::countr_zero(cm)));
          continue;
        }
        Polynomial acc(m.ring());
        std::size_t k = 0;
        for (std::uint64_t c = cm; c != 0; c &= c - 1, ++k) {
          std::size_t col = static_cast<std::size_t>(std::countr_zero(c));
          const auto& e = m(r0, col);
          if (e.is_zero()) continue;
          const auto& sub = values[level - 1][index[level - 1].at(
              Key{rm & (rm - 1), cm & ~(std::uint64_t{1} << col)})];
          if (sub.is_zero()) continue;
          Polynomial term = e * sub;
          acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        values[level][sk] = std::move(acc);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  std::vector<Polynomial> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) out.push_back(values[s][index[s].at(Key{mask_of(r), mask_of(c)})]);
  }
  return out;
}

std::vector<Polynomial> minors_reference(const PolyMatrix& m, std::size_t s) {
  if (s == 0 || s > std::min(m.rows(), m.cols())) throw PreconditionError("minor size out of range");
  std::vector<Polynomial> out;
  for (const auto& r : combinations(m.rows(), s)) {
    for (const auto& c : combinations(m.cols(), s)) out.push_back(cofactor_det(m, r, c));
  }
  return out;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  return minors(m, std::min(m.rows(), m.cols()));
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  return minors(m, m.rows()).front();
}

PolyMatrix row_ops(const PolyMatrix& m, const ScalarMatrix& g) {
  if (g.size() != m.rows()) throw PreconditionError("row operation matrix has the wrong size");
  if (m.ring().field.is_zero(kernels::determinant_over(m.ring().field, g))) {
    throw PreconditionError("row operation matrix is singular");
  }
  PolyMatrix out = scalar_matrix(m.ring(), g) * m;
  if (!is_homogeneous_matrix(out)) throw PreconditionError("row operations destroyed homogeneity");
  return out;
}

PolyMatrix col_ops(const PolyMatrix& m, const ScalarMatrix& h) {
  if (h.size() != m.cols()) throw PreconditionError("column operation matrix has the wrong size");
  if (m.ring().field.is_zero(kernels::determinant_over(m.ring().field, h))) {
    throw PreconditionError("column operation matrix is singular");
  }
  PolyMatrix out = m * scalar_matrix(m.ring(), h);
  if (!is_homogeneous_matrix(out)) throw PreconditionError("column operations destroyed homogeneity");
  return out;
}

PolyMatrix delete_row(const PolyMatrix& m, std::size_t i) {
  if (i >= m.rows()) throw PreconditionError("row index out of range");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != i) rows.push_back(m.row(r));
  }
  if (rows.empty()) return PolyMatrix(m.ring(), 0, m.cols());
  return PolyMatrix(m.ring(), std::move(rows));
}

PolyMatrix delete_column(const PolyMatrix& m, std::size_t j) {
  if (j >= m.cols()) throw PreconditionError("column index out of range");
  PolyMatrix out(m.ring(), m.rows(), m.cols() - 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, k = 0; c < m.cols(); ++c) {
      if (c != j) out.at(r, k++) = m(r, c);
    }
  }
  return out;
}

PolyMatrix insert_column(const PolyMatrix& m, std::size_t j, std::span<const Polynomial> col) {
  if (j > m.cols() || col.size() != m.rows()) throw PreconditionError("column insertion out of range");
  PolyMatrix out(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, k = 0; c <= m.cols(); ++c) {
      out.at(r, c) = (c == j) ? col[r] : m(r, k++);
    }
  }
  if (!is_homogeneous_matrix(out)) throw PreconditionError("inserted column breaks homogeneity");
  return out;
}

PolyMatrix insert_row(const PolyMatrix& m, std::size_t i, std::span<const Polynomial> row) {
  if (i > m.rows() || row.size() != m.cols()) throw PreconditionError("row insertion out of range");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t r = 0; r <= m.rows(); ++r) {
    if (r == i) rows.emplace_back(row.begin(), row.end());
    if (r < m.rows()) rows.push_back(m.row(r));
  }
  PolyMatrix out(m.ring(), std::move(rows));
  if (!is_homogeneous_matrix(out)) throw PreconditionError("inserted row breaks homogeneity");
  return out;
}

ScalarMatrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    ScalarMatrix g(n, std::vector<Scalar>(n));
    for (auto& row : g) {
      for (auto& e : row) e = field.random_nonzero(rng);
    }
    if (!field.is_zero(kernels::determinant_over(field, g))) return g;
  }
}

PolyMatrix random_graded_row_automorphism(const PolyMatrix& m, std::mt19937_64& rng) {
  DegreeMatrix dm = degree_matrix(m);
  const std::size_t t = m.rows();
  std::vector<int> b(t);
  for (std::size_t i = 0; i < t; ++i) b[dm.row_perm[i]] = dm.b[i];
  const Ring& ring = m.ring();
  const Field& field = ring.field;
  PolyMatrix g(ring, t, t);
  // Scalar blocks on rows of equal degree must be invertible.
  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < t; ++i) blocks[b[i]].push_back(i);
  for (const auto& [deg, rows] : blocks) {
    ScalarMatrix block = random_invertible(field, rows.size(), rng);
    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (std::size_t y = 0; y < rows.size(); ++y) {
        g.at(rows[x], rows[y]) = Polynomial::constant(ring, block[x][y]);
      }
    }
  }
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i < t; ++i) {
      if (b[i] <= b[k]) continue;
      std::vector<Term> terms;
      for (const auto& mon : monomials_of_degree(ring.nvars, static_cast<unsigned>(b[i] - b[k]))) {
        terms.push_back(Term{mon, field.random_nonzero(rng)});
      }
      g.at(k, i) = Polynomial::from_terms(ring, std::move(terms));
    }
  }
  return g;
}

namespace {

bool independent_linear_forms(const Ring& ring, const std::vector<Polynomial>& forms) {
  ScalarMatrix rows;
  for (const auto& f : forms) {
    if (f.is_zero()) return false;
    std::vector<Scalar> row(ring.nvars, ring.field.zero());
    for (const auto& t : f.terms()) {
      for (std::size_t v = 0; v < ring.nvars; ++v) {
        if (t.mon[v] == 1) row[v] = t.coef;
      }
    }
    rows.push_back(std::move(row));
  }
  return kernels::rank_over(ring.field, rows) == forms.size();
}

std::vector<Polynomial> combine(const Ring& ring, const std::vector<std::vector<Polynomial>>& vectors,
                                const std::vector<Scalar>& coeffs) {
  std::vector<Polynomial> out(vectors.front().size(), Polynomial(ring));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += vectors[k][e].scaled(coeffs[k]);
  }
  return out;
}

}  // namespace

OneGenericReport is_one_generic(const PolyMatrix& m, OneGenericMode mode, int trials, std::uint64_t seed) {
  if (!m.is_linear()) throw PreconditionError("1-genericity is only checked for matrices of linear forms");
  const Ring& ring = m.ring();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!independent_linear_forms(ring, m.row(i))) {
      return {OneGenericVerdict::no, "entries of row " + std::to_string(i) + " are linearly dependent"};
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!independent_linear_forms(ring, m.column(j))) {
      return {OneGenericVerdict::no, "entries of column " + std::to_string(j) + " are linearly dependent"};
    }
  }
  if (mode == OneGenericMode::rows_cols) return {OneGenericVerdict::yes, "rows and columns independent"};

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Polynomial>> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Scalar> lambda(rows.size()), mu(cols.size());
    for (auto& x : lambda) x = ring.field.random_nonzero(rng);
    for (auto& x : mu) x = ring.field.random_nonzero(rng);
    if (!independent_linear_forms(ring, combine(ring, rows, lambda))) {
      return {OneGenericVerdict::no, "generalized row of trial " + std::to_string(trial) + " is dependent"};
    }
    if (!independent_linear_forms(ring, combine(ring, cols, mu))) {
      return {OneGenericVerdict::no, "generalized column of trial " + std::to_string(trial) + " is dependent"};
    }
  }
  return {OneGenericVerdict::probably_yes, std::to_string(trials) + " random generalized rows and columns independent"};
}

std::string to_string(OneGenericVerdict v) {
  switch (v) {
    case OneGenericVerdict::yes:
      return "1-generic";
    case OneGenericVerdict::no:
      return "not 1-generic";
    case OneGenericVerdict::probably_yes:
      return "probably 1-generic";
  }
  return "?";
}

}  // namespace detlab
