#include "detlab/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "detlab/errors.hpp"

namespace detlab {

namespace {

std::vector<ModuleElement> columns_of(const PolyMatrix& m, const std::vector<int>& shifts) {
  std::vector<ModuleElement> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(ModuleElement{m.column(c), shifts});
  return out;
}

PolyMatrix matrix_of(const Ring& ring, const std::vector<ModuleElement>& cols, std::size_t rows) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c].components[r];
  }
  return m;
}

bool find_unit(const PolyMatrix& m, std::size_t& row, std::size_t& col) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      if (!e.is_zero() && e.is_constant()) {
        row = r;
        col = c;
        return true;
      }
    }
  }
  return false;
}

// Cancels the unit maps[i](r, c): F_i's basis vector c against F_{i-1}'s
// basis vector r.
void cancel(FreeResolution& res, std::size_t i, std::size_t r, std::size_t c) {
  const Ring& ring = res.ring;
  const Field& field = ring.field;
  PolyMatrix& a = res.maps[i];
  const Scalar unit_inv = field.inv(a(r, c).leading().coef);

  // Column operations on maps[i] clearing row r; compensating row
  // operation on maps[i+1].
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (k == c || a(r, k).is_zero()) continue;
    Polynomial factor = a(r, k).scaled(unit_inv);
    for (std::size_t l = 0; l < a.rows(); ++l) {
      if (!a(l, c).is_zero()) a.at(l, k) -= factor * a(l, c);
    }
    if (i + 1 < res.maps.size()) {
      PolyMatrix& b = res.maps[i + 1];
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) b.at(c, j) += factor * b(k, j);
      }
    }
  }
  // Row operations on maps[i] clearing column c; compensating column
  // operation on maps[i-1].
  PolyMatrix& prev = res.maps[i - 1];
  for (std::size_t l = 0; l < a.rows(); ++l) {
    if (l == r || a(l, c).is_zero()) continue;
    Polynomial factor = a(l, c).scaled(unit_inv);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(r, k).is_zero()) a.at(l, k) -= factor * a(r, k);
    }
    for (std::size_t j = 0; j < prev.rows(); ++j) {
      if (!prev(j, l).is_zero()) prev.at(j, r) += factor * prev(j, l);
    }
  }
  a = delete_column(delete_row(a, r), c);
  prev = delete_column(prev, r);
  if (i + 1 < res.maps.size()) res.maps[i + 1] = delete_row(res.maps[i + 1], c);
  res.degrees[i - 1].erase(res.degrees[i - 1].begin() + static_cast<std::ptrdiff_t>(r));
  res.degrees[i].erase(res.degrees[i].begin() + static_cast<std::ptrdiff_t>(c));
  while (!res.maps.empty() && res.maps.back().cols() == 0) {
    res.maps.pop_back();
    res.degrees.pop_back();
  }
}

}  // namespace

FreeResolution free_resolution(const Ideal& ideal, int max_length) {
  const Ring& ring = ideal.ring();
  if (max_length < 0) max_length = static_cast<int>(ring.nvars) + 1;
  FreeResolution res;
  res.ring = ring;
  if (ideal.is_zero()) {
    res.minimal = res.complete = true;
    return res;
  }
  auto gens = minimalize(ideal);
  std::vector<Polynomial> row(gens.generators().begin(), gens.generators().end());
  std::vector<int> degs;
  for (const auto& g : row) degs.push_back(*g.homogeneous_degree());
  res.maps.push_back(PolyMatrix(ring, {row}));
  res.degrees.push_back(degs);

  res.complete = false;
  while (static_cast<int>(res.maps.size()) <= max_length) {
    const PolyMatrix& last = res.maps.back();
    std::vector<int> shifts = res.maps.size() == 1 ? std::vector<int>{0} : res.degrees[res.degrees.size() - 2];
    auto syz = syzygies(columns_of(last, shifts));
    if (syz.empty()) {
      res.complete = true;
      break;
    }
    std::vector<int> next;
    for (const auto& s : syz) next.push_back(*s.degree());
    res.maps.push_back(matrix_of(ring, syz, last.cols()));
    res.degrees.push_back(next);
  }
  minimalize(res);
  return res;
}

void minimalize(FreeResolution& res) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < res.maps.size() && !changed; ++i) {
      std::size_t r = 0, c = 0;
      if (find_unit(res.maps[i], r, c)) {
        cancel(res, i, r, c);
        changed = true;
      }
    }
  }
  std::size_t r = 0, c = 0;
  res.minimal = std::none_of(res.maps.begin(), res.maps.end(),
                             [&](const PolyMatrix& m) { return find_unit(m, r, c); });
}

BettiTable betti_table(const FreeResolution& res) {
  if (!res.minimal) throw PreconditionError("Betti table of a non-minimal resolution");
  BettiTable table;
  for (std::size_t i = 0; i < res.degrees.size(); ++i) {
    for (int d : res.degrees[i]) ++table[{static_cast<int>(i), d}];
  }
  return table;
}

std::vector<std::int64_t> betti_ranks(const BettiTable& table) {
  std::vector<std::int64_t> ranks;
  for (const auto& [key, count] : table) {
    auto i = static_cast<std::size_t>(key.first);
    if (ranks.size() <= i) ranks.resize(i + 1, 0);
    ranks[i] += count;
  }
  return ranks;
}

std::string betti_grid(const BettiTable& table) {
  if (table.empty()) return "total: 0\n";
  int max_i = 0, min_row = table.begin()->first.second, max_row = min_row;
  for (const auto& [key, count] : table) {
    max_i = std::max(max_i, key.first);
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  auto ranks = betti_ranks(table);
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::string(s.size() < 5 ? 5 - s.size() : 0, ' ') << s; };
  out << "      ";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << "\ntotal:";
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(ranks[static_cast<std::size_t>(i)]));
  out << '\n';
  for (int row = min_row; row <= max_row; ++row) {
    std::string label = std::to_string(row) + ":";
    out << std::string(label.size() < 6 ? 6 - label.size() : 0, ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      auto it = table.find({i, row + i});
      cell(it == table.end() ? "." : std::to_string(it->second));
    }
    out << '\n';
  }
  return out.str();
}

bool composes_to_zero(const FreeResolution& res) {
  for (std::size_t i = 1; i < res.maps.size(); ++i) {
    if (!(res.maps[i - 1] * res.maps[i]).is_zero()) return false;
  }
  return true;
}

IntPoly betti_numerator(const BettiTable& table) {
  IntPoly num{1};
  for (const auto& [key, count] : table) {
    auto j = static_cast<std::size_t>(key.second);
    if (num.size() <= j) num.resize(j + 1, 0);
    num[j] += (key.first % 2 == 0 ? -count : count);
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

bool matches_hilbert_series(const FreeResolution& res, const Ideal& ideal) {
  if (!res.complete) return false;
  return betti_numerator(betti_table(res)) == ideal.hilbert().numerator();
}

bool is_acm(const Ideal& ideal) {
  if (!is_saturated(ideal)) throw PreconditionError("aCM test needs a saturated ideal");
  if (ideal.is_unit()) return true;
  FreeResolution res = free_resolution(ideal);
  if (!res.complete) throw Error("resolution did not terminate within the syzygy bound");
  return res.projective_dimension() == ideal.dimension().height;
}

Ideal last_map_minor_ideal(const FreeResolution& res, std::size_t size) {
  if (res.maps.empty()) throw PreconditionError("resolution of the zero ideal has no maps");
  const PolyMatrix& last = res.maps.back();
  if (size == 0 || size > std::min(last.rows(), last.cols())) {
    throw PreconditionError("minor size exceeds the last matrix");
  }
  return Ideal(res.ring, minors(last, size));
}

}  // namespace detlab
