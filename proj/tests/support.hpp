#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "detlab/ideal.hpp"
#include "detlab/kernels.hpp"
#include "detlab/matrix.hpp"
#include "detlab/resolution.hpp"

namespace testing_support {

using namespace detlab;

inline Polynomial poly(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal ideal_of(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(poly(r, g));
  return Ideal(r, std::move(out));
}

inline PolyMatrix matrix_of(const Ring& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const char* e : row) out.back().push_back(poly(r, e));
  }
  return PolyMatrix(r, std::move(out));
}

inline Ideal minors_ideal(const PolyMatrix& m) { return Ideal(m.ring(), maximal_minors(m)); }

/// Random homogeneous polynomial of degree d with up to `terms` terms.
inline Polynomial random_form(const Ring& r, unsigned d, std::size_t terms, std::mt19937_64& rng) {
  auto mons = monomials_of_degree(r.nvars, d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) ts.push_back({mons[pick(rng)], r.field.random_nonzero(rng)});
  return Polynomial::from_terms(r, std::move(ts));
}

/// dim_k (R/I)_d from the rank of all products m * g spanning I_d; does
/// not use Groebner bases. Prime fields only.
inline std::int64_t hilbert_function_oracle(const Ideal& ideal, int d) {
  const Ring& r = ideal.ring();
  auto basis = monomials_of_degree(r.nvars, static_cast<unsigned>(d));
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> rows;
  for (const auto& g : ideal.generators()) {
    int gd = *g.homogeneous_degree();
    if (gd > d) continue;
    for (const auto& m : monomials_of_degree(r.nvars, static_cast<unsigned>(d - gd))) {
      std::vector<std::pair<std::size_t, std::uint32_t>> row;
      for (const auto& t : g.terms()) row.push_back({index.at(t.mon * m), static_cast<std::uint32_t>(t.coef.num)});
      rows.push_back(std::move(row));
    }
  }
  kernels::ModMatrix mat(rows.size(), basis.size(), r.field.characteristic());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) mat.at(i, c) = v;
  }
  auto rank = rows.empty() ? 0 : kernels::rank_serial(std::move(mat));
  return static_cast<std::int64_t>(basis.size()) - static_cast<std::int64_t>(rank);
}

inline std::vector<std::int64_t> ranks(const FreeResolution& res) { return betti_ranks(betti_table(res)); }

}  // namespace testing_support
