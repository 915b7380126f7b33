#include "detlab/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "detlab/errors.hpp"

namespace detlab {

namespace {

Polynomial var(const Ring& ring, std::size_t i) { return Polynomial::variable(ring, i); }

Ideal monomial_ideal(const Ring& ring, const std::vector<std::vector<std::size_t>>& supports) {
  std::vector<Polynomial> gens;
  for (const auto& s : supports) {
    Polynomial p = Polynomial::constant(ring, 1);
    for (auto v : s) p = p * var(ring, v);
    gens.push_back(p);
  }
  return Ideal(ring, std::move(gens));
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Scalar> default_alphas(const Field& field, std::size_t d) {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(field.from_int(static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace

PolyMatrix power_ideal_matrix(std::size_t n, std::size_t t, const Field& field) {
  if (n == 0 || t == 0) throw PreconditionError("power ideal matrix needs n, t >= 1");
  Ring ring(n, field);
  PolyMatrix m(ring, t, t + n - 1);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, i + j) = var(ring, j);
  }
  return m;
}

PolyMatrix squarefree_matrix(std::span<const Polynomial> columns, std::size_t d, std::vector<Scalar> alphas) {
  if (columns.empty()) throw PreconditionError("no columns");
  const Ring& ring = columns.front().ring();
  const Field& field = ring.field;
  if (d == 0 || d > columns.size()) throw PreconditionError("need 1 <= d <= number of columns");
  if (alphas.empty()) alphas = default_alphas(field, d);
  if (alphas.size() != d) throw PreconditionError("need one alpha per row");
  for (std::size_t i = 0; i < d; ++i) {
    if (field.is_zero(alphas[i])) throw PreconditionError("alphas must be nonzero");
    for (std::size_t k = 0; k < i; ++k) {
      if (alphas[k] == alphas[i]) throw PreconditionError("alphas must be distinct");
    }
  }
  PolyMatrix m(ring, d, columns.size());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) m.at(i, j) = columns[j].scaled(field.pow(alphas[i], j));
  }
  return m;
}

PolyMatrix squarefree_matrix(std::size_t n, std::size_t d, std::vector<Scalar> alphas, const Field& field) {
  Ring ring(n + 1, field);
  std::vector<Polynomial> cols;
  for (std::size_t j = 0; j <= n; ++j) cols.push_back(var(ring, j));
  return squarefree_matrix(cols, d, std::move(alphas));
}

Ideal squarefree_ideal(const Ring& ring, std::size_t d) {
  std::vector<std::vector<std::size_t>> supports;
  std::vector<std::size_t> cur;
  subsets(ring.nvars, d, 0, cur, supports);
  return monomial_ideal(ring, supports);
}

PolyMatrix symmetric_family(std::size_t t, SymmetricVariant variant, std::uint64_t seed, std::optional<Scalar> s,
                            const Field& field) {
  if (t < 2) throw PreconditionError("symmetric family needs t >= 2");
  if (variant == SymmetricVariant::X) {
    Ring ring((t + 1) * (t + 2) / 2, field);
    std::vector<std::vector<std::size_t>> index(t + 1, std::vector<std::size_t>(t + 1));
    std::size_t next = 0;
    for (std::size_t i = 0; i <= t; ++i) {
      for (std::size_t j = i; j <= t; ++j) index[i][j] = index[j][i] = next++;
    }
    PolyMatrix m(ring, t + 1, t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
      for (std::size_t j = 0; j <= t; ++j) m.at(i, j) = var(ring, index[i][j]);
    }
    return m;
  }
  Ring ring(2 * t + 1, field);
  if (variant == SymmetricVariant::U) {
    PolyMatrix m(ring, t, t + 2);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t + 2; ++j) m.at(i, j) = var(ring, i + j);
    }
    return m;
  }
  PolyMatrix y(ring, t + 1, t + 1);
  for (std::size_t i = 0; i <= t; ++i) {
    for (std::size_t j = 0; j <= t; ++j) y.at(i, j) = var(ring, i + j);
  }
  if (variant == SymmetricVariant::Y) return y;

  std::mt19937_64 rng(seed);
  PolyMatrix z = y;
  for (std::size_t i = 1; i < t; ++i) {
    for (std::size_t j = i; j < t; ++j) {
      std::vector<Term> terms;
      for (std::size_t v = 0; v < ring.nvars; ++v) {
        terms.push_back(Term{Monomial::variable(ring.nvars, v), field.random_nonzero(rng, true)});
      }
      z.at(i, j) = z.at(j, i) = Polynomial::from_terms(ring, std::move(terms));
    }
  }
  if (variant == SymmetricVariant::Z) return z;

  Scalar sv = s ? *s : field.random_nonzero(rng, true);
  Scalar rest = field.sub(field.one(), sv);
  PolyMatrix zs(ring, t + 1, t + 1);
  for (std::size_t i = 0; i <= t; ++i) {
    for (std::size_t j = 0; j <= t; ++j) zs.at(i, j) = z(i, j).scaled(sv) + y(i, j).scaled(rest);
  }
  return zs;
}

NPlusOneCurve n_plus_1_curve(std::size_t n, const Field& field) {
  if (n < 2) throw PreconditionError("n+1 curve needs n >= 2");
  Ring ring(n + 2, field);
  std::vector<std::vector<std::size_t>> curve_supports, c1_supports{{0}}, surface_supports;
  for (std::size_t j = 2; j <= n + 1; ++j) curve_supports.push_back({0, j});
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      curve_supports.push_back({i, j});
      c1_supports.push_back({i, j});
    }
  }
  std::vector<std::size_t> surface_vars{0};
  for (std::size_t j = 2; j <= n; ++j) surface_vars.push_back(j);
  for (std::size_t a = 0; a < surface_vars.size(); ++a) {
    for (std::size_t b = a + 1; b < surface_vars.size(); ++b) surface_supports.push_back({surface_vars[a], surface_vars[b]});
  }
  std::vector<std::size_t> c2_vars, point_vars{0};
  for (std::size_t j = 2; j <= n + 1; ++j) {
    c2_vars.push_back(j);
    point_vars.push_back(j);
  }
  NPlusOneCurve out;
  out.curve = monomial_ideal(ring, curve_supports);
  out.c1 = monomial_ideal(ring, c1_supports);
  out.c2 = Ideal::variables(ring, c2_vars);
  out.from_components = intersect(out.c1, out.c2);
  out.point = Ideal::variables(ring, point_vars);
  out.surface = monomial_ideal(ring, surface_supports);
  return out;
}

Ideal n_plus_1_minor_target(std::size_t n, const Field& field) {
  Ring ring(n + 2, field);
  std::vector<std::vector<std::size_t>> supports;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) supports.push_back({i, j});
    supports.push_back({i, n + 1});
  }
  return monomial_ideal(ring, supports);
}

DoubleLink basic_double_link(const Ideal& curve, const Ideal& surface, const Polynomial& f) {
  if (!curve.contains(surface)) throw PreconditionError("I_S is not contained in I_C");
  if (!f.is_homogeneous() || f.is_zero()) throw PreconditionError("F must be a nonzero form");
  if (!equal(quotient(surface, f), surface)) throw PreconditionError("F is a zerodivisor modulo I_S");
  std::vector<Polynomial> gens(surface.generators().begin(), surface.generators().end());
  for (const auto& g : curve.generators()) gens.push_back(f * g);
  DoubleLink out{Ideal(curve.ring(), std::move(gens)), false};
  out.saturated = is_saturated(out.ideal);
  return out;
}

PolyMatrix bdl_matrix(const PolyMatrix& m, const PolyMatrix& n, const Polynomial& f, BdlMode mode, std::size_t k,
                      std::size_t l) {
  if (!(m.ring() == n.ring())) throw ContextMismatch("M and N over different rings");
  auto fd = f.homogeneous_degree();
  if (!fd || f.is_zero()) throw PreconditionError("F must be a nonzero form");
  if (mode == BdlMode::row_added) {
    if (n.rows() != m.rows() + 1 || n.cols() != m.cols() || k >= n.rows()) {
      throw PreconditionError("N must be M with one row inserted");
    }
    if (!(delete_row(n, k) == m)) throw PreconditionError("deleting row k of N does not give M");
    if (l > n.cols()) throw PreconditionError("column position out of range");
    if (l > 0 && !n(k, l - 1).is_zero() && *n(k, l - 1).homogeneous_degree() > *fd) {
      throw PreconditionError("deg F is below the entry to its left");
    }
    if (l < n.cols() && !n(k, l).is_zero() && *n(k, l).homogeneous_degree() < *fd) {
      throw PreconditionError("deg F is above the entry to its right");
    }
    std::vector<Polynomial> col(n.rows(), Polynomial(n.ring()));
    col[k] = f;
    return insert_column(n, l, col);
  }
  if (n.rows() != m.rows() || n.cols() + 1 != m.cols() || k >= m.cols()) {
    throw PreconditionError("N must be M with one column removed");
  }
  if (!(delete_column(m, k) == n)) throw PreconditionError("deleting column k of M does not give N");
  std::vector<Polynomial> col;
  for (const auto& e : m.column(k)) col.push_back(e * f);
  return insert_column(n, k, col);
}

FamilyMember cone_family(const Ideal& ideal, const Scalar& s, std::string provenance) {
  const Ring& ring = ideal.ring();
  if (ring.nvars == 0) throw PreconditionError("cone family needs at least one variable");
  auto gens = minimalize(ideal);
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring.nvars; ++v) images.push_back(var(ring, v));
  images.back() = images.back().scaled(s);
  std::vector<Polynomial> out;
  for (const auto& g : gens.generators()) out.push_back(g.substitute(images));
  return {s, Ideal(ring, std::move(out)), std::move(provenance)};
}

PolyMatrix veronese_deformation_matrix(const Scalar& s, const Field& field) {
  Ring ring(6, field);
  PolyMatrix m(ring, 3, 3);
  auto x = [&](std::size_t i) { return var(ring, i); };
  m.at(0, 0) = x(0);
  m.at(0, 1) = m.at(1, 0) = x(1);
  m.at(0, 2) = m.at(2, 0) = x(2);
  m.at(1, 1) = x(2).scaled(field.sub(field.one(), s)) + x(3).scaled(s);
  m.at(1, 2) = m.at(2, 1) = x(4);
  m.at(2, 2) = x(5);
  return m;
}

Ideal ruling_lines_curve(std::size_t a, std::size_t b, const Field& field) {
  Ring ring(4, field);
  std::vector<Ideal> lines;
  auto x = [&](std::size_t i) { return var(ring, i); };
  for (std::size_t i = 0; i < a; ++i) {
    Scalar c = field.from_int(static_cast<std::int64_t>(i));
    lines.push_back(Ideal(ring, {x(0) - x(2).scaled(c), x(1) - x(3).scaled(c)}));
  }
  for (std::size_t i = 0; i < b; ++i) {
    Scalar c = field.from_int(static_cast<std::int64_t>(i));
    lines.push_back(Ideal(ring, {x(0) - x(1).scaled(c), x(2) - x(3).scaled(c)}));
  }
  if (lines.empty()) return Ideal::unit(ring);
  return intersect(lines);
}

PolyMatrix random_linear_matrix(std::size_t t, std::size_t q, std::size_t nvars, std::uint64_t seed,
                                const Field& field) {
  Ring ring(nvars, field);
  std::mt19937_64 rng(seed);
  PolyMatrix m(ring, t, q);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < q; ++j) m.at(i, j) = random_linear_form(ring, rng);
  }
  return m;
}

PolyMatrix section_example_matrix(SectionExample which, const Field& field) {
  // X lives in k[x0, x1, x2, x4]; we number those x0..x3.
  const std::size_t n = which == SectionExample::C ? 5 : 4;
  Ring ring(n, field);
  auto x = [&](std::size_t i) { return var(ring, i); };
  Polynomial zero(ring);
  Polynomial second;
  if (which == SectionExample::C) second = x(1) + x(4);
  if (which == SectionExample::X) second = x(1) + x(3);
  if (which == SectionExample::Z) second = x(1);
  return PolyMatrix(ring, {{x(0), second, zero, x(2)}, {zero, x(1), x(2), x(0) + x(1)}});
}

namespace {

struct Query {
  std::string name;
  std::map<std::string, std::string> params;
  std::set<std::string> used;

  std::int64_t get(const std::string& key, std::int64_t fallback) {
    used.insert(key);
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
      std::size_t pos = 0;
      std::int64_t v = std::stoll(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("parameter " + key + " is not an integer: " + it->second);
    }
  }
  bool has(const std::string& key) const { return params.count(key) > 0; }
  void finish() const {
    for (const auto& [key, value] : params) {
      if (!used.count(key)) throw PreconditionError("unknown parameter '" + key + "' for " + name);
    }
  }
};

Query parse_query(const std::string& id) {
  Query q;
  auto qm = id.find('?');
  q.name = id.substr(0, qm);
  if (qm == std::string::npos) return q;
  std::stringstream rest(id.substr(qm + 1));
  std::string item;
  while (std::getline(rest, item, '&')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("malformed parameter '" + item + "'");
    q.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return q;
}

std::size_t positive(std::int64_t v, const char* what) {
  if (v < 0) throw PreconditionError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

Construction from_matrix(std::string id, std::string description, PolyMatrix m, std::size_t minor_size) {
  Construction c{std::move(id), std::move(description), Ideal(m.ring(), minors(m, minor_size)), m};
  return c;
}

}  // namespace

std::vector<std::string> registry_ids() {
  return {"artin?n=&t=",     "sqfr?n=&d=",        "genpts?n=",      "symm.X?t=",
          "symm.Y?t=",       "symm.U?t=",         "symm.Z?t=&seed=", "symm.Zs?t=&s=&seed=",
          "vero",            "verodeform?seed=",  "stgood.C",       "stgood.X",
          "stgood.Z",        "n+1curve?n=",       "gensect.S?n=",   "bdl.gensectbdl?n=",
          "flatfam.M?s=",    "deg9gen10",         "scroll?seed="};
}

Construction construct(const std::string& id, const Field& field) {
  Query q = parse_query(id);
  Construction out;
  const std::string& name = q.name;
  if (name == "artin") {
    auto n = positive(q.get("n", 2), "n"), t = positive(q.get("t", 2), "t");
    out = from_matrix(id, "banded matrix whose maximal minors give m^t", power_ideal_matrix(n, t, field), t);
  } else if (name == "sqfr" || name == "genpts") {
    auto n = positive(q.get("n", 4), "n");
    auto d = name == "genpts" ? 2 : positive(q.get("d", 2), "d");
    out = from_matrix(id, "Vandermonde-scaled matrix of squarefree monomials", squarefree_matrix(n, d, {}, field), d);
  } else if (name.rfind("symm.", 0) == 0) {
    auto t = positive(q.get("t", 2), "t");
    auto seed = static_cast<std::uint64_t>(q.get("seed", 1));
    std::optional<Scalar> s;
    if (q.has("s")) s = field.from_int(q.get("s", 0));
    std::string v = name.substr(5);
    SymmetricVariant variant;
    if (v == "X") variant = SymmetricVariant::X;
    else if (v == "Y") variant = SymmetricVariant::Y;
    else if (v == "U") variant = SymmetricVariant::U;
    else if (v == "Z") variant = SymmetricVariant::Z;
    else if (v == "Zs") variant = SymmetricVariant::Zs;
    else throw PreconditionError("unknown symmetric variant " + v);
    out = from_matrix(id, "symmetric family, variant " + v, symmetric_family(t, variant, seed, s, field), t);
  } else if (name == "vero") {
    out = from_matrix(id, "Veronese surface", symmetric_family(2, SymmetricVariant::X, 1, std::nullopt, field), 2);
  } else if (name == "verodeform") {
    auto seed = static_cast<std::uint64_t>(q.get("seed", 1));
    out = from_matrix(id, "I_3(Z_s) for random s and L", symmetric_family(3, SymmetricVariant::Zs, seed, std::nullopt, field), 3);
  } else if (name == "stgood.C") {
    out = from_matrix(id, "cone curve in P^4", section_example_matrix(SectionExample::C, field), 2);
  } else if (name == "stgood.X") {
    out = from_matrix(id, "general section of the cone curve", section_example_matrix(SectionExample::X, field), 2);
  } else if (name == "stgood.Z") {
    out = from_matrix(id, "section of the cone curve by x4", section_example_matrix(SectionExample::Z, field), 2);
  } else if (name == "n+1curve") {
    auto n = positive(q.get("n", 3), "n");
    out = Construction{id, "degree n+1 curve, cone over points plus a line", n_plus_1_curve(n, field).curve, std::nullopt};
  } else if (name == "gensect.S") {
    auto n = positive(q.get("n", 3), "n");
    out = Construction{id, "surface of squarefree quadrics in x0, x2..xn", n_plus_1_curve(n, field).surface, std::nullopt};
  } else if (name == "bdl.gensectbdl") {
    auto n = positive(q.get("n", 3), "n");
    q.get("seed", 1);
    auto curve = n_plus_1_curve(n, field);
    auto link = basic_double_link(curve.curve, curve.surface, Polynomial::variable(curve.curve.ring(), 1));
    out = Construction{id, "basic double link x1*I_C + I_S", link.ideal, std::nullopt};
  } else if (name == "flatfam.M") {
    Scalar s = field.from_int(q.get("s", 1));
    out = from_matrix(id, "Veronese degeneration matrix M_s", veronese_deformation_matrix(s, field), 2);
  } else if (name == "deg9gen10") {
    out = Construction{id, "3 + 6 ruling lines on x0x3 - x1x2", ruling_lines_curve(3, 6, field), std::nullopt};
  } else if (name == "scroll") {
    auto seed = static_cast<std::uint64_t>(q.get("seed", 1));
    out = from_matrix(id, "random linear 3x5 matrix in 7 variables", random_linear_matrix(3, 5, 7, seed, field), 3);
  } else {
    throw PreconditionError("unknown construction id '" + name + "'");
  }
  q.finish();
  return out;
}

}  // namespace detlab
