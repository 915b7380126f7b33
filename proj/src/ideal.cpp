#include "detlab/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "detlab/errors.hpp"
#include "detlab/kernels.hpp"

namespace detlab {

struct Ideal::Cache {
  std::once_flag gb_once;
  std::once_flag hs_once;
  std::optional<GroebnerBasis> gb;
  std::optional<HilbertSeries> hs;
};

Ideal::Ideal() : cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.ring().nvars != ring_.nvars || !(g.ring().field == ring_.field)) {
      throw ContextMismatch("generator from another ring: " + g.ring().describe() + " vs " + ring_.describe());
    }
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw PreconditionError("ideal generator is not homogeneous: " + g.to_string());
    gens_.push_back(g.ring().order == ring_.order ? std::move(g) : g.reordered(ring_));
  }
}

Ideal Ideal::maximal(const Ring& ring) {
  std::vector<std::size_t> all(ring.nvars);
  std::iota(all.begin(), all.end(), 0);
  return variables(ring, all);
}

Ideal Ideal::variables(const Ring& ring, std::span<const std::size_t> vars) {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->gb_once, [&] { cache_->gb = buchberger(ring_, gens_); });
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& p) const { return groebner().contains(p); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_zero() const { return gens_.empty(); }
bool Ideal::is_unit() const { return groebner().is_unit_ideal(); }

Dimension Ideal::dimension() const {
  const int n = static_cast<int>(ring_.nvars);
  if (is_zero()) return {n, 0};
  if (is_unit()) return {-1, n + 1};
  auto leads = groebner().leading_monomials();
  int d = monomial_krull_dimension(leads, ring_.nvars);
  return {d, n - d};
}

const HilbertSeries& Ideal::hilbert() const {
  std::call_once(cache_->hs_once, [&] {
    auto leads = groebner().leading_monomials();
    cache_->hs = monomial_hilbert_series(leads, ring_.nvars);
  });
  return *cache_->hs;
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

namespace {

void check_same(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) {
    throw ContextMismatch("ideals in different rings: " + a.ring().describe() + " vs " + b.ring().describe());
  }
}

std::vector<Polynomial> gens_of(const Ideal& a) { return {a.generators().begin(), a.generators().end()}; }

// Degrevlex basis of I with x_var moved to the last slot; returns the
// basis elements in the permuted ring together with the permutation.
std::vector<Polynomial> basis_with_last(const Ideal& a, std::size_t var, Ring& permuted,
                                        std::vector<std::size_t>& perm) {
  const std::size_t n = a.ring().nvars;
  perm.resize(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[var], perm[n - 1]);
  permuted = a.ring().with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.permuted(perm, permuted));
  auto gb = buchberger(permuted, gens);
  return {gb.elements().begin(), gb.elements().end()};
}

Polynomial divide_by_last(const Polynomial& g, unsigned max_power, const Ring& ring) {
  const std::size_t last = ring.nvars - 1;
  unsigned e = max_power;
  for (const auto& t : g.terms()) e = std::min<unsigned>(e, t.mon[last]);
  if (e == 0) return g;
  Monomial x = Monomial::variable(ring.nvars, last, e);
  std::vector<Term> terms;
  for (const auto& t : g.terms()) terms.push_back(Term{t.mon / x, t.coef});
  return Polynomial::from_terms(ring, std::move(terms));
}

Ideal last_variable_colon(const Ideal& a, std::size_t var, unsigned max_power) {
  if (a.is_zero()) return a;
  Ring permuted;
  std::vector<std::size_t> perm;
  auto basis = basis_with_last(a, var, permuted, perm);
  std::vector<Polynomial> out;
  for (const auto& g : basis) out.push_back(divide_by_last(g, max_power, permuted).permuted(perm, a.ring()));
  return Ideal(a.ring(), std::move(out));
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  auto gens = gens_of(a);
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, unsigned k) {
  Ideal out = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) out = minimalize(product(out, a));
  return out;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const Ring& ring = a.ring();
  const std::size_t n = ring.nvars;
  Ring big(n + 1, ring.field, MonomialOrder::elimination(1));
  std::vector<std::size_t> up(n), down(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.permuted(up, big));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.permuted(up, big));
  std::vector<Polynomial> out;
  for (const auto& h : eliminate(gens, 1)) out.push_back(h.permuted(down, ring));
  return Ideal(ring, std::move(out));
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& a, const Polynomial& g) {
  if (g.is_zero()) return Ideal::unit(a.ring());
  if (g.is_constant()) return a;
  Ideal principal(a.ring(), {g});
  Ideal meet = intersect(a, principal);
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) {
    auto q = h.divide_exact(g.ring().order == a.ring().order ? g : g.reordered(a.ring()));
    if (!q) throw Error("internal: intersection generator not divisible by the divisor");
    out.push_back(*q);
  }
  return Ideal(a.ring(), std::move(out));
}

Ideal quotient(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  if (b.is_zero()) return Ideal::unit(a.ring());
  std::vector<Ideal> parts;
  for (const auto& g : b.generators()) {
    if (g.is_constant()) return a;
    parts.push_back(quotient(a, g));
  }
  return intersect(parts);
}

Ideal variable_quotient(const Ideal& a, std::size_t var) {
  if (var >= a.ring().nvars) throw PreconditionError("variable index out of range");
  return last_variable_colon(a, var, 1);
}

Ideal variable_saturation(const Ideal& a, std::size_t var) {
  if (var >= a.ring().nvars) throw PreconditionError("variable index out of range");
  return last_variable_colon(a, var, std::numeric_limits<unsigned>::max());
}

Ideal saturate(const Ideal& a) {
  if (a.is_zero() || a.ring().nvars == 0) return a;
  if (a.is_unit()) return a;
  std::vector<Ideal> parts;
  for (std::size_t i = 0; i < a.ring().nvars; ++i) parts.push_back(variable_saturation(a, i));
  return intersect(parts);
}

Ideal saturate(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  while (true) {
    Ideal next = quotient(cur, b);
    if (equal(next, cur)) return cur;
    cur = next;
  }
}

bool is_saturated(const Ideal& a) {
  if (a.is_zero() || a.ring().nvars == 0) return true;
  if (a.is_unit()) return true;
  std::vector<Ideal> parts;
  for (std::size_t i = 0; i < a.ring().nvars; ++i) parts.push_back(variable_quotient(a, i));
  return a.contains(intersect(parts));
}

bool equal(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  auto ea = a.groebner().elements();
  auto eb = b.groebner().elements();
  return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Ideal minimalize(const Ideal& a) {
  auto gens = gens_of(a);
  return Ideal(a.ring(), minimal_generators(gens));
}

std::map<int, std::int64_t> mu_graded(const Ideal& a) {
  std::map<int, std::int64_t> out;
  if (a.is_zero()) return out;
  const Ring& ring = a.ring();
  const int top = a.max_degree();
  std::vector<Polynomial> m_gens;
  for (std::size_t j = 0; j < ring.nvars; ++j) {
    Polynomial x = Polynomial::variable(ring, j);
    for (const auto& g : a.generators()) m_gens.push_back(x * g);
  }
  GroebnerOptions opts;
  opts.degree_limit = top;
  auto gb_i = buchberger(ring, a.generators(), opts);
  auto gb_mi = buchberger(ring, m_gens, opts);
  auto hs_i = monomial_hilbert_series(gb_i.leading_monomials(), ring.nvars);
  auto hs_mi = monomial_hilbert_series(gb_mi.leading_monomials(), ring.nvars);
  for (int d = 0; d <= top; ++d) {
    std::int64_t v = hs_mi.function(d) - hs_i.function(d);
    if (v != 0) out[d] = v;
  }
  return out;
}

std::int64_t mu(const Ideal& a) {
  std::int64_t total = 0;
  for (const auto& [d, v] : mu_graded(a)) total += v;
  return total;
}

namespace {

std::size_t rank_of_rows(const Field& field, const std::vector<Polynomial>& rows) {
  if (rows.empty()) return 0;
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (const auto& r : rows) {
    for (const auto& t : r.terms()) column.emplace(t.mon, column.size());
  }
  if (field.is_prime()) {
    kernels::ModMatrix m(rows.size(), column.size(), field.characteristic());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (const auto& t : rows[i].terms()) m.at(i, column[t.mon]) = static_cast<std::uint32_t>(t.coef.num);
    }
    return kernels::rank(std::move(m));
  }
  std::vector<std::vector<Scalar>> dense(rows.size(), std::vector<Scalar>(column.size(), field.zero()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& t : rows[i].terms()) dense[i][column[t.mon]] = t.coef;
  }
  return kernels::rank_over(field, std::move(dense));
}

}  // namespace

std::map<int, std::int64_t> mu_graded_linear_algebra(const Ideal& a) {
  std::map<int, std::int64_t> out;
  const Ring& ring = a.ring();
  std::vector<int> degrees;
  for (const auto& g : a.generators()) degrees.push_back(g.total_degree());
  std::vector<int> distinct = degrees;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int d : distinct) {
    std::vector<Polynomial> rows;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] >= d) continue;
      for (const auto& m : monomials_of_degree(ring.nvars, static_cast<unsigned>(d - degrees[i]))) {
        rows.push_back(a.generators()[i].times_monomial(m, ring.field.one()));
      }
    }
    std::size_t base = rank_of_rows(ring.field, rows);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] == d) rows.push_back(a.generators()[i]);
    }
    std::size_t full = rank_of_rows(ring.field, rows);
    if (full > base) out[d] = static_cast<std::int64_t>(full - base);
  }
  return out;
}

Section hyperplane_section(const Ideal& a, const Polynomial& h, bool check_saturation) {
  if (!h.is_linear_form()) throw PreconditionError("hyperplane must be a nonzero linear form: " + h.to_string());
  const Ring& ring = a.ring();
  const std::size_t n = ring.nvars;
  std::size_t pivot = n;
  for (std::size_t i = n; i-- > 0;) {
    if (!ring.field.is_zero(h.linear_coefficient(i))) {
      pivot = i;
      break;
    }
  }
  Ring target = ring.with_nvars(n - 1);
  auto target_var = [&](std::size_t i) { return Polynomial::variable(target, i < pivot ? i : i - 1); };
  // c_p x_p + sum c_i x_i = 0  =>  x_p = -(1/c_p) sum c_i x_i
  Scalar scale = ring.field.neg(ring.field.inv(h.linear_coefficient(pivot)));
  Polynomial image(target);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    Scalar c = h.linear_coefficient(i);
    if (!ring.field.is_zero(c)) image += target_var(i).scaled(ring.field.mul(scale, c));
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(i == pivot ? image : target_var(i));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.substitute(images));
  Section s{Ideal(target, std::move(gens)), pivot, image, std::nullopt};
  if (check_saturation) s.saturated = is_saturated(s.ideal);
  return s;
}

Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < ring.nvars; ++i) {
    out += Polynomial::variable(ring, i).scaled(ring.field.random_nonzero(rng));
  }
  return out;
}

ArtinianReduction artinian_reduction(const Ideal& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ArtinianReduction out{a, {}};
  while (out.ideal.dimension().krull_dim > 0) {
    bool done = false;
    for (int attempt = 0; attempt < 10 && !done; ++attempt) {
      Polynomial l = random_linear_form(out.ideal.ring(), rng);
      if (!equal(quotient(out.ideal, l), out.ideal)) continue;
      out.forms.push_back(l);
      out.ideal = hyperplane_section(out.ideal, l).ideal;
      done = true;
    }
    if (!done) throw Error("artinian reduction: no nonzerodivisor linear form found in 10 draws");
  }
  return out;
}

bool radical_contains(const Ideal& a, const Polynomial& f) {
  const Ring& ring = a.ring();
  const std::size_t n = ring.nvars;
  Ring big(n + 1, ring.field, MonomialOrder::degrevlex());
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.permuted(up, big));
  Polynomial y = Polynomial::variable(big, n);
  gens.push_back(Polynomial::constant(big, 1) - y * f.permuted(up, big));
  return buchberger(big, gens).is_unit_ideal();
}

Ideal change_field(const Ideal& a, const Field& field) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.change_field(field));
  return Ideal(a.ring().with_field(field), std::move(gens));
}

bool hilbert_series_agrees_at(const Ideal& a, std::uint32_t other_prime) {
  Ideal b = change_field(a, Field::prime(other_prime));
  return b.hilbert() == a.hilbert();
}

}  // namespace detlab
