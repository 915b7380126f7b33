#include "detlab/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "detlab/errors.hpp"

namespace detlab {

int ModuleOrder::compare(const VTerm& a, const VTerm& b) const {
  if (block != 0) {
    bool ta = a.pos < block, tb = b.pos < block;
    if (ta != tb) return ta ? 1 : -1;
  }
  if (position_first && a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  if (mono.is_graded()) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
  }
  int c = mono.compare_unchecked(a.mon, b.mon);
  if (c != 0) return c;
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return 0;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr int kInf = std::numeric_limits<int>::max();

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int degree;
};

class Engine {
 public:
  Engine(const Field& field, const ModuleOrder& order)
      : field_(field), order_(order), active_(order.shifts.size()) {}

  const std::vector<Vec>& elements() const { return elems_; }

  // Plain reducer set: no pair bookkeeping, elements need not be monic.
  void add_reducer(Vec v) {
    if (v.empty()) return;
    active_[v[0].pos].push_back(elems_.size());
    elems_.push_back(std::move(v));
  }

  Vec reduce_full(Vec f) const {
    std::size_t idx = 0;
    while (idx < f.size()) {
      std::size_t r = find_reducer(f[idx]);
      if (r == kNone) {
        ++idx;
        continue;
      }
      const Vec& g = elems_[r];
      Scalar c = field_.div(f[idx].coef, g[0].coef);
      Monomial m = f[idx].mon / g[0].mon;
      Vec next;
      next.reserve(f.size() + g.size());
      next.insert(next.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(idx));
      merge_sub(next, f, idx + 1, c, m, g);
      f = std::move(next);
    }
    return f;
  }

  void make_monic(Vec& v) const {
    if (v.empty() || field_.is_one(v[0].coef)) return;
    Scalar inv = field_.inv(v[0].coef);
    for (auto& t : v) t.coef = field_.mul(t.coef, inv);
  }

  // Gebauer-Moeller update with the new monic element h.
  void add(Vec h) {
    const std::size_t k = elems_.size();
    const std::uint32_t pos = h[0].pos;
    const Monomial& lead = h[0].mon;
    const bool rank_one = order_.shifts.size() == 1;

    std::vector<Pair> candidates;
    for (std::size_t i : active_[pos]) {
      Monomial l = elems_[i][0].mon.lcm(lead);
      candidates.push_back(Pair{i, k, l, static_cast<int>(l.degree()) + order_.shifts[pos]});
    }
    auto coprime = [&](const Pair& p) { return rank_one && elems_[p.i][0].mon.coprime(lead); };
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (const Pair& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (elems_[p.i][0].pos != pos || !lead.divides(p.lcm)) return false;
      Monomial li = elems_[p.i][0].mon.lcm(lead);
      Monomial lj = elems_[p.j][0].mon.lcm(lead);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const Pair& p : kept) {
      if (!coprime(p)) pairs_.push_back(p);
    }

    std::erase_if(active_[pos], [&](std::size_t i) { return lead.divides(elems_[i][0].mon); });
    active_[pos].push_back(k);
    elems_.push_back(std::move(h));
  }

  int next_pair_degree() const {
    int d = kInf;
    for (const Pair& p : pairs_) d = std::min(d, p.degree);
    return d;
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs_.size(); ++a) {
      const Pair& p = pairs_[a];
      const Pair& b = pairs_[best];
      if (std::tie(p.degree, p.j, p.i) < std::tie(b.degree, b.j, b.i)) best = a;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  bool has_pairs() const { return !pairs_.empty(); }

  Vec spoly(const Pair& p) const {
    const Vec& f = elems_[p.i];
    const Vec& g = elems_[p.j];
    Vec out;
    Monomial mf = p.lcm / f[0].mon;
    Monomial mg = p.lcm / g[0].mon;
    // mf*f with its leading term dropped, minus mg*g likewise.
    Vec scaled;
    scaled.reserve(f.size());
    for (std::size_t a = 1; a < f.size(); ++a) scaled.push_back(VTerm{f[a].mon * mf, f[a].pos, f[a].coef});
    out.reserve(f.size() + g.size());
    merge_sub(out, scaled, 0, field_.div(f[0].coef, g[0].coef), mg, g);
    return out;
  }

  // Reduced basis from the active elements, sorted by increasing lead.
  std::vector<Vec> reduced_basis() const {
    std::vector<std::size_t> idx;
    for (const auto& list : active_) idx.insert(idx.end(), list.begin(), list.end());
    Engine final_set(field_, order_);
    for (std::size_t i : idx) final_set.add_reducer(elems_[i]);
    std::vector<Vec> out;
    for (std::size_t i : idx) {
      const Vec& v = elems_[i];
      Vec tail(v.begin() + 1, v.end());
      tail = final_set.reduce_full(std::move(tail));
      Vec r;
      r.reserve(tail.size() + 1);
      r.push_back(v[0]);
      r.insert(r.end(), tail.begin(), tail.end());
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return order_.compare(a[0], b[0]) < 0; });
    return out;
  }

 private:
  std::size_t find_reducer(const VTerm& t) const {
    std::size_t best = kNone;
    for (std::size_t i : active_[t.pos]) {
      const Vec& g = elems_[i];
      if (g[0].mon.divides(t.mon) && (best == kNone || g.size() < elems_[best].size())) best = i;
    }
    return best;
  }

  // Appends f[from..] - c * m * g[1..] to out.
  void merge_sub(Vec& out, const Vec& f, std::size_t from, const Scalar& c, const Monomial& m,
                 const Vec& g) const {
    const Scalar nc = field_.neg(c);
    std::size_t i = from, j = 1;
    bool have = false;
    VTerm gt;
    while (i < f.size() || j < g.size() || have) {
      if (!have && j < g.size()) {
        gt = VTerm{g[j].mon * m, g[j].pos, field_.mul(nc, g[j].coef)};
        ++j;
        have = true;
      }
      if (!have) {
        out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(i), f.end());
        return;
      }
      if (i == f.size()) {
        out.push_back(gt);
        have = false;
        continue;
      }
      int cmp = order_.compare(f[i], gt);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back(gt);
        have = false;
      } else {
        Scalar s = field_.add(f[i].coef, gt.coef);
        if (!field_.is_zero(s)) out.push_back(VTerm{gt.mon, gt.pos, s});
        ++i;
        have = false;
      }
    }
  }

  const Field& field_;
  const ModuleOrder& order_;
  std::vector<Vec> elems_;
  std::vector<std::vector<std::size_t>> active_;
  std::vector<Pair> pairs_;
};

bool vec_homogeneous(const ModuleOrder& order, const Vec& v) {
  for (const auto& t : v) {
    if (order.degree(t) != order.degree(v[0])) return false;
  }
  return true;
}

void sort_vec(const ModuleOrder& order, Vec& v) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return order.compare(a, b) > 0; });
}

}  // namespace

ModuleBasis module_groebner(const Field& field, const ModuleOrder& order, std::vector<Vec> inputs,
                            const GroebnerOptions& options) {
  for (const auto& v : inputs) {
    for (const auto& t : v) {
      if (t.pos >= order.shifts.size()) throw PreconditionError("module term position out of range");
    }
  }
  ModuleBasis result;
  result.homogeneous = std::all_of(inputs.begin(), inputs.end(),
                                   [&](const Vec& v) { return v.empty() || vec_homogeneous(order, v); });
  Engine engine(field, order);

  if (result.homogeneous) {
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!inputs[i].empty()) queue.push_back(i);
    }
    std::stable_sort(queue.begin(), queue.end(), [&](std::size_t a, std::size_t b) {
      return order.degree(inputs[a][0]) < order.degree(inputs[b][0]);
    });
    std::size_t next = 0;
    while (true) {
      int dp = engine.next_pair_degree();
      int di = next < queue.size() ? order.degree(inputs[queue[next]][0]) : kInf;
      int d = std::min(dp, di);
      if (d == kInf) break;
      if (options.degree_limit >= 0 && d > options.degree_limit) {
        result.truncated = true;
        break;
      }
      if (dp <= di) {
        Vec s = engine.reduce_full(engine.spoly(engine.pop_pair()));
        if (s.empty()) continue;
        engine.make_monic(s);
        engine.add(std::move(s));
      } else {
        std::size_t idx = queue[next++];
        Vec f = engine.reduce_full(inputs[idx]);
        if (f.empty()) continue;
        result.minimal_inputs.push_back(idx);
        engine.make_monic(f);
        engine.add(std::move(f));
      }
    }
    std::sort(result.minimal_inputs.begin(), result.minimal_inputs.end());
  } else {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      Vec f = engine.reduce_full(inputs[i]);
      if (f.empty()) continue;
      engine.make_monic(f);
      engine.add(std::move(f));
    }
    while (engine.has_pairs()) {
      Vec s = engine.reduce_full(engine.spoly(engine.pop_pair()));
      if (s.empty()) continue;
      engine.make_monic(s);
      engine.add(std::move(s));
    }
  }
  result.elements = engine.reduced_basis();
  return result;
}

Vec module_normal_form(const Field& field, const ModuleOrder& order, const Vec& f,
                       std::span<const Vec> basis) {
  Engine engine(field, order);
  for (const auto& g : basis) engine.add_reducer(g);
  return engine.reduce_full(f);
}

Vec to_vec(const Polynomial& p, std::uint32_t pos) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back(VTerm{t.mon, pos, t.coef});
  return v;
}

Polynomial component(const Vec& v, std::uint32_t pos, const Ring& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.pos == pos) terms.push_back(Term{t.mon, t.coef});
  }
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> elements, bool reduced, bool truncated)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced), truncated_(truncated) {
  for (const auto& p : elements_) vecs_.push_back(to_vec(p));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.ring().nvars != ring_.nvars || !(p.ring().field == ring_.field)) {
    throw ContextMismatch("normal form of a polynomial from another ring");
  }
  Polynomial q = p.ring().order == ring_.order ? p : p.reordered(ring_);
  Vec r = module_normal_form(ring_.field, ModuleOrder::for_ideal(ring_.order), to_vec(q), vecs_);
  Polynomial out = component(r, 0, ring_);
  return p.ring().order == ring_.order ? out : out.reordered(p.ring());
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : elements_) out.push_back(p.leading().mon);
  return out;
}

GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> gens, const GroebnerOptions& options) {
  std::vector<Vec> inputs;
  for (const auto& g : gens) {
    if (g.ring().nvars != ring.nvars || !(g.ring().field == ring.field)) {
      throw ContextMismatch("generator from another ring: " + g.ring().describe() + " vs " + ring.describe());
    }
    inputs.push_back(to_vec(g.ring().order == ring.order ? g : g.reordered(ring)));
  }
  ModuleBasis mb = module_groebner(ring.field, ModuleOrder::for_ideal(ring.order), std::move(inputs), options);
  std::vector<Polynomial> elems;
  for (const auto& v : mb.elements) elems.push_back(component(v, 0, ring));
  return GroebnerBasis(ring, std::move(elems), true, mb.truncated);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) { return basis.normal_form(p); }

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::size_t k) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();
  if (k == 0) {
    auto gb = buchberger(ring, gens);
    return {gb.elements().begin(), gb.elements().end()};
  }
  if (k > ring.nvars) throw PreconditionError("cannot eliminate more variables than the ring has");
  Ring elim = ring.with_order(MonomialOrder::elimination(k));
  auto gb = buchberger(elim, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    if (g.leading().mon.partial_degree(0, k) == 0) out.push_back(g.reordered(ring));
  }
  return out;
}

std::vector<Polynomial> minimal_generators(std::span<const Polynomial> gens) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();
  std::vector<Vec> inputs;
  int top = 0;
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree();
    if (!d) throw PreconditionError("minimal generators need homogeneous input");
    top = std::max(top, *d);
    inputs.push_back(to_vec(g.ring().order == ring.order ? g : g.reordered(ring)));
  }
  GroebnerOptions opts;
  opts.degree_limit = top;
  ModuleBasis mb = module_groebner(ring.field, ModuleOrder::for_ideal(ring.order), std::move(inputs), opts);
  std::vector<Polynomial> out;
  for (std::size_t i : mb.minimal_inputs) out.push_back(gens[i]);
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const Ring& ring = basis.ring();
  const Field& f = ring.field;
  auto elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Term& a = elems[i].leading();
      const Term& b = elems[j].leading();
      Monomial l = a.mon.lcm(b.mon);
      Polynomial s = elems[i].times_monomial(l / a.mon, f.inv(a.coef)) -
                     elems[j].times_monomial(l / b.mon, f.inv(b.coef));
      if (!basis.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

bool ModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> ModuleElement::degree() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    auto h = components[i].homogeneous_degree();
    if (!h) return std::nullopt;
    int v = *h + shifts[i];
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d ? d : std::optional<int>(kAnyDegree);
}

namespace {

const Ring* ring_of(std::span<const ModuleElement> vectors) {
  for (const auto& v : vectors) {
    if (!v.components.empty()) return &v.components.front().ring();
  }
  return nullptr;
}

Vec element_to_vec(const ModuleOrder& order, const ModuleElement& e, std::uint32_t offset = 0) {
  Vec v;
  for (std::size_t i = 0; i < e.components.size(); ++i) {
    for (const auto& t : e.components[i].terms()) {
      v.push_back(VTerm{t.mon, static_cast<std::uint32_t>(i + offset), t.coef});
    }
  }
  sort_vec(order, v);
  return v;
}

ModuleElement vec_to_element(const Vec& v, std::size_t rank, std::uint32_t offset, const Ring& ring,
                             const std::vector<int>& shifts) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps[t.pos - offset].push_back(Term{t.mon, t.coef});
  ModuleElement e;
  e.shifts = shifts;
  for (auto& c : comps) e.components.push_back(Polynomial::from_sorted_terms(ring, std::move(c)));
  return e;
}

}  // namespace

std::vector<ModuleElement> minimal_generators(std::span<const ModuleElement> vectors) {
  const Ring* ring = ring_of(vectors);
  if (ring == nullptr) return {};
  const auto& shifts = vectors.front().shifts;
  ModuleOrder order{ring->order, shifts, 0, false};
  std::vector<Vec> inputs;
  int top = 0;
  for (const auto& v : vectors) {
    if (v.shifts != shifts) throw PreconditionError("module elements with different shifts");
    auto d = v.degree();
    if (!d) throw PreconditionError("minimal generators need homogeneous module elements");
    top = std::max(top, *d);
    inputs.push_back(element_to_vec(order, v));
  }
  GroebnerOptions opts;
  opts.degree_limit = top;
  ModuleBasis mb = module_groebner(ring->field, order, std::move(inputs), opts);
  std::vector<ModuleElement> out;
  for (std::size_t i : mb.minimal_inputs) out.push_back(vectors[i]);
  return out;
}

std::vector<ModuleElement> syzygies(std::span<const ModuleElement> vectors) {
  const Ring* ring = ring_of(vectors);
  if (ring == nullptr || vectors.empty()) return {};
  const std::size_t r = vectors.front().rank();
  const auto& shifts = vectors.front().shifts;
  const std::size_t m = vectors.size();
  std::vector<int> degrees;
  for (const auto& v : vectors) {
    if (v.rank() != r || v.shifts != shifts) throw PreconditionError("syzygy input of mixed ranks or shifts");
    auto d = v.degree();
    if (!d) throw PreconditionError("syzygies need homogeneous input");
    if (*d == kAnyDegree) throw PreconditionError("syzygies of a zero vector");
    degrees.push_back(*d);
  }
  std::vector<int> all_shifts = shifts;
  all_shifts.insert(all_shifts.end(), degrees.begin(), degrees.end());
  ModuleOrder order{ring->order, all_shifts, static_cast<std::uint32_t>(r), false};
  std::vector<Vec> inputs;
  for (std::size_t i = 0; i < m; ++i) {
    Vec w = element_to_vec(order, vectors[i]);
    w.push_back(VTerm{Monomial(ring->nvars), static_cast<std::uint32_t>(r + i), ring->field.one()});
    sort_vec(order, w);
    inputs.push_back(std::move(w));
  }
  ModuleBasis mb = module_groebner(ring->field, order, std::move(inputs));
  std::vector<ModuleElement> syz;
  for (const auto& v : mb.elements) {
    if (v[0].pos >= r) syz.push_back(vec_to_element(v, m, static_cast<std::uint32_t>(r), *ring, degrees));
  }
  return minimal_generators(syz);
}

}  // namespace detlab
