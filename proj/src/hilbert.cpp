#include "detlab/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "detlab/errors.hpp"

namespace detlab {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if ((seen & g.support()) != 0) return false;
    seen |= g.support();
  }
  return true;
}

IntPoly numerator(std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  if (pairwise_coprime(gens)) {
    IntPoly out{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      out = multiply(out, f);
    }
    return out;
  }
  // Pivot on the variable occurring in the most generators.
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens) {
    for (std::uint32_t m = g.support(); m != 0; m &= m - 1) ++count[std::countr_zero(m)];
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const std::size_t n = gens.front().nvars();
  Monomial x = Monomial::variable(n, var);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g[var] > 0 ? g / x : g);

  IntPoly out = numerator(std::move(plus));
  IntPoly q = numerator(std::move(colon));
  add_shifted(out, q, 1);
  trim(out);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

int min_hitting_set(const std::vector<std::uint32_t>& sets, std::uint32_t chosen, int size, int best) {
  if (size >= best) return best;
  const std::uint32_t* pick = nullptr;
  for (const auto& s : sets) {
    if ((s & chosen) != 0) continue;
    if (pick == nullptr || std::popcount(s) < std::popcount(*pick)) pick = &s;
  }
  if (pick == nullptr) return size;
  if (size + 1 >= best) return best;
  for (std::uint32_t m = *pick; m != 0; m &= m - 1) {
    best = min_hitting_set(sets, chosen | (m & (~m + 1)), size + 1, best);
  }
  return best;
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

HilbertSeries::HilbertSeries(IntPoly numerator, std::size_t nvars)
    : numerator_(std::move(numerator)), nvars_(nvars) {
  trim(numerator_);
  h_ = numerator_;
  if (h_.empty()) {
    dim_ = -1;
    return;
  }
  dim_ = static_cast<int>(nvars_);
  // Divide by (1 - T) while h(1) == 0.
  while (dim_ > 0) {
    std::int64_t at_one = 0;
    for (auto c : h_) at_one += c;
    if (at_one != 0) break;
    IntPoly q(h_.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < h_.size(); ++k) {
      run += h_[k];
      q[k] = run;
    }
    h_ = std::move(q);
    trim(h_);
    --dim_;
  }
}

std::int64_t HilbertSeries::degree() const {
  std::int64_t s = 0;
  for (auto c : h_) s += c;
  return s;
}

std::int64_t HilbertSeries::function(int d) const {
  if (d < 0 || dim_ < 0) return 0;
  if (dim_ == 0) return static_cast<std::size_t>(d) < h_.size() ? h_[d] : 0;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < h_.size() && static_cast<int>(k) <= d; ++k) {
    total += h_[k] * binomial(d - static_cast<std::int64_t>(k) + dim_ - 1, dim_ - 1);
  }
  return total;
}

RatPoly HilbertSeries::polynomial() const {
  if (dim_ <= 0) return {};
  RatPoly total(dim_, Rational(0));
  long long fact = 1;
  for (int j = 1; j < dim_; ++j) fact *= j;
  for (std::size_t k = 0; k < h_.size(); ++k) {
    if (h_[k] == 0) continue;
    // prod_{j=1}^{dim-1} (t - k + j)
    RatPoly prod{Rational(1)};
    for (int j = 1; j < dim_; ++j) {
      RatPoly next(prod.size() + 1, Rational(0));
      long long c = j - static_cast<long long>(k);
      for (std::size_t a = 0; a < prod.size(); ++a) {
        next[a] += prod[a] * c;
        next[a + 1] += prod[a];
      }
      prod = std::move(next);
    }
    for (std::size_t a = 0; a < prod.size(); ++a) total[a] += prod[a] * Rational(h_[k], fact);
  }
  while (!total.empty() && total.back() == Rational(0)) total.pop_back();
  return total;
}

std::string HilbertSeries::to_string() const {
  return "(" + detlab::to_string(numerator_) + ") / (1-T)^" + std::to_string(nvars_);
}

HilbertSeries monomial_hilbert_series(std::span<const Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw ContextMismatch("monomial over wrong variable count");
  }
  return HilbertSeries(numerator(std::vector<Monomial>(gens.begin(), gens.end())), nvars);
}

int monomial_krull_dimension(std::span<const Monomial> gens, std::size_t nvars) {
  auto minimal = minimalize_monomials(std::vector<Monomial>(gens.begin(), gens.end()));
  if (!minimal.empty() && minimal.front().is_one()) return -1;
  std::vector<std::uint32_t> sets;
  for (const auto& g : minimal) sets.push_back(g.support());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  int cover = min_hitting_set(sets, 0, 0, static_cast<int>(nvars) + 1);
  return static_cast<int>(nvars) - cover;
}

Rational evaluate(const RatPoly& p, long long t) {
  Rational acc(0);
  for (std::size_t k = p.size(); k > 0; --k) acc = acc * t + p[k - 1];
  return acc;
}

namespace {

void put(std::ostream& out, std::int64_t c) { out << c; }
void put(std::ostream& out, const Rational& c) {
  out << c.numerator();
  if (c.denominator() != 1) out << "/" << c.denominator();
}

template <typename C>
std::string poly_string(const std::vector<C>& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k > 0; --k) {
    C c = p[k - 1];
    if (c == C(0)) continue;
    bool neg = c < C(0);
    C a = neg ? -c : c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::size_t e = k - 1;
    if (e == 0 || a != C(1)) put(out, a);
    if (e > 0) {
      if (a != C(1)) out << "*";
      out << var;
      if (e > 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string to_string(const RatPoly& p, const std::string& var) { return poly_string(p, var); }
std::string to_string(const IntPoly& p, const std::string& var) { return poly_string(p, var); }

}  // namespace detlab
