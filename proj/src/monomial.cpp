#include "detlab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "detlab/errors.hpp"

namespace detlab {

namespace {

int revlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
  }
  return 0;
}

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = a.partial_degree(begin, end);
  unsigned db = b.partial_degree(begin, end);
  if (da != db) return da < db ? -1 : 1;
  return revlex_range(a, b, begin, end);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw ContextMismatch("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) {
    if (exponents[i] > std::numeric_limits<Exponent>::max()) {
      throw std::overflow_error("exponent overflow");
    }
    exp_[i] = static_cast<Exponent>(exponents[i]);
  }
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw PreconditionError("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
  exp_[i] = static_cast<Exponent>(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) mask_ |= (1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > std::numeric_limits<Exponent>::max()) {
    throw std::overflow_error("monomial degree overflow");
  }
  Monomial r(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

unsigned Monomial::partial_degree(std::size_t begin, std::size_t end) const {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exp_[i];
  return d;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Enumerate compositions of d recursively over the first variable.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(nvars, e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw ContextMismatch("comparing monomials over different variable counts");
  return compare_unchecked(a, b);
}

int MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return revlex_range(a, b, 0, n);
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::elimination: {
      std::size_t k = std::min(block_, n);
      int c = degrevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return degrevlex_range(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::lex:
      return "lex";
    case Kind::elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace detlab
