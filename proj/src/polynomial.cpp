#include "detlab/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "detlab/errors.hpp"

namespace detlab {

Ring::Ring(std::size_t n, Field f, MonomialOrder o) : nvars(n), field(f), order(o) {
  if (n > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

std::string Ring::describe() const {
  std::string f = field.is_prime() ? "F_" + std::to_string(field.characteristic()) : "QQ";
  return f + "[x0..x" + std::to_string(nvars == 0 ? 0 : nvars - 1) + "] " + order.name();
}

Polynomial Polynomial::constant(const Ring& ring, const Scalar& c) {
  Polynomial p(ring);
  if (!ring.field.is_zero(c)) p.terms_.push_back(Term{Monomial(ring.nvars), c});
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  return constant(ring, ring.field.from_int(c));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.nvars) throw PreconditionError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back(Term{Monomial::variable(ring.nvars, index), ring.field.one()});
  return p;
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, const Scalar& c) {
  if (m.nvars() != ring.nvars) throw ContextMismatch("monomial over wrong variable count");
  Polynomial p(ring);
  if (!ring.field.is_zero(c)) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const auto& order = ring.order;
  for (const auto& t : terms) {
    if (t.mon.nvars() != ring.nvars) throw ContextMismatch("term over wrong variable count");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.mon, b.mon) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef = ring.field.add(p.terms_.back().coef, t.coef);
    } else {
      if (!p.terms_.empty() && ring.field.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      p.terms_.push_back(t);
    }
  }
  if (!p.terms_.empty() && ring.field.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return kAnyDegree;
  unsigned d = terms_.front().mon.degree();
  for (const auto& t : terms_) {
    if (t.mon.degree() != d) return std::nullopt;
  }
  return static_cast<int>(d);
}

int Polynomial::total_degree() const {
  int d = kAnyDegree;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mon.degree()));
  return d;
}

bool Polynomial::is_linear_form() const {
  auto d = homogeneous_degree();
  return d && *d == 1;
}

Scalar Polynomial::linear_coefficient(std::size_t i) const {
  return coefficient(Monomial::variable(ring_.nvars, i));
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mon == m) return t.coef;
  }
  return ring_.field.zero();
}

void Polynomial::check_context(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw ContextMismatch("polynomials live in different rings: " + ring_.describe() + " vs " +
                          other.ring_.describe());
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_context(other);
  const auto& f = ring_.field;
  const auto& order = ring_.order;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order.compare_unchecked(terms_[i].mon, other.terms_[j].mon);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Scalar s = f.add(terms_[i].coef, other.terms_[j].coef);
      if (!f.is_zero(s)) out.push_back(Term{terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), other.terms_.begin() + static_cast<std::ptrdiff_t>(j), other.terms_.end());
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coef = ring_.field.neg(t.coef);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_context(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (other.size() == 1) return times_monomial(other.leading().mon, other.leading().coef);
  if (size() == 1) return other.times_monomial(leading().mon, leading().coef);
  std::vector<Term> prod;
  prod.reserve(size() * other.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      prod.push_back(Term{a.mon * b.mon, ring_.field.mul(a.coef, b.coef)});
    }
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (ring_.field.is_zero(c)) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coef = ring_.field.mul(t.coef, c);
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  if (ring_.field.is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mon * m, ring_.field.mul(t.coef, c)});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(leading().coef));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_.nvars) {
    throw ContextMismatch("substitution needs one image per variable");
  }
  if (images.empty()) return *this;
  const Ring& target = images.front().ring();
  for (const auto& img : images) {
    if (!(img.ring() == target)) throw ContextMismatch("substitution images live in different rings");
  }
  if (!(target.field == ring_.field)) throw ContextMismatch("substitution changes the field");
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(ring_.nvars);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coef);
    for (std::size_t i = 0; i < ring_.nvars && !prod.is_zero(); ++i) {
      if (t.mon[i] != 0) prod = prod * power(i, t.mon[i]);
    }
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::reordered(const Ring& target) const {
  if (target.nvars != ring_.nvars || !(target.field == ring_.field)) {
    throw ContextMismatch("reordering needs the same variables and field");
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm, const Ring& target) const {
  if (perm.size() != ring_.nvars) throw ContextMismatch("permutation length mismatch");
  if (!(target.field == ring_.field)) throw ContextMismatch("permutation changes the field");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.nvars);
    for (std::size_t i = 0; i < ring_.nvars; ++i) {
      if (t.mon[i] == 0) continue;
      if (perm[i] >= target.nvars) throw PreconditionError("permutation maps outside the target ring");
      m.set(perm[i], t.mon[i]);
    }
    out.push_back(Term{m, t.coef});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::change_field(const Field& field) const {
  Ring target = ring_.with_field(field);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = ring_.field.is_prime() || t.coef.den == 1
                   ? field.from_int(ring_.field.symmetric_lift(t.coef))
                   : field.from_fraction(t.coef.num, t.coef.den);
    out.push_back(Term{t.mon, c});
  }
  return from_terms(target, std::move(out));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_context(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rest = *this;
  std::vector<Term> quotient;
  const auto& lead = divisor.leading();
  Scalar inv = ring_.field.inv(lead.coef);
  while (!rest.is_zero()) {
    const auto& t = rest.leading();
    if (!lead.mon.divides(t.mon)) return std::nullopt;
    Term q{t.mon / lead.mon, ring_.field.mul(t.coef, inv)};
    quotient.push_back(q);
    rest = rest - divisor.times_monomial(q.mon, q.coef);
  }
  return from_terms(ring_, std::move(quotient));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& f = ring_.field;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = f.to_string(t.coef);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mon.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += t.mon.to_string();
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mon == b.terms_[i].mon) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial p = expression();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer literal too large");
      v = v * 10 + (text_[pos_++] - '0');
    }
    return v;
  }

  Polynomial expression() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negative) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  unsigned exponent() {
    if (!accept('^')) return 1;
    std::int64_t e = number();
    if (e > 65535) fail("exponent too large");
    return static_cast<unsigned>(e);
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner.pow(exponent());
    }
    if (c == 'x') {
      std::size_t start = pos_++;
      std::int64_t index = number();
      if (index < 0 || static_cast<std::size_t>(index) >= ring_.nvars) {
        pos_ = start;
        fail("variable x" + std::to_string(index) + " outside the ring (" +
             std::to_string(ring_.nvars) + " variables)");
      }
      Monomial m = Monomial::variable(ring_.nvars, static_cast<std::size_t>(index), exponent());
      return Polynomial::monomial(ring_, m, ring_.field.one());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = number();
      std::int64_t d = 1;
      if (accept('/')) {
        d = number();
        if (d == 0) fail("zero denominator");
      }
      Polynomial k = Polynomial::constant(ring_, ring_.field.from_fraction(n, d));
      return k.pow(exponent());
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line) {
  return Parser(text, ring, line).parse();
}

}  // namespace detlab
