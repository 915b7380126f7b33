#include "detlab/field.hpp"

#include <numeric>
#include <stdexcept>

#include "detlab/errors.hpp"

namespace detlab {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) {
    throw std::overflow_error("rational coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Scalar make_fraction(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Scalar{0, 1};
  __int128 g = gcd128(n, d);
  return Scalar{narrow(n / g), narrow(d / g)};
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!detlab::is_prime(p) || p >= (1u << 31)) {
    throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
  }
  return Field(Kind::prime, p);
}

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::prime) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar{r, 1};
  }
  return Scalar{v, 1};
}

Scalar Field::from_fraction(std::int64_t n, std::int64_t d) const {
  if (kind_ == Kind::prime) return div(from_int(n), from_int(d));
  return make_fraction(n, d);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::rationals) return make_fraction(a.den, a.num);
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.num;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return Scalar{t, 1};
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = one();
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return result;
}

Scalar Field::rat_add(const Scalar& a, const Scalar& b) const {
  __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  return make_fraction(n, d);
}

Scalar Field::rat_mul(const Scalar& a, const Scalar& b) const {
  return make_fraction(static_cast<__int128>(a.num) * b.num,
                       static_cast<__int128>(a.den) * b.den);
}

Scalar Field::random_nonzero(std::mt19937_64& rng, bool avoid_one) const {
  if (kind_ == Kind::prime) {
    std::uniform_int_distribution<std::int64_t> dist(avoid_one ? 2 : 1, p_ - 1);
    return Scalar{dist(rng), 1};
  }
  std::uniform_int_distribution<std::int64_t> dist(avoid_one ? 2 : 1, 97);
  std::int64_t v = dist(rng);
  return Scalar{(rng() & 1u) && !avoid_one ? -v : v, 1};
}

std::int64_t Field::symmetric_lift(const Scalar& a) const {
  if (kind_ == Kind::rationals) {
    if (a.den != 1) throw PreconditionError("non-integral rational has no integer lift");
    return a.num;
  }
  return a.num > static_cast<std::int64_t>(p_ / 2) ? a.num - p_ : a.num;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::prime) return std::to_string(symmetric_lift(a));
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace detlab
