#include "ncforge/field.hpp"

#include <algorithm>
#include <charconv>

namespace ncforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  return FieldSpec{p, "fp:" + std::to_string(p)};
}

FieldSpec FieldSpec::rationals() { return FieldSpec{0, "qq"}; }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.substr(0, 3) != "fp:") {
    throw FieldError("field must be 'qq' or 'fp:<prime>', got '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(3);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw FieldError("malformed characteristic in '" + std::string(text) + "'");
  }
  PrimeField check(p);  // validates
  return prime(p);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 5 || !is_prime(p)) {
    throw FieldError("characteristic must be a prime >= 5, got " + std::to_string(p));
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw FieldError("characteristic too large: " + std::to_string(p));
  }
}

PrimeField::Elem PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(r)};
}

PrimeField::Elem PrimeField::from_ratio(std::int64_t num, std::int64_t den) const {
  return div(from_int(num), from_int(den));
}

PrimeField::Elem PrimeField::inv(Elem x) const {
  if (x.v == 0) throw FieldError("division by zero in " + name());
  // extended Euclid on (x, p)
  std::int64_t a = static_cast<std::int64_t>(x.v), b = static_cast<std::int64_t>(p_);
  std::int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

PrimeField::Elem PrimeField::pow(Elem x, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::string PrimeField::to_string(Elem x) const { return std::to_string(x.v); }

std::int64_t PrimeField::to_signed(Elem x) const {
  if (x.v > p_ / 2) return static_cast<std::int64_t>(x.v) - static_cast<std::int64_t>(p_);
  return static_cast<std::int64_t>(x.v);
}

std::optional<PrimeField::Elem> PrimeField::square_root(Elem s) const {
  if (s.v == 0) return zero();
  if (pow(s, (p_ - 1) / 2) != one()) return std::nullopt;
  std::uint64_t q = p_ - 1;
  unsigned m = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++m;
  }
  Elem z{2};
  while (pow(z, (p_ - 1) / 2) == one()) z.v++;
  Elem c = pow(z, q);
  Elem t = pow(s, q);
  Elem r = pow(s, (q + 1) / 2);
  while (t != one()) {
    unsigned i = 0;
    Elem t2 = t;
    while (t2 != one()) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  Elem other = neg(r);
  return std::min(r, other);
}

PrimeField::Elem PrimeField::primitive_cube_root() const {
  if (p_ % 3 != 1) {
    throw FieldError("no primitive cube root of unity in " + name() + " (p mod 3 != 1)");
  }
  auto r = square_root(from_int(-3));
  // (-1 +- sqrt(-3)) / 2
  Elem half = inv(from_int(2));
  Elem z1 = mul(sub(*r, one()), half);
  Elem z2 = mul(sub(neg(*r), one()), half);
  return std::min(z1, z2);
}

std::optional<PrimeField::Elem> PrimeField::cube_root(Elem s) const {
  if (s.v == 0) return zero();
  if (p_ % 3 == 2) {
    // cubing is a bijection
    return pow(s, (2 * p_ - 1) / 3);
  }
  if (pow(s, (p_ - 1) / 3) != one()) return std::nullopt;

  // Adleman-Manders-Miller: p - 1 = 3^k * t with gcd(t, 3) = 1.
  std::uint64_t t = p_ - 1;
  unsigned k = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++k;
  }
  // 3u = 1 (mod t)
  std::uint64_t u = (t % 3 == 1) ? (2 * t + 1) / 3 : (t + 1) / 3;
  Elem r0 = pow(s, u);
  // z = r0^3 / s lies in the 3-Sylow subgroup; find h there with h^3 = 1 / z.
  Elem w = inv(mul(pow(r0, 3), inv(s)));

  Elem nonresidue{2};
  while (pow(nonresidue, (p_ - 1) / 3) == one()) nonresidue.v++;
  Elem g = pow(nonresidue, t);  // order exactly 3^k
  std::uint64_t order3 = 1;
  for (unsigned i = 0; i + 1 < k; ++i) order3 *= 3;
  Elem omega = pow(g, order3);  // order 3

  std::uint64_t log = 0, scale = 1;
  Elem g_inv = inv(g);
  for (unsigned i = 0; i < k; ++i) {
    Elem probe = mul(w, pow(g_inv, log));
    std::uint64_t e = 1;
    for (unsigned j = 0; j + 1 + i < k; ++j) e *= 3;
    probe = pow(probe, e);
    unsigned digit = 0;
    if (probe == omega) {
      digit = 1;
    } else if (probe == mul(omega, omega)) {
      digit = 2;
    }
    log += digit * scale;
    scale *= 3;
  }
  if (log % 3 != 0) return std::nullopt;
  Elem r = mul(r0, pow(g, log / 3));
  if (pow(r, 3) != s) return std::nullopt;
  Elem zeta = primitive_cube_root();
  Elem r1 = mul(r, zeta);
  Elem r2 = mul(r1, zeta);
  return std::min({r, r1, r2});
}

RationalField::Elem RationalField::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw FieldError("division by zero in qq");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

RationalField::Elem RationalField::inv(const Elem& x) const {
  if (sgn(x) == 0) throw FieldError("division by zero in qq");
  return 1 / x;
}

RationalField::Elem RationalField::pow(const Elem& x, std::uint64_t e) const {
  Elem r = 1, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RationalField::Elem RationalField::primitive_cube_root() const {
  throw FieldError("no primitive cube root of unity in qq");
}

namespace {

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<RationalField::Elem> RationalField::square_root(const Elem& s) const {
  if (sgn(s) < 0) return std::nullopt;
  auto n = exact_root(s.get_num(), 2);
  auto d = exact_root(s.get_den(), 2);
  if (!n || !d) return std::nullopt;
  return mpq_class(*n, *d);
}

std::optional<RationalField::Elem> RationalField::cube_root(const Elem& s) const {
  mpz_class num = s.get_num();
  bool negative = sgn(num) < 0;
  if (negative) num = -num;
  auto n = exact_root(num, 3);
  auto d = exact_root(s.get_den(), 3);
  if (!n || !d) return std::nullopt;
  mpq_class r(*n, *d);
  return negative ? mpq_class(-r) : r;
}

RationalField::Elem RationalField::random(std::mt19937_64& rng) const {
  long v = static_cast<long>(rng() % sample_size()) - static_cast<long>(sample_size() / 2);
  return mpq_class(v);
}

}  // namespace ncforge
