#ifndef NCFORGE_FIELD_HPP
#define NCFORGE_FIELD_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncforge {

/// Raised for division by zero, unsupported characteristics and missing
/// roots of unity.
class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Characteristic plus a printable label. Characteristic 0 means QQ.
struct FieldSpec {
  std::uint64_t characteristic = 10009;
  std::string name = "fp:10009";

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals();
  /// Accepts "fp:<prime>" or "qq".
  static FieldSpec parse(std::string_view text);

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

/// Residue class modulo the field characteristic, canonical in [0, p).
struct Residue {
  std::uint64_t v = 0;
  auto operator<=>(const Residue&) const = default;
};

/// Arithmetic in F_p for primes 5 <= p < 2^31.
class PrimeField {
public:
  using Elem = Residue;

  explicit PrimeField(std::uint64_t p = 10009);

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::string name() const { return spec().name; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t n) const;
  Elem from_ratio(std::int64_t num, std::int64_t den) const;

  Elem add(Elem x, Elem y) const {
    std::uint64_t s = x.v + y.v;
    return {s >= p_ ? s - p_ : s};
  }
  Elem sub(Elem x, Elem y) const { return {x.v >= y.v ? x.v - y.v : x.v + p_ - y.v}; }
  Elem neg(Elem x) const { return {x.v == 0 ? 0 : p_ - x.v}; }
  Elem mul(Elem x, Elem y) const { return {(x.v * y.v) % p_}; }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;

  bool is_zero(Elem x) const { return x.v == 0; }
  bool is_one(Elem x) const { return x.v == 1; }

  /// Canonical residue as text.
  std::string to_string(Elem x) const;
  /// Symmetric representative in (-p/2, p/2], used for display.
  std::int64_t to_signed(Elem x) const;

  /// Smallest canonical zeta with zeta^2 + zeta + 1 = 0.
  Elem primitive_cube_root() const;
  /// Smaller of the two roots when s is a nonzero square (Tonelli-Shanks).
  std::optional<Elem> square_root(Elem s) const;
  /// Smallest canonical r with r^3 = s.
  std::optional<Elem> cube_root(Elem s) const;

  /// Uniform element; the sample set for Schwartz-Zippel bounds is all of F_p.
  Elem random(std::mt19937_64& rng) const { return {rng() % p_}; }
  std::uint64_t sample_size() const { return p_; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

/// Exact rational arithmetic via GMP.
class RationalField {
public:
  using Elem = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::string name() const { return "qq"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }
  Elem from_ratio(std::int64_t num, std::int64_t den) const;

  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const;
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
  Elem pow(const Elem& x, std::uint64_t e) const;

  bool is_zero(const Elem& x) const { return sgn(x) == 0; }
  bool is_one(const Elem& x) const { return x == 1; }

  std::string to_string(const Elem& x) const { return x.get_str(); }

  /// Always throws: QQ contains no primitive cube root of unity.
  Elem primitive_cube_root() const;
  /// Nonnegative rational root when both numerator and denominator are squares.
  std::optional<Elem> square_root(const Elem& s) const;
  std::optional<Elem> cube_root(const Elem& s) const;

  /// Integer drawn uniformly from [-2^15, 2^15).
  Elem random(std::mt19937_64& rng) const;
  std::uint64_t sample_size() const { return std::uint64_t{1} << 16; }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept Field = requires(const F f, typename F::Elem x, std::mt19937_64& rng) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(std::int64_t{1}) } -> std::same_as<typename F::Elem>;
  { f.add(x, x) } -> std::same_as<typename F::Elem>;
  { f.mul(x, x) } -> std::same_as<typename F::Elem>;
  { f.inv(x) } -> std::same_as<typename F::Elem>;
  { f.is_zero(x) } -> std::convertible_to<bool>;
  { f.to_string(x) } -> std::convertible_to<std::string>;
  { f.random(rng) } -> std::same_as<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// Human-oriented rendering; prime-field residues print symmetrically.
inline std::string display(const PrimeField& f, Residue x) {
  return std::to_string(f.to_signed(x));
}
inline std::string display(const RationalField& f, const mpq_class& x) {
  return f.to_string(x);
}

}  // namespace ncforge

#endif  // NCFORGE_FIELD_HPP
