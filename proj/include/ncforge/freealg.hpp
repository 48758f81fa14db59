#ifndef NCFORGE_FREEALG_HPP
#define NCFORGE_FREEALG_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncforge/field.hpp"

namespace ncforge {

using Letter = std::uint8_t;

/// Monomial of the free algebra: a sequence of generator indices.
/// Ordered degree-lexicographically (shorter first, then by letter index).
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  static Word letter(Letter x) { return Word{x}; }

  std::size_t size() const { return s_.size(); }
  std::size_t degree() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(s_[i]); }

  Word subword(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }
  bool has_prefix(const Word& w) const;
  bool has_suffix(const Word& w) const;
  /// Position of the first occurrence of `factor` at or after `from`.
  std::optional<std::size_t> find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor).has_value(); }

  Word& operator+=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  Word& push_back(Letter x) {
    s_.push_back(static_cast<char>(x));
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const { return s_ == o.s_; }

  const std::string& key() const { return s_; }

private:
  std::string s_;
};

/// Total order on words: by length, then lexicographically by generator order.
std::strong_ordering compare_deglex(const Word& u, const Word& v);

class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered, distinct generator names; index order is the monomial order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<const char*> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> index_of(std::string_view name) const;
  Letter at(std::string_view name) const;

  /// Parses a word of juxtaposed generator names, longest name first.
  Word word(std::string_view text) const;
  std::string format(const Word& w) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> names_;
};

template <Field F>
class NcPoly;

/// A coefficient field together with a generator alphabet. Polynomials keep a
/// shared pointer to their algebra.
template <Field F>
class FreeAlgebra : public std::enable_shared_from_this<FreeAlgebra<F>> {
  struct Token {};

public:
  using Elem = typename F::Elem;

  FreeAlgebra(Token, F field, Alphabet alphabet)
      : field_(std::move(field)), alphabet_(std::move(alphabet)) {}

  static std::shared_ptr<const FreeAlgebra> make(F field, Alphabet alphabet) {
    return std::make_shared<const FreeAlgebra>(Token{}, std::move(field), std::move(alphabet));
  }

  const F& field() const { return field_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_generators() const { return alphabet_.size(); }

  NcPoly<F> zero() const;
  NcPoly<F> one() const;
  NcPoly<F> scalar(const Elem& c) const;
  NcPoly<F> scalar(std::int64_t c) const { return scalar(field_.from_int(c)); }
  NcPoly<F> gen(Letter i) const;
  NcPoly<F> gen(std::string_view name) const { return gen(alphabet_.at(name)); }
  NcPoly<F> monomial(const Word& w, const Elem& c) const;
  NcPoly<F> monomial(const Word& w) const { return monomial(w, field_.one()); }

  bool same_as(const FreeAlgebra& o) const {
    return this == &o || (field_ == o.field_ && alphabet_ == o.alphabet_);
  }

private:
  F field_;
  Alphabet alphabet_;
};

template <Field F>
using AlgebraPtr = std::shared_ptr<const FreeAlgebra<F>>;

/// Element of the free algebra: sparse map from words to nonzero scalars.
template <Field F>
class NcPoly {
public:
  using Elem = typename F::Elem;
  using Terms = std::map<Word, Elem>;

  NcPoly() = default;
  explicit NcPoly(AlgebraPtr<F> ring) : ring_(std::move(ring)) {}
  NcPoly(AlgebraPtr<F> ring, Terms terms);

  const AlgebraPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest word in deglex order; requires a nonzero polynomial.
  const Word& leading_word() const;
  const Elem& leading_coeff() const;
  std::size_t degree() const;
  Elem coeff(const Word& w) const;
  bool is_scalar() const;

  /// Accumulates c*w, dropping the term if it cancels.
  void add_term(const Word& w, const Elem& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Elem& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const Elem& c, NcPoly p) { return p *= c; }
  friend NcPoly operator*(NcPoly p, const Elem& c) { return p *= c; }
  NcPoly operator-() const;
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) { return multiply(a, b); }

  /// Free-algebra product; throws AlphabetMismatch across algebras.
  static NcPoly multiply(const NcPoly& a, const NcPoly& b);

  bool operator==(const NcPoly& o) const;

  std::string to_string() const;

private:
  void check_ring(const NcPoly& o) const;

  AlgebraPtr<F> ring_;
  Terms terms_;
};

template <Field F>
NcPoly<F> pow(const NcPoly<F>& p, unsigned n);

/// Algebra endomorphism of the free algebra given by generator images.
template <Field F>
struct MorphismSpec {
  std::vector<NcPoly<F>> images;

  static MorphismSpec identity(const AlgebraPtr<F>& ring);
};

/// (sigma, id)-skew derivation: d(xw) = d(x) w + sigma(x) d(w).
template <Field F>
struct SkewDerivationSpec {
  MorphismSpec<F> sigma;
  std::vector<NcPoly<F>> images;
};

template <Field F>
NcPoly<F> apply_morphism(const MorphismSpec<F>& m, const NcPoly<F>& p);

/// (outer o inner): apply `inner` first.
template <Field F>
MorphismSpec<F> compose(const MorphismSpec<F>& outer, const MorphismSpec<F>& inner);

template <Field F>
NcPoly<F> apply_skew_derivation(const SkewDerivationSpec<F>& d, const NcPoly<F>& p);

}  // namespace ncforge

#endif  // NCFORGE_FREEALG_HPP
