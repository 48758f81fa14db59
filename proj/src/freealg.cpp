#include "ncforge/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace ncforge {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter x : letters) s_.push_back(static_cast<char>(x));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.s_ = s_.substr(pos, len);
  return w;
}

bool Word::has_prefix(const Word& w) const {
  return w.size() <= size() && s_.compare(0, w.size(), w.s_) == 0;
}

bool Word::has_suffix(const Word& w) const {
  return w.size() <= size() && s_.compare(size() - w.size(), w.size(), w.s_) == 0;
}

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
  auto pos = s_.find(factor.s_, from);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = s_.size() <=> o.s_.size(); c != 0) return c;
  int r = s_.compare(o.s_);
  return r < 0 ? std::strong_ordering::less
               : (r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) { return u <=> v; }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
      }
    }
  }
}

Alphabet::Alphabet(std::initializer_list<const char*> names)
    : Alphabet(std::vector<std::string>(names.begin(), names.end())) {}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Word Alphabet::word(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best_len = n.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0) {
      throw std::invalid_argument("cannot parse word '" + std::string(text) + "'");
    }
    w.push_back(best);
    pos += best_len;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  bool short_names = std::all_of(names_.begin(), names_.end(),
                                 [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !short_names) out += '*';
    out += names_.at(w[i]);
  }
  return out;
}

template <Field F>
NcPoly<F> FreeAlgebra<F>::zero() const {
  return NcPoly<F>(this->shared_from_this());
}

template <Field F>
NcPoly<F> FreeAlgebra<F>::one() const {
  return monomial(Word{}, field_.one());
}

template <Field F>
NcPoly<F> FreeAlgebra<F>::scalar(const Elem& c) const {
  return monomial(Word{}, c);
}

template <Field F>
NcPoly<F> FreeAlgebra<F>::gen(Letter i) const {
  if (i >= alphabet_.size()) throw std::out_of_range("generator index out of range");
  return monomial(Word::letter(i), field_.one());
}

template <Field F>
NcPoly<F> FreeAlgebra<F>::monomial(const Word& w, const Elem& c) const {
  NcPoly<F> p(this->shared_from_this());
  p.add_term(w, c);
  return p;
}

template <Field F>
NcPoly<F>::NcPoly(AlgebraPtr<F> ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  const F& f = ring_->field();
  std::erase_if(terms_, [&](const auto& kv) { return f.is_zero(kv.second); });
}

template <Field F>
const Word& NcPoly<F>::leading_word() const {
  if (terms_.empty()) throw std::logic_error("leading word of zero polynomial");
  return terms_.rbegin()->first;
}

template <Field F>
const typename NcPoly<F>::Elem& NcPoly<F>::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

template <Field F>
std::size_t NcPoly<F>::degree() const {
  return terms_.empty() ? 0 : leading_word().size();
}

template <Field F>
typename NcPoly<F>::Elem NcPoly<F>::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field().zero() : it->second;
}

template <Field F>
bool NcPoly<F>::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

template <Field F>
void NcPoly<F>::add_term(const Word& w, const Elem& c) {
  const F& f = field();
  if (f.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms_.erase(it);
  }
}

template <Field F>
void NcPoly<F>::check_ring(const NcPoly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) {
    throw AlphabetMismatch("polynomials live in different free algebras");
  }
}

template <Field F>
NcPoly<F>& NcPoly<F>::operator+=(const NcPoly& o) {
  check_ring(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

template <Field F>
NcPoly<F>& NcPoly<F>::operator-=(const NcPoly& o) {
  check_ring(o);
  const F& f = field();
  for (const auto& [w, c] : o.terms_) add_term(w, f.neg(c));
  return *this;
}

template <Field F>
NcPoly<F>& NcPoly<F>::operator*=(const Elem& c) {
  const F& f = field();
  if (f.is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v = f.mul(v, c);
  return *this;
}

template <Field F>
NcPoly<F> NcPoly<F>::operator-() const {
  NcPoly r = *this;
  const F& f = field();
  for (auto& [w, v] : r.terms_) v = f.neg(v);
  return r;
}

template <Field F>
NcPoly<F> NcPoly<F>::multiply(const NcPoly& a, const NcPoly& b) {
  a.check_ring(b);
  const F& f = a.field();
  NcPoly r(a.ring_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) r.add_term(u + v, f.mul(cu, cv));
  }
  return r;
}

template <Field F>
bool NcPoly<F>::operator==(const NcPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty()) check_ring(o);
  return terms_ == o.terms_;
}

template <Field F>
std::string NcPoly<F>::to_string() const {
  if (terms_.empty()) return "0";
  const F& f = field();
  const Alphabet& alpha = ring_->alphabet();
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string cs = display(f, c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      out << cs;
    } else {
      if (cs != "1") out << cs << '*';
      out << alpha.format(w);
    }
  }
  return out.str();
}

template <Field F>
NcPoly<F> pow(const NcPoly<F>& p, unsigned n) {
  NcPoly<F> r = p.ring()->one();
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

template <Field F>
MorphismSpec<F> MorphismSpec<F>::identity(const AlgebraPtr<F>& ring) {
  MorphismSpec m;
  for (std::size_t i = 0; i < ring->num_generators(); ++i) {
    m.images.push_back(ring->gen(static_cast<Letter>(i)));
  }
  return m;
}

template <Field F>
NcPoly<F> apply_morphism(const MorphismSpec<F>& m, const NcPoly<F>& p) {
  const auto& ring = p.ring();
  if (m.images.size() != ring->num_generators()) {
    throw AlphabetMismatch("morphism image count does not match alphabet");
  }
  NcPoly<F> result = ring->zero();
  for (const auto& [w, c] : p.terms()) {
    NcPoly<F> img = ring->scalar(c);
    for (std::size_t i = 0; i < w.size(); ++i) img = img * m.images[w[i]];
    result += img;
  }
  return result;
}

template <Field F>
MorphismSpec<F> compose(const MorphismSpec<F>& outer, const MorphismSpec<F>& inner) {
  MorphismSpec<F> m;
  for (const auto& img : inner.images) m.images.push_back(apply_morphism(outer, img));
  return m;
}

template <Field F>
NcPoly<F> apply_skew_derivation(const SkewDerivationSpec<F>& d, const NcPoly<F>& p) {
  const auto& ring = p.ring();
  if (d.images.size() != ring->num_generators() ||
      d.sigma.images.size() != ring->num_generators()) {
    throw AlphabetMismatch("derivation image count does not match alphabet");
  }
  // d(x1...xn) = sum_k sigma(x1..x_{k-1}) d(x_k) x_{k+1}..x_n
  NcPoly<F> result = ring->zero();
  for (const auto& [w, c] : p.terms()) {
    NcPoly<F> left = ring->scalar(c);
    for (std::size_t k = 0; k < w.size(); ++k) {
      result += left * d.images[w[k]] * ring->monomial(w.subword(k + 1));
      left = left * d.sigma.images[w[k]];
    }
  }
  return result;
}

#define NCFORGE_INSTANTIATE(F)                                                          \
  template class FreeAlgebra<F>;                                                        \
  template class NcPoly<F>;                                                             \
  template struct MorphismSpec<F>;                                                      \
  template NcPoly<F> pow(const NcPoly<F>&, unsigned);                                   \
  template NcPoly<F> apply_morphism(const MorphismSpec<F>&, const NcPoly<F>&);          \
  template MorphismSpec<F> compose(const MorphismSpec<F>&, const MorphismSpec<F>&);     \
  template NcPoly<F> apply_skew_derivation(const SkewDerivationSpec<F>&, const NcPoly<F>&);

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
