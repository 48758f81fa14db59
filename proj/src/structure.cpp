#include "ncforge/structure.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ncforge {

template <Field F>
AlgebraTable<F>::AlgebraTable(F field, std::vector<std::string> labels, std::vector<Sparse> products,
                              Element<F> unit, std::vector<std::size_t> generators)
    : field_(std::move(field)),
      labels_(std::move(labels)),
      products_(std::move(products)),
      unit_(std::move(unit)),
      generators_(std::move(generators)) {
  if (products_.size() != dim() * dim()) throw StructureError("structure constant table has wrong size");
  if (unit_.size() != dim()) throw StructureError("unit has wrong length");
  if (generators_.empty()) {
    generators_.resize(dim());
    std::iota(generators_.begin(), generators_.end(), std::size_t{0});
  }
}

template <Field F>
Element<F> AlgebraTable<F>::basis_element(std::size_t i) const {
  Element<F> e = zero();
  e.at(i) = field_.one();
  return e;
}

template <Field F>
Element<F> AlgebraTable<F>::scalar(const Elem& c) const {
  return scale(c, unit_);
}

template <Field F>
Element<F> AlgebraTable<F>::multiply(const Element<F>& x, const Element<F>& y) const {
  const std::size_t n = dim();
  Element<F> r = zero();
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < n; ++j) {
    if (!field_.is_zero(y[j])) ny.push_back(j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j : ny) {
      Elem c = field_.mul(x[i], y[j]);
      for (const auto& [k, v] : products_[i * n + j]) r[k] = field_.add(r[k], field_.mul(c, v));
    }
  }
  return r;
}

template <Field F>
Element<F> AlgebraTable<F>::add(const Element<F>& x, const Element<F>& y) const {
  Element<F> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(r[i], y[i]);
  return r;
}

template <Field F>
Element<F> AlgebraTable<F>::sub(const Element<F>& x, const Element<F>& y) const {
  Element<F> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(r[i], y[i]);
  return r;
}

template <Field F>
Element<F> AlgebraTable<F>::scale(const Elem& c, const Element<F>& x) const {
  Element<F> r = x;
  for (auto& v : r) v = field_.mul(c, v);
  return r;
}

template <Field F>
Element<F> AlgebraTable<F>::power(const Element<F>& x, unsigned n) const {
  Element<F> r = unit_;
  for (unsigned i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

template <Field F>
Element<F> AlgebraTable<F>::element(const NcPoly<F>& p) const {
  if (!source_) throw StructureError("table has no source rewrite system");
  NcPoly<F> nf = normal_form(*source_, p);
  Element<F> x = zero();
  for (const auto& [w, c] : nf.terms()) {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) throw StructureError("normal form left the table basis");
    x[static_cast<std::size_t>(it - words_.begin())] = c;
  }
  return x;
}

template <Field F>
NcPoly<F> AlgebraTable<F>::to_poly(const Element<F>& x) const {
  if (!source_) throw StructureError("table has no source rewrite system");
  NcPoly<F> p = source_->ring()->zero();
  for (std::size_t i = 0; i < dim(); ++i) p.add_term(words_[i], x[i]);
  return p;
}

template <Field F>
std::string AlgebraTable<F>::format(const Element<F>& x) const {
  if (source_) return to_poly(x).to_string();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field_.is_zero(x[i])) continue;
    if (!first) out << " + ";
    first = false;
    out << display(field_, x[i]) << "*[" << labels_[i] << "]";
  }
  if (first) out << "0";
  return out.str();
}

namespace {

template <Field F>
typename AlgebraTable<F>::Sparse to_sparse(const F& f, const Element<F>& v) {
  typename AlgebraTable<F>::Sparse s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!f.is_zero(v[k])) s.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  }
  return s;
}

/// (sparse vector) * b_k
template <Field F>
Element<F> times_basis(const AlgebraTable<F>& t, const typename AlgebraTable<F>::Sparse& s, std::size_t k) {
  const F& f = t.field();
  Element<F> r = t.zero();
  for (const auto& [l, c] : s) {
    for (const auto& [m, v] : t.product(l, k)) r[m] = f.add(r[m], f.mul(c, v));
  }
  return r;
}

/// b_i * (sparse vector)
template <Field F>
Element<F> basis_times(const AlgebraTable<F>& t, std::size_t i, const typename AlgebraTable<F>::Sparse& s) {
  const F& f = t.field();
  Element<F> r = t.zero();
  for (const auto& [l, c] : s) {
    for (const auto& [m, v] : t.product(i, l)) r[m] = f.add(r[m], f.mul(c, v));
  }
  return r;
}

template <Field F>
void require_trace_criterion(const AlgebraTable<F>& t) {
  auto p = t.field().characteristic();
  if (p != 0 && p <= t.dim()) {
    throw StructureError("trace-form radical criterion invalid at characteristic " + std::to_string(p) +
                         " for dimension " + std::to_string(t.dim()));
  }
}

}  // namespace

template <Field F>
AlgebraTable<F> build_table(const RewriteSystem<F>& rs) {
  if (!rs.certified()) throw StructureError("build_table needs a certified rewrite system");
  if (!is_finite_dimensional(rs)) throw StructureError("build_table on an infinite-dimensional algebra");
  const auto& ring = rs.ring();
  const F& f = ring->field();
  std::vector<Word> words = normal_words(rs, std::nullopt);
  const std::size_t n = words.size();
  if (n == 0) throw StructureError("zero algebra has no table");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(words[i].key(), i);

  using Sparse = typename AlgebraTable<F>::Sparse;
  std::vector<Sparse> products(n * n);
  // Rows of the empty word and of single letters come from normal forms; a
  // longer normal word xw' gives row x * (row of w'), w' being shorter.
  for (std::size_t i = 0; i < n; ++i) {
    if (words[i].size() <= 1) {
      for (std::size_t j = 0; j < n; ++j) {
        NcPoly<F> nf = normal_form(rs, ring->monomial(words[i] + words[j]));
        Sparse s;
        for (const auto& [w, c] : nf.terms()) s.emplace_back(static_cast<std::uint32_t>(index.at(w.key())), c);
        std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        products[i * n + j] = std::move(s);
      }
      continue;
    }
    const std::size_t x = index.at(words[i].prefix(1).key());
    const std::size_t rest = index.at(words[i].subword(1).key());
    Element<F> acc(n, f.zero());
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(acc.begin(), acc.end(), f.zero());
      for (const auto& [m, c] : products[rest * n + j]) {
        for (const auto& [k, v] : products[x * n + m]) acc[k] = f.add(acc[k], f.mul(c, v));
      }
      products[i * n + j] = to_sparse(f, acc);
    }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(ring->alphabet().format(words[i]));
    if (words[i].size() == 1) gens.push_back(i);
  }
  Element<F> unit(n, f.zero());
  unit[0] = f.one();
  AlgebraTable<F> t(f, std::move(labels), std::move(products), std::move(unit), gens);
  t.words_ = words;
  t.source_ = rs;

  // every normal word of positive length is (first letter) * (rest)
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t x = index.at(words[i].prefix(1).key());
    std::size_t rest = index.at(words[i].subword(1).key());
    const auto& s = t.product(x, rest);
    if (s.size() != 1 || s[0].first != i || !f.is_one(s[0].second)) {
      throw StructureError("normal word does not factor through its first letter");
    }
  }
  for (std::size_t g : gens) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Element<F> lhs = times_basis(t, t.product(g, j), k);
        Element<F> rhs = basis_times(t, g, t.product(j, k));
        if (lhs != rhs) throw StructureError("associativity failure: completion is inconsistent");
      }
    }
  }
  return t;
}

template <Field F>
bool check_associativity(const AlgebraTable<F>& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (times_basis(t, t.product(i, j), k) != basis_times(t, i, t.product(j, k))) return false;
      }
    }
  }
  return true;
}

template <Field F>
Matrix<F> left_regular(const AlgebraTable<F>& t, const Element<F>& x) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  Matrix<F> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : t.product(i, j)) m(k, j) = f.add(m(k, j), f.mul(x[i], v));
    }
  }
  return m;
}

template <Field F>
Matrix<F> right_regular(const AlgebraTable<F>& t, const Element<F>& x) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  Matrix<F> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : t.product(j, i)) m(k, j) = f.add(m(k, j), f.mul(x[i], v));
    }
  }
  return m;
}

template <Field F>
Matrix<F> trace_form(const AlgebraTable<F>& t) {
  require_trace_criterion(t);
  const F& f = t.field();
  const std::size_t n = t.dim();
  // tr(L_{b_i} L_{b_j}) = tr(L_{b_i b_j}) = sum_l c_ij^l tr(L_{b_l})
  std::vector<typename F::Elem> tau(n, f.zero());
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [m, v] : t.product(l, k)) {
        if (m == k) tau[l] = f.add(tau[l], v);
      }
    }
  }
  Matrix<F> form(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto s = f.zero();
      for (const auto& [l, v] : t.product(i, j)) s = f.add(s, f.mul(v, tau[l]));
      form(i, j) = s;
    }
  }
  return form;
}

template <Field F>
Subspace<F> radical(const AlgebraTable<F>& t) {
  Subspace<F> r = Subspace<F>::span(t.field(), t.dim(), kernel(trace_form(t)));
  if (!is_two_sided_ideal(t, r)) throw StructureError("trace-form kernel is not a two-sided ideal");
  if (!nilpotency_index(t, r)) throw StructureError("trace-form kernel is not nilpotent");
  return r;
}

template <Field F>
bool is_semisimple(const AlgebraTable<F>& t) {
  return rank(trace_form(t)) == t.dim();
}

template <Field F>
Subspace<F> center(const AlgebraTable<F>& t) {
  const F& f = t.field();
  const std::size_t n = t.dim();
  const auto& gens = t.generators();
  Matrix<F> system(f, gens.size() * n, n);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::size_t g = gens[gi];
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [l, v] : t.product(k, g)) system(gi * n + l, k) = f.add(system(gi * n + l, k), v);
      for (const auto& [l, v] : t.product(g, k)) system(gi * n + l, k) = f.sub(system(gi * n + l, k), v);
    }
  }
  return Subspace<F>::span(f, n, kernel(system));
}

template <Field F>
Subspace<F> two_sided_ideal(const AlgebraTable<F>& t, const std::vector<Element<F>>& gens) {
  Subspace<F> s(t.field(), t.dim());
  std::deque<Element<F>> queue;
  for (const auto& g : gens) {
    if (s.insert(g)) queue.push_back(g);
  }
  while (!queue.empty()) {
    Element<F> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g : t.generators()) {
      Element<F> b = t.basis_element(g);
      for (Element<F> w : {t.multiply(b, v), t.multiply(v, b)}) {
        if (s.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return s;
}

template <Field F>
bool is_two_sided_ideal(const AlgebraTable<F>& t, const Subspace<F>& s) {
  for (const auto& v : s.basis()) {
    for (std::size_t g : t.generators()) {
      Element<F> b = t.basis_element(g);
      if (!s.contains(t.multiply(b, v)) || !s.contains(t.multiply(v, b))) return false;
    }
  }
  return true;
}

template <Field F>
Subspace<F> product_space(const AlgebraTable<F>& t, const Subspace<F>& u, const Subspace<F>& v) {
  Subspace<F> s(t.field(), t.dim());
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) s.insert(t.multiply(x, y));
  }
  return s;
}

template <Field F>
std::optional<std::size_t> nilpotency_index(const AlgebraTable<F>& t, const Subspace<F>& ideal) {
  Subspace<F> power = ideal;
  for (std::size_t k = 1; k <= t.dim() + 1; ++k) {
    if (power.dim() == 0) return k;
    Subspace<F> next = product_space(t, power, ideal);
    if (next.dim() == power.dim()) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

template <Field F>
AlgebraTable<F> corner(const AlgebraTable<F>& t, const Element<F>& e) {
  const F& f = t.field();
  if (t.multiply(e, e) != e) throw StructureError("corner requires an idempotent");
  if (t.is_zero(e)) throw StructureError("corner of the zero idempotent");
  Subspace<F> span(f, t.dim());
  std::vector<Element<F>> basis;
  std::vector<std::string> labels;
  span.insert(e);
  basis.push_back(e);
  labels.push_back("e");
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Element<F> v = t.multiply(t.multiply(e, t.basis_element(i)), e);
    if (span.insert(v)) {
      basis.push_back(std::move(v));
      labels.push_back("e*" + t.labels()[i] + "*e");
    }
  }
  Coordinates<F> coords(f, basis);
  const std::size_t k = basis.size();
  std::vector<typename AlgebraTable<F>::Sparse> products(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto c = coords.of(t.multiply(basis[i], basis[j]));
      if (!c) throw StructureError("corner is not closed under multiplication");
      products[i * k + j] = to_sparse(f, *c);
    }
  }
  Element<F> unit(k, f.zero());
  unit[0] = f.one();
  AlgebraTable<F> c(f, std::move(labels), std::move(products), std::move(unit), {});
  c.embedding_ = std::move(basis);
  return c;
}

template <Field F>
bool is_invertible(const AlgebraTable<F>& t, const Element<F>& x) {
  return rank(left_regular(t, x)) == t.dim();
}

template <Field F>
std::optional<Element<F>> inverse_element(const AlgebraTable<F>& t, const Element<F>& x) {
  auto inv = inverse(left_regular(t, x));
  if (!inv) return std::nullopt;
  // L_x z = 1  =>  z = L_x^{-1} 1; finite dimension makes z a two-sided inverse
  return inv->apply(t.unit());
}

template <Field F>
Subspace<F> subalgebra_with_unit(const AlgebraTable<F>& t, const std::vector<Element<F>>& gens) {
  Subspace<F> s(t.field(), t.dim());
  std::deque<Element<F>> queue;
  if (s.insert(t.unit())) queue.push_back(t.unit());
  while (!queue.empty()) {
    Element<F> v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Element<F> w = t.multiply(v, g);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

template <Field F>
AlgebraTable<F> matrix_algebra(const AlgebraTable<F>& t, std::size_t n) {
  const F& f = t.field();
  const std::size_t d = t.dim();
  const std::size_t dim = n * n * d;
  auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * d + k; };
  std::vector<typename AlgebraTable<F>::Sparse> products(dim * dim);
  std::vector<std::string> labels(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        labels[idx(i, j, k)] = "E" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + t.labels()[k] + ")";
        for (std::size_t m = 0; m < n; ++m) {
          for (std::size_t r = 0; r < d; ++r) {
            auto& out = products[idx(i, j, k) * dim + idx(j, m, r)];
            for (const auto& [s, v] : t.product(k, r)) out.emplace_back(static_cast<std::uint32_t>(idx(i, m, s)), v);
          }
        }
      }
    }
  }
  Element<F> unit(dim, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) unit[idx(i, i, k)] = t.unit()[k];
  }
  return AlgebraTable<F>(f, std::move(labels), std::move(products), std::move(unit), {});
}

template <Field F>
AlgebraTable<F> truncated_free_table(const F& field, const Alphabet& alphabet, std::size_t degree) {
  std::vector<Word> words{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (std::size_t x = 0; x < alphabet.size(); ++x) {
        Word wx = w;
        next.push_back(wx.push_back(static_cast<Letter>(x)));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  const std::size_t n = words.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(words[i].key(), i);
  std::vector<typename AlgebraTable<F>::Sparse> products(n * n);
  std::vector<std::string> labels;
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(alphabet.format(words[i]));
    if (words[i].size() == 1) gens.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (words[i].size() + words[j].size() > degree) continue;
      products[i * n + j].emplace_back(static_cast<std::uint32_t>(index.at((words[i] + words[j]).key())),
                                       field.one());
    }
  }
  Element<F> unit(n, field.zero());
  unit[0] = field.one();
  return AlgebraTable<F>(field, std::move(labels), std::move(products), std::move(unit), std::move(gens));
}

template <Field F>
Element<F> hall_value(const AlgebraTable<F>& t, const Element<F>& x, const Element<F>& y, const Element<F>& z) {
  Element<F> c = commutator(t, x, y);
  return commutator(t, t.multiply(c, c), z);
}

#define NCFORGE_INSTANTIATE(F)                                                                        \
  template class AlgebraTable<F>;                                                                     \
  template AlgebraTable<F> build_table(const RewriteSystem<F>&);                                      \
  template bool check_associativity(const AlgebraTable<F>&);                                          \
  template Matrix<F> left_regular(const AlgebraTable<F>&, const Element<F>&);                         \
  template Matrix<F> right_regular(const AlgebraTable<F>&, const Element<F>&);                        \
  template Matrix<F> trace_form(const AlgebraTable<F>&);                                              \
  template Subspace<F> radical(const AlgebraTable<F>&);                                               \
  template bool is_semisimple(const AlgebraTable<F>&);                                                \
  template Subspace<F> center(const AlgebraTable<F>&);                                                \
  template Subspace<F> two_sided_ideal(const AlgebraTable<F>&, const std::vector<Element<F>>&);       \
  template bool is_two_sided_ideal(const AlgebraTable<F>&, const Subspace<F>&);                       \
  template Subspace<F> product_space(const AlgebraTable<F>&, const Subspace<F>&, const Subspace<F>&); \
  template std::optional<std::size_t> nilpotency_index(const AlgebraTable<F>&, const Subspace<F>&);  \
  template AlgebraTable<F> corner(const AlgebraTable<F>&, const Element<F>&);                         \
  template bool is_invertible(const AlgebraTable<F>&, const Element<F>&);                             \
  template std::optional<Element<F>> inverse_element(const AlgebraTable<F>&, const Element<F>&);      \
  template Subspace<F> subalgebra_with_unit(const AlgebraTable<F>&, const std::vector<Element<F>>&);  \
  template AlgebraTable<F> matrix_algebra(const AlgebraTable<F>&, std::size_t);                       \
  template AlgebraTable<F> truncated_free_table(const F&, const Alphabet&, std::size_t);              \
  template Element<F> hall_value(const AlgebraTable<F>&, const Element<F>&, const Element<F>&,        \
                                 const Element<F>&);

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
