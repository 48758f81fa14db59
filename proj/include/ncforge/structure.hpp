#ifndef NCFORGE_STRUCTURE_HPP
#define NCFORGE_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncforge/gbasis.hpp"
#include "ncforge/linalg.hpp"

namespace ncforge {

class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coordinate vector over a table's basis.
template <Field F>
using Element = Vec<F>;

/// Structure constants of a finite-dimensional unital algebra.
///
/// Tables built from a rewrite system use the deglex-sorted normal words as
/// basis (index 0 is the empty word) and remember the system, so free-algebra
/// polynomials can be mapped in. Derived tables (corners, matrix algebras)
/// carry labels only.
template <Field F>
class AlgebraTable {
public:
  using Elem = typename F::Elem;
  using Sparse = std::vector<std::pair<std::uint32_t, Elem>>;

  AlgebraTable(F field, std::vector<std::string> labels, std::vector<Sparse> products, Element<F> unit,
               std::vector<std::size_t> generators);

  const F& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Sparse& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const Element<F>& unit() const { return unit_; }
  /// Basis indices generating the algebra; all indices when unknown.
  const std::vector<std::size_t>& generators() const { return generators_; }

  Element<F> zero() const { return Element<F>(dim(), field_.zero()); }
  Element<F> basis_element(std::size_t i) const;
  Element<F> scalar(const Elem& c) const;
  Element<F> multiply(const Element<F>& x, const Element<F>& y) const;
  Element<F> add(const Element<F>& x, const Element<F>& y) const;
  Element<F> sub(const Element<F>& x, const Element<F>& y) const;
  Element<F> scale(const Elem& c, const Element<F>& x) const;
  Element<F> power(const Element<F>& x, unsigned n) const;
  bool is_zero(const Element<F>& x) const { return is_zero_vector(field_, x); }

  /// Word-based tables only.
  const std::vector<Word>& words() const { return words_; }
  const std::optional<RewriteSystem<F>>& source() const { return source_; }
  /// Reduces p modulo the source system and reads off coordinates.
  Element<F> element(const NcPoly<F>& p) const;
  NcPoly<F> to_poly(const Element<F>& x) const;

  /// For corners: basis vectors expressed in the parent algebra.
  const std::vector<Element<F>>& embedding() const { return embedding_; }

  std::string format(const Element<F>& x) const;

private:
  template <Field G>
  friend AlgebraTable<G> build_table(const RewriteSystem<G>& rs);
  template <Field G>
  friend AlgebraTable<G> corner(const AlgebraTable<G>& t, const Element<G>& e);

  F field_;
  std::vector<std::string> labels_;
  std::vector<Sparse> products_;
  Element<F> unit_;
  std::vector<std::size_t> generators_;
  std::vector<Word> words_;
  std::optional<RewriteSystem<F>> source_;
  std::vector<Element<F>> embedding_;
};

/// Structure constants on the normal words of a certified finite system.
/// Associativity is verified on all triples whose first factor is a
/// generator, which together with wx = w*x for normal words implies it for
/// every triple.
template <Field F>
AlgebraTable<F> build_table(const RewriteSystem<F>& rs);

/// Exhaustive associativity check over all basis triples.
template <Field F>
bool check_associativity(const AlgebraTable<F>& t);

/// Columns are the coordinates of x * b_j.
template <Field F>
Matrix<F> left_regular(const AlgebraTable<F>& t, const Element<F>& x);

template <Field F>
Matrix<F> right_regular(const AlgebraTable<F>& t, const Element<F>& x);

/// (i, j) -> trace of left multiplication by b_i b_j. Requires char 0 or p > dim.
template <Field F>
Matrix<F> trace_form(const AlgebraTable<F>& t);

/// Kernel of the trace form, verified to be a nilpotent two-sided ideal.
template <Field F>
Subspace<F> radical(const AlgebraTable<F>& t);

template <Field F>
bool is_semisimple(const AlgebraTable<F>& t);

template <Field F>
Subspace<F> center(const AlgebraTable<F>& t);

template <Field F>
Subspace<F> two_sided_ideal(const AlgebraTable<F>& t, const std::vector<Element<F>>& gens);

template <Field F>
bool is_two_sided_ideal(const AlgebraTable<F>& t, const Subspace<F>& s);

/// span{u v : u in U, v in V}
template <Field F>
Subspace<F> product_space(const AlgebraTable<F>& t, const Subspace<F>& u, const Subspace<F>& v);

/// Smallest k with I^k = 0, or nullopt when I is not nilpotent.
template <Field F>
std::optional<std::size_t> nilpotency_index(const AlgebraTable<F>& t, const Subspace<F>& ideal);

/// eAe with unit e at basis index 0. Throws when e is not idempotent.
template <Field F>
AlgebraTable<F> corner(const AlgebraTable<F>& t, const Element<F>& e);

template <Field F>
bool is_invertible(const AlgebraTable<F>& t, const Element<F>& x);

template <Field F>
std::optional<Element<F>> inverse_element(const AlgebraTable<F>& t, const Element<F>& x);

/// Smallest unital subalgebra containing gens.
template <Field F>
Subspace<F> subalgebra_with_unit(const AlgebraTable<F>& t, const std::vector<Element<F>>& gens);

/// M_n over the given algebra; basis E_ij (x) b_k at index (i*n + j)*dim + k.
template <Field F>
AlgebraTable<F> matrix_algebra(const AlgebraTable<F>& t, std::size_t n);

/// Free algebra on `alphabet` modulo all words longer than `degree`.
template <Field F>
AlgebraTable<F> truncated_free_table(const F& field, const Alphabet& alphabet, std::size_t degree);

/// [[x, y]^2, z]
template <Field F>
Element<F> hall_value(const AlgebraTable<F>& t, const Element<F>& x, const Element<F>& y,
                      const Element<F>& z);

template <Field F>
Element<F> commutator(const AlgebraTable<F>& t, const Element<F>& x, const Element<F>& y) {
  return t.sub(t.multiply(x, y), t.multiply(y, x));
}

}  // namespace ncforge

#endif  // NCFORGE_STRUCTURE_HPP
