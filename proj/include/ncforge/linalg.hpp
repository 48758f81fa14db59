#ifndef NCFORGE_LINALG_HPP
#define NCFORGE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncforge/field.hpp"

namespace ncforge {

template <Field F>
using Vec = std::vector<typename F::Elem>;

/// Dense row-major matrix over F.
template <Field F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}
  static Matrix identity(const F& field, std::size_t n);
  /// Rows given as vectors of equal length.
  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec<F> row(std::size_t r) const;

  Matrix operator*(const Matrix& o) const;
  Vec<F> apply(const Vec<F>& x) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool is_symmetric() const;
  Elem trace() const;

private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

/// Reduced row echelon form with pivot columns chosen left to right.
template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <Field F>
Echelon<F> rref(Matrix<F> m);

template <Field F>
std::size_t rank(const Matrix<F>& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
template <Field F>
std::vector<Vec<F>> kernel(const Matrix<F>& m);

/// Inverse of a square matrix, or nullopt when singular.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

/// Subspace of F^n held as rows of a reduced echelon matrix.
template <Field F>
class Subspace {
public:
  using Elem = typename F::Elem;

  Subspace(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors);

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns.
  Vec<F> residual(Vec<F> v) const;
  bool contains(const Vec<F>& v) const;
  /// Adds v, keeping the rows reduced; returns false if v was already inside.
  bool insert(const Vec<F>& v);
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return pivots_ == o.pivots_ && rows_ == o.rows_; }

private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed list of linearly independent vectors.
template <Field F>
class Coordinates {
public:
  Coordinates(const F& field, std::vector<Vec<F>> basis);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  /// Coefficients c with sum c_i b_i = v; nullopt when v is outside the span.
  std::optional<Vec<F>> of(const Vec<F>& v) const;

private:
  F field_;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> cols_;
  std::optional<Matrix<F>> inv_;
};

template <Field F>
bool is_zero_vector(const F& f, const Vec<F>& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) return false;
  }
  return true;
}

}  // namespace ncforge

#endif  // NCFORGE_LINALG_HPP
