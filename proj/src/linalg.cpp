#include "ncforge/linalg.hpp"

#include <algorithm>

namespace ncforge {

template <Field F>
Matrix<F> Matrix<F>::identity(const F& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <Field F>
Matrix<F> Matrix<F>::from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <Field F>
Vec<F> Matrix<F>::row(std::size_t r) const {
  return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

template <Field F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& a = (*this)(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
      }
    }
  }
  return r;
}

template <Field F>
Vec<F> Matrix<F>::apply(const Vec<F>& x) const {
  Vec<F> y(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
  }
  return y;
}

template <Field F>
bool Matrix<F>::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

template <Field F>
typename Matrix<F>::Elem Matrix<F>::trace() const {
  Elem t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

template <Field F>
Echelon<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon<F>{std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

template <Field F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const F& f = m.field();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

template <Field F>
Subspace<F> Subspace<F>::span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
  Subspace s(field, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

template <Field F>
Vec<F> Subspace<F>::residual(Vec<F> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (field_.is_zero(c)) continue;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
      if (!field_.is_zero(row[j])) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
  }
  return v;
}

template <Field F>
bool Subspace<F>::contains(const Vec<F>& v) const {
  return is_zero_vector(field_, residual(v));
}

template <Field F>
bool Subspace<F>::insert(const Vec<F>& v) {
  Vec<F> r = residual(v);
  std::size_t p = 0;
  while (p < ambient_ && field_.is_zero(r[p])) ++p;
  if (p == ambient_) return false;
  auto inv = field_.inv(r[p]);
  for (std::size_t j = p; j < ambient_; ++j) r[j] = field_.mul(r[j], inv);
  for (auto& row : rows_) {
    const Elem c = row[p];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!field_.is_zero(r[j])) row[j] = field_.sub(row[j], field_.mul(c, r[j]));
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

template <Field F>
bool Subspace<F>::contains(const Subspace& o) const {
  for (const auto& v : o.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

template <Field F>
Coordinates<F>::Coordinates(const F& field, std::vector<Vec<F>> basis)
    : field_(field), basis_(std::move(basis)) {
  if (basis_.empty()) return;
  const std::size_t n = basis_.front().size();
  auto e = rref(Matrix<F>::from_rows(field_, basis_, n));
  if (e.pivots.size() != basis_.size()) throw std::invalid_argument("coordinate basis is dependent");
  cols_ = e.pivots;
  Matrix<F> sub(field_, basis_.size(), basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < cols_.size(); ++j) sub(i, j) = basis_[i][cols_[j]];
  }
  inv_ = inverse(sub);
}

template <Field F>
std::optional<Vec<F>> Coordinates<F>::of(const Vec<F>& v) const {
  const std::size_t k = basis_.size();
  if (k == 0) {
    if (is_zero_vector(field_, v)) return Vec<F>{};
    return std::nullopt;
  }
  // c * sub = v[cols]  =>  c = v[cols] * sub^{-1}
  Vec<F> c(k, field_.zero());
  for (std::size_t j = 0; j < k; ++j) {
    const auto& x = v[cols_[j]];
    if (field_.is_zero(x)) continue;
    for (std::size_t i = 0; i < k; ++i) c[i] = field_.add(c[i], field_.mul(x, (*inv_)(j, i)));
  }
  Vec<F> back(v.size(), field_.zero());
  for (std::size_t i = 0; i < k; ++i) {
    if (field_.is_zero(c[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) back[j] = field_.add(back[j], field_.mul(c[i], basis_[i][j]));
  }
  if (back != v) return std::nullopt;
  return c;
}

#define NCFORGE_INSTANTIATE(F)                                   \
  template class Matrix<F>;                                      \
  template Echelon<F> rref(Matrix<F>);                           \
  template std::size_t rank(const Matrix<F>&);                   \
  template std::vector<Vec<F>> kernel(const Matrix<F>&);         \
  template std::optional<Matrix<F>> inverse(const Matrix<F>&);   \
  template class Subspace<F>;                                    \
  template class Coordinates<F>;

NCFORGE_INSTANTIATE(PrimeField)
NCFORGE_INSTANTIATE(RationalField)

}  // namespace ncforge
