#include "frob/linalg.hpp"

#include <cassert>
#include <utility>

#include "frob/errors.hpp"

namespace frob {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidParameter("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("matrix product: dimension mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidParameter("matrix sum: dimension mismatch");
  Matrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Vector matvec(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw InvalidParameter("matrix-vector product: dimension mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  return out;
}

Vector vecmat(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw InvalidParameter("vector-matrix product: dimension mismatch");
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(v[r]) == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[c] += v[r] * m(r, c);
  }
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = 1;
  return v;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= factor * m(r, k);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= factor * m(r, k);
    }
    ++r;
  }
  return r;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw InvalidParameter("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (n > 0 && (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1))
    throw SingularMatrix("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve_column(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw InvalidParameter("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, m.cols());
  return x;
}

Vector solve_row(std::span<const Rational> v, const Matrix& m) {
  if (!m.square()) throw InvalidParameter("solve_row: matrix not square");
  if (rank(m) < m.rows()) throw SingularMatrix("matrix is singular");
  auto x = solve_column(m.transpose(), v);
  assert(x);
  return *x;
}

Matrix from_columns(std::span<const Vector> cols, std::size_t length) {
  Matrix m(length, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != length) throw InvalidParameter("from_columns: length mismatch");
    for (std::size_t r = 0; r < length; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace frob
