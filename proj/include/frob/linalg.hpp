#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "frob/rational.hpp"

namespace frob {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_skew() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

/// m · v
Vector matvec(const Matrix& m, std::span<const Rational> v);
/// v · m
Vector vecmat(std::span<const Rational> v, const Matrix& m);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(std::span<const Rational> v);
Vector unit_vector(std::size_t n, std::size_t k);

/// Reduced row echelon form. Pivot rule: scan columns left to right and take
/// the first row (from the current position down) with a nonzero entry.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of { v : m·v = 0 }, one vector per free column, with a 1 in that
/// free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Throws SingularMatrix when m is not invertible.
Matrix inverse(const Matrix& m);

/// Solves x·m = v. Throws SingularMatrix when m is not invertible.
Vector solve_row(std::span<const Rational> v, const Matrix& m);

/// Solves m·x = v for one particular solution; empty when inconsistent.
std::optional<Vector> solve_column(const Matrix& m, std::span<const Rational> v);

/// Matrix whose columns are the given vectors.
Matrix from_columns(std::span<const Vector> cols, std::size_t length);

}  // namespace frob
