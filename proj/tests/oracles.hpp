#pragma once

// Reference computations used only by the tests. Each one takes a route that
// does not go through the elimination or sparse-bracket code it checks.

#include <cstddef>
#include <numeric>
#include <vector>

#include "frob/linalg.hpp"
#include "frob/lie.hpp"
#include "frob/rng.hpp"

namespace oracle {

using frob::Matrix;
using frob::Rational;

/// Determinant by cofactor expansion along the first row.
inline Rational determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

namespace detail {

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Largest k with a nonzero k x k minor (exhaustive; small matrices only).
inline std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::size_t> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        Matrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(rows[r], cols[c]);
        if (sgn(determinant(sub)) != 0) return k;
      } while (detail::next_subset(cols, m.cols()));
    } while (detail::next_subset(rows, m.rows()));
  }
  return 0;
}

/// Inverse via the adjugate.
inline Matrix adjugate_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  const Rational det = determinant(m);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      const Rational cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      inv(j, i) = cof / det;
    }
  return inv;
}

inline Matrix random_matrix(frob::Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng.uniform(-bound, bound));
  return m;
}

/// Dense commutator XY - YX.
inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

/// Dense n x n matrix of a basis element, built from its label directly.
inline Matrix label_matrix(const frob::BasisLabel& l, int n) {
  Matrix m(n, n);
  using K = frob::BasisLabel::Kind;
  if (l.kind == K::Cartan) {
    m(l.i - 1, l.i - 1) = 1;
    m(l.i, l.i) = -1;
  } else if (l.kind == K::MatrixUnit) {
    m(l.i - 1, l.j - 1) = 1;
  }
  return m;
}

}  // namespace oracle
