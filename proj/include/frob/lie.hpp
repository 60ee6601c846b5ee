#pragma once

#include <compare>
#include <map>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frob/linalg.hpp"

namespace frob {

/// Name of one basis vector. Indices are 1-based, as in e_ij.
struct BasisLabel {
  enum class Kind { Cartan, MatrixUnit, Translation, Generic };

  Kind kind = Kind::Generic;
  int i = 0;
  int j = 0;

  /// h_k = e_kk - e_{k+1,k+1}
  static BasisLabel cartan(int k) { return {Kind::Cartan, k, 0}; }
  static BasisLabel unit(int row, int col) { return {Kind::MatrixUnit, row, col}; }
  /// Coordinate (row, col) of the n x p block in the Rais family.
  static BasisLabel translation(int row, int col) { return {Kind::Translation, row, col}; }
  /// k-th vector of a basis with no matrix-unit name (after a change of basis).
  static BasisLabel generic(int k) { return {Kind::Generic, k, 0}; }

  auto operator<=>(const BasisLabel&) const = default;
};

std::string to_string(const BasisLabel& label);

/// Entry (row, col, value) of a sparse matrix; rows and columns are 0-based.
struct MatrixEntry {
  int row;
  int col;
  Rational value;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};
using SparseMatrix = std::vector<MatrixEntry>;

/// Sparse coefficient vector over a basis: (index, coefficient), sorted by
/// index, no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Coordinates over a LieAlgebra's basis.
using Element = Vector;

/// Parts of n, all positive.
struct Composition {
  std::vector<int> parts;

  int total() const;
  /// 0-based index of the block containing the 1-based position `pos`.
  int block_of(int pos) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Every composition of n, in lexicographic order of parts.
std::vector<Composition> compositions(int n);

/// What the optional faithful matrix realization sits in.
enum class Ambient { None, SpecialLinear, GeneralLinear };

/// Finite-dimensional Lie algebra given by an ordered basis and a structure
/// table, optionally realized by matrices of size ambient_n().
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Builds the structure table from the realization by matrix commutators.
  /// Brackets that leave the span are dropped from the table; closure_check
  /// reports them.
  LieAlgebra(std::string name, std::vector<BasisLabel> basis, Ambient ambient, int ambient_n,
             std::vector<SparseMatrix> realization);

  /// Abstract algebra from a structure table, with an optional realization.
  LieAlgebra(std::string name, std::vector<BasisLabel> basis, std::vector<SparseVector> table,
             Ambient ambient, int ambient_n, std::vector<SparseMatrix> realization);

  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(std::size_t a) const { return basis_[a]; }
  std::optional<std::size_t> index_of(const BasisLabel& label) const;

  /// Coefficients of [x_a, x_b].
  const SparseVector& structure(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  Ambient ambient() const { return ambient_; }
  int ambient_n() const { return ambient_n_; }
  bool has_realization() const { return ambient_ != Ambient::None; }
  const SparseMatrix& realization(std::size_t a) const { return realization_[a]; }

  /// Coordinates of an ambient matrix in this basis, or nullopt when the matrix
  /// is outside the span. Requires a realization.
  std::optional<Element> express(const SparseMatrix& m) const;

  /// False when some bracket of basis vectors escaped the span during
  /// construction.
  bool brackets_in_span() const { return brackets_in_span_; }

private:
  bool labels_are_positional() const;
  std::optional<Element> express_by_labels(const SparseMatrix& m) const;
  std::optional<Element> express_by_solve(const SparseMatrix& m) const;
  void index_positions();

  std::string name_;
  std::vector<BasisLabel> basis_;
  std::vector<SparseVector> table_;
  Ambient ambient_ = Ambient::None;
  int ambient_n_ = 0;
  std::vector<SparseMatrix> realization_;
  bool brackets_in_span_ = true;
  // Basis index of each single-entry basis vector, and of each h_k.
  std::map<std::pair<int, int>, std::size_t> position_;
  std::map<int, std::size_t> cartan_;
};

LieAlgebra sl(int n);
LieAlgebra seaweed(const Composition& top, const Composition& bottom);
LieAlgebra maximal_parabolic(int n, int i);
LieAlgebra rais_algebra(int n, int p);

/// Span of named basis vectors of sl_n. The result may fail closure_check.
LieAlgebra span_of_labels(int n, std::vector<BasisLabel> labels);

/// Span of arbitrary traceless n x n matrices (linearly independent).
LieAlgebra span_of_matrices(std::string name, int n, std::vector<SparseMatrix> elements);

/// Same algebra in the basis y_a = sum_u change(u, a) x_u. `change` must be
/// invertible. The realization, if any, is carried along.
LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& change);

Element bracket(const LieAlgebra& lie, const Element& x, const Element& y);

/// Every basis bracket lies in the span, the table is antisymmetric, and the
/// Jacobi identity holds on all basis triples.
bool closure_check(const LieAlgebra& lie);

/// { x in sl_n : [x, L] in L }. Throws NoAmbient unless L sits in sl_n.
LieAlgebra normalizer_in_ambient(const LieAlgebra& lie);

bool is_saturated(const LieAlgebra& lie);

/// True iff every h_k lies in the span. Throws NoAmbient unless L sits in sl_n.
bool contains_cartan(const LieAlgebra& lie);

SparseMatrix to_sparse_matrix(const LieAlgebra& lie, const Element& x);
Matrix to_matrix(const LieAlgebra& lie, const Element& x);
SparseMatrix sparse_of(const Matrix& m);
Matrix dense_of(const SparseMatrix& m, int n);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace frob
