#include "frob/lie.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "frob/errors.hpp"

namespace frob {

std::string to_string(const BasisLabel& label) {
  const auto s = [](int v) { return std::to_string(v); };
  switch (label.kind) {
    case BasisLabel::Kind::Cartan: return "h" + s(label.i);
    case BasisLabel::Kind::MatrixUnit: return "e" + s(label.i) + "," + s(label.j);
    case BasisLabel::Kind::Translation: return "t" + s(label.i) + "," + s(label.j);
    case BasisLabel::Kind::Generic: return "g" + s(label.i);
  }
  return "?";
}

int Composition::total() const {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

int Composition::block_of(int pos) const {
  int end = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    end += parts[b];
    if (pos <= end) return static_cast<int>(b);
  }
  throw InvalidParameter("position " + std::to_string(pos) + " outside composition");
}

std::vector<Composition> compositions(int n) {
  if (n < 0) throw InvalidParameter("compositions of a negative number");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int first = 1; first <= n; ++first)
    for (auto& rest : compositions(n - first)) {
      Composition c;
      c.parts.push_back(first);
      c.parts.insert(c.parts.end(), rest.parts.begin(), rest.parts.end());
      out.push_back(std::move(c));
    }
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.col == y.row) acc[{x.row, y.col}] += x.value * y.value;
      if (y.col == x.row) acc[{y.row, x.col}] -= x.value * y.value;
    }
  SparseMatrix out;
  for (auto& [pos, v] : acc)
    if (sgn(v) != 0) out.push_back({pos.first, pos.second, v});
  return out;
}

SparseMatrix sparse_of(const Matrix& m) {
  SparseMatrix out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out.push_back({static_cast<int>(r), static_cast<int>(c), m(r, c)});
  return out;
}

Matrix dense_of(const SparseMatrix& m, int n) {
  Matrix out(n, n);
  for (const auto& e : m) out(e.row, e.col) += e.value;
  return out;
}

namespace {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

SparseVector negated(const SparseVector& v) {
  SparseVector out = v;
  for (auto& [i, c] : out) c = -c;
  return out;
}

SparseMatrix realize_label(const BasisLabel& label, int translation_offset) {
  switch (label.kind) {
    case BasisLabel::Kind::Cartan:
      return {{label.i - 1, label.i - 1, 1}, {label.i, label.i, -1}};
    case BasisLabel::Kind::MatrixUnit:
      return {{label.i - 1, label.j - 1, 1}};
    case BasisLabel::Kind::Translation:
      return {{label.i - 1, translation_offset + label.j - 1, 1}};
    case BasisLabel::Kind::Generic:
      break;
  }
  throw InvalidParameter("generic label has no canonical realization");
}

std::vector<SparseMatrix> realize_labels(const std::vector<BasisLabel>& labels, int offset = 0) {
  std::vector<SparseMatrix> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(realize_label(l, offset));
  return out;
}

Vector flatten(const SparseMatrix& m, int n) {
  Vector v(static_cast<std::size_t>(n) * n);
  for (const auto& e : m) v[static_cast<std::size_t>(e.row) * n + e.col] += e.value;
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<BasisLabel> basis, Ambient ambient, int ambient_n,
                       std::vector<SparseMatrix> realization)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      table_(basis_.size() * basis_.size()),
      ambient_(ambient),
      ambient_n_(ambient_n),
      realization_(std::move(realization)) {
  if (ambient_ == Ambient::None || realization_.size() != basis_.size())
    throw InvalidParameter("realization must match the basis");
  index_positions();
  const std::size_t d = dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto c = express(commutator(realization_[a], realization_[b]));
      if (!c) {
        brackets_in_span_ = false;
        continue;
      }
      table_[a * d + b] = to_sparse(*c);
      table_[b * d + a] = negated(table_[a * d + b]);
    }
}

LieAlgebra::LieAlgebra(std::string name, std::vector<BasisLabel> basis, std::vector<SparseVector> table,
                       Ambient ambient, int ambient_n, std::vector<SparseMatrix> realization)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      table_(std::move(table)),
      ambient_(ambient),
      ambient_n_(ambient_n),
      realization_(std::move(realization)) {
  if (table_.size() != basis_.size() * basis_.size()) throw InvalidParameter("structure table size mismatch");
  if (ambient_ != Ambient::None && realization_.size() != basis_.size())
    throw InvalidParameter("realization must match the basis");
  index_positions();
}

void LieAlgebra::index_positions() {
  if (!has_realization() || !labels_are_positional()) return;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (basis_[a].kind == BasisLabel::Kind::Cartan)
      cartan_[basis_[a].i] = a;
    else
      position_[{realization_[a][0].row, realization_[a][0].col}] = a;
  }
}

std::optional<std::size_t> LieAlgebra::index_of(const BasisLabel& label) const {
  for (std::size_t a = 0; a < basis_.size(); ++a)
    if (basis_[a] == label) return a;
  return std::nullopt;
}

bool LieAlgebra::labels_are_positional() const {
  return std::none_of(basis_.begin(), basis_.end(),
                      [](const BasisLabel& l) { return l.kind == BasisLabel::Kind::Generic; });
}

std::optional<Element> LieAlgebra::express(const SparseMatrix& m) const {
  if (!has_realization()) throw NoAmbient(name_ + " has no matrix realization");
  return labels_are_positional() ? express_by_labels(m) : express_by_solve(m);
}

// Single-entry basis vectors are read off by position; the remaining diagonal
// part must be traceless and is rewritten over the h_k by partial sums.
std::optional<Element> LieAlgebra::express_by_labels(const SparseMatrix& m) const {
  Element x(dim());
  std::vector<Rational> diag(ambient_n_);
  for (const auto& e : m) {
    if (auto it = position_.find({e.row, e.col}); it != position_.end())
      x[it->second] += e.value;
    else if (e.row == e.col)
      diag[e.row] += e.value;
    else if (sgn(e.value) != 0)
      return std::nullopt;
  }
  Rational partial = 0;
  for (int k = 1; k <= ambient_n_; ++k) {
    partial += diag[k - 1];
    if (sgn(partial) == 0) continue;
    auto it = cartan_.find(k);
    if (it == cartan_.end()) return std::nullopt;
    x[it->second] += partial;
  }
  return x;
}

std::optional<Element> LieAlgebra::express_by_solve(const SparseMatrix& m) const {
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (const auto& r : realization_) cols.push_back(flatten(r, ambient_n_));
  const std::size_t len = static_cast<std::size_t>(ambient_n_) * ambient_n_;
  return solve_column(from_columns(cols, len), flatten(m, ambient_n_));
}

LieAlgebra sl(int n) {
  require(n >= 2, "sl(n) needs n >= 2, got " + std::to_string(n));
  std::vector<BasisLabel> basis;
  for (int k = 1; k < n; ++k) basis.push_back(BasisLabel::cartan(k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) basis.push_back(BasisLabel::unit(i, j));
  auto real = realize_labels(basis);
  return LieAlgebra("sl(" + std::to_string(n) + ")", std::move(basis), Ambient::SpecialLinear, n,
                    std::move(real));
}

namespace {

std::string describe(const Composition& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.parts.size(); ++k) s += (k ? "," : "") + std::to_string(c.parts[k]);
  return s + ")";
}

}  // namespace

LieAlgebra seaweed(const Composition& top, const Composition& bottom) {
  for (const auto* c : {&top, &bottom})
    for (int p : c->parts) require(p > 0, "composition parts must be positive");
  const int n = top.total();
  require(n >= 1, "empty composition");
  require(bottom.total() == n, "compositions sum to " + std::to_string(n) + " and " +
                                   std::to_string(bottom.total()));
  std::vector<BasisLabel> basis;
  for (int k = 1; k < n; ++k) basis.push_back(BasisLabel::cartan(k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && top.block_of(i) <= top.block_of(j) && bottom.block_of(i) >= bottom.block_of(j))
        basis.push_back(BasisLabel::unit(i, j));
  auto real = realize_labels(basis);
  return LieAlgebra("seaweed" + describe(top) + describe(bottom), std::move(basis), Ambient::SpecialLinear,
                    n, std::move(real));
}

LieAlgebra maximal_parabolic(int n, int i) {
  require(n >= 2 && i >= 1 && i <= n - 1,
          "maximal_parabolic needs 1 <= i <= n-1, got n=" + std::to_string(n) + " i=" + std::to_string(i));
  return seaweed(Composition{{i, n - i}}, Composition{{n}});
}

LieAlgebra rais_algebra(int n, int p) {
  require(n >= 1 && p >= 1, "rais_algebra needs n, p >= 1");
  std::vector<BasisLabel> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) basis.push_back(BasisLabel::unit(i, j));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= p; ++c) basis.push_back(BasisLabel::translation(r, c));
  auto real = realize_labels(basis, n);
  return LieAlgebra("rais(" + std::to_string(n) + "," + std::to_string(p) + ")", std::move(basis),
                    Ambient::GeneralLinear, n + p, std::move(real));
}

LieAlgebra span_of_labels(int n, std::vector<BasisLabel> labels) {
  require(n >= 2, "span needs n >= 2");
  std::set<BasisLabel> seen;
  for (const auto& l : labels) {
    require(seen.insert(l).second, "duplicate basis label " + to_string(l));
    if (l.kind == BasisLabel::Kind::Cartan)
      require(l.i >= 1 && l.i < n, "Cartan index out of range: " + to_string(l));
    else if (l.kind == BasisLabel::Kind::MatrixUnit)
      require(l.i >= 1 && l.i <= n && l.j >= 1 && l.j <= n && l.i != l.j,
              "matrix unit out of range: " + to_string(l));
    else
      throw InvalidParameter("spans inside sl_n take Cartan and matrix-unit labels only");
  }
  std::string name = "span{";
  for (std::size_t k = 0; k < labels.size(); ++k) name += (k ? "," : "") + to_string(labels[k]);
  name += "}";
  auto real = realize_labels(labels);
  return LieAlgebra(std::move(name), std::move(labels), Ambient::SpecialLinear, n, std::move(real));
}

LieAlgebra span_of_matrices(std::string name, int n, std::vector<SparseMatrix> elements) {
  std::vector<Vector> cols;
  for (const auto& m : elements) {
    Rational trace = 0;
    for (const auto& e : m) {
      require(e.row >= 0 && e.row < n && e.col >= 0 && e.col < n, "matrix entry out of range");
      if (e.row == e.col) trace += e.value;
    }
    require(sgn(trace) == 0, "span_of_matrices: element is not traceless");
    cols.push_back(flatten(m, n));
  }
  require(rank(from_columns(cols, static_cast<std::size_t>(n) * n)) == elements.size(),
          "span_of_matrices: elements are linearly dependent");
  std::vector<BasisLabel> basis;
  for (std::size_t k = 0; k < elements.size(); ++k) basis.push_back(BasisLabel::generic(static_cast<int>(k) + 1));
  return LieAlgebra(std::move(name), std::move(basis), Ambient::SpecialLinear, n, std::move(elements));
}

LieAlgebra change_basis(const LieAlgebra& lie, const Matrix& change) {
  const std::size_t d = lie.dim();
  if (change.rows() != d || change.cols() != d) throw InvalidParameter("change of basis: dimension mismatch");
  const Matrix back = inverse(change);
  std::vector<Element> columns;
  for (std::size_t a = 0; a < d; ++a) columns.push_back(change.column(a));

  std::vector<SparseVector> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vector coords = matvec(back, bracket(lie, columns[a], columns[b]));
      table[a * d + b] = to_sparse(coords);
      table[b * d + a] = negated(table[a * d + b]);
    }

  std::vector<SparseMatrix> real;
  if (lie.has_realization())
    for (std::size_t a = 0; a < d; ++a) real.push_back(to_sparse_matrix(lie, columns[a]));

  std::vector<BasisLabel> basis;
  for (std::size_t k = 0; k < d; ++k) basis.push_back(BasisLabel::generic(static_cast<int>(k) + 1));
  return LieAlgebra(lie.name() + "'", std::move(basis), std::move(table), lie.ambient(), lie.ambient_n(),
                    std::move(real));
}

Element bracket(const LieAlgebra& lie, const Element& x, const Element& y) {
  const std::size_t d = lie.dim();
  if (x.size() != d || y.size() != d) throw InvalidParameter("bracket: element length mismatch");
  Element out(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational w = x[a] * y[b];
      for (const auto& [k, c] : lie.structure(a, b)) out[k] += w * c;
    }
  }
  return out;
}

namespace {

Element basis_bracket(const LieAlgebra& lie, std::size_t a, const Element& y) {
  Element out(lie.dim());
  for (std::size_t b = 0; b < lie.dim(); ++b) {
    if (sgn(y[b]) == 0) continue;
    for (const auto& [k, c] : lie.structure(a, b)) out[k] += y[b] * c;
  }
  return out;
}

Element dense(const SparseVector& v, std::size_t d) {
  Element out(d);
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

}  // namespace

bool closure_check(const LieAlgebra& lie) {
  if (!lie.brackets_in_span()) return false;
  const std::size_t d = lie.dim();
  for (std::size_t a = 0; a < d; ++a) {
    if (!lie.structure(a, a).empty()) return false;
    for (std::size_t b = a + 1; b < d; ++b)
      if (lie.structure(a, b) != negated(lie.structure(b, a))) return false;
  }
  if (lie.has_realization())
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        const auto expected = commutator(lie.realization(a), lie.realization(b));
        const auto got = to_sparse_matrix(lie, dense(lie.structure(a, b), d));
        if (got != expected) return false;
      }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Element ab = dense(lie.structure(a, b), d);
      for (std::size_t c = b + 1; c < d; ++c) {
        // [x_a,[x_b,x_c]] + [x_b,[x_c,x_a]] + [x_c,[x_a,x_b]]
        Element sum = basis_bracket(lie, a, dense(lie.structure(b, c), d));
        sum = sum + basis_bracket(lie, b, dense(lie.structure(c, a), d));
        sum = sum + basis_bracket(lie, c, ab);
        if (!is_zero(sum)) return false;
      }
    }
  return true;
}

namespace {

void require_sl(const LieAlgebra& lie) {
  if (lie.ambient() != Ambient::SpecialLinear)
    throw NoAmbient(lie.name() + " is not realized inside sl_n");
}

}  // namespace

LieAlgebra normalizer_in_ambient(const LieAlgebra& lie) {
  require_sl(lie);
  const int n = lie.ambient_n();
  const std::size_t len = static_cast<std::size_t>(n) * n;

  // Functionals on gl_n vanishing on L.
  Matrix rows(lie.dim(), len);
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    const Vector v = flatten(lie.realization(a), n);
    for (std::size_t k = 0; k < len; ++k) rows(a, k) = v[k];
  }
  const auto annihilator = kernel_basis(rows);

  const LieAlgebra ambient = sl(n);
  Matrix equations(lie.dim() * annihilator.size(), ambient.dim());
  for (std::size_t g = 0; g < ambient.dim(); ++g)
    for (std::size_t b = 0; b < lie.dim(); ++b) {
      const Vector image = flatten(commutator(ambient.realization(g), lie.realization(b)), n);
      for (std::size_t k = 0; k < annihilator.size(); ++k) {
        Rational value = 0;
        for (std::size_t t = 0; t < len; ++t)
          if (sgn(image[t]) != 0) value += annihilator[k][t] * image[t];
        equations(b * annihilator.size() + k, g) = value;
      }
    }
  const auto solutions = kernel_basis(equations);
  if (solutions.size() == lie.dim()) return lie;

  std::vector<SparseMatrix> elements;
  for (const auto& s : solutions) elements.push_back(to_sparse_matrix(ambient, s));
  return span_of_matrices("normalizer of " + lie.name(), n, std::move(elements));
}

bool is_saturated(const LieAlgebra& lie) { return normalizer_in_ambient(lie).dim() == lie.dim(); }

bool contains_cartan(const LieAlgebra& lie) {
  require_sl(lie);
  for (int k = 1; k < lie.ambient_n(); ++k)
    if (!lie.express(realize_label(BasisLabel::cartan(k), 0))) return false;
  return true;
}

SparseMatrix to_sparse_matrix(const LieAlgebra& lie, const Element& x) {
  if (!lie.has_realization()) throw NoAmbient(lie.name() + " has no matrix realization");
  if (x.size() != lie.dim()) throw InvalidParameter("element length mismatch");
  std::map<std::pair<int, int>, Rational> acc;
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (const auto& e : lie.realization(a)) acc[{e.row, e.col}] += x[a] * e.value;
  }
  SparseMatrix out;
  for (auto& [pos, v] : acc)
    if (sgn(v) != 0) out.push_back({pos.first, pos.second, v});
  return out;
}

Matrix to_matrix(const LieAlgebra& lie, const Element& x) {
  return dense_of(to_sparse_matrix(lie, x), lie.ambient_n());
}

}  // namespace frob
