#include "frob/spectrum.hpp"

#include <algorithm>
#include <set>

#include "frob/errors.hpp"

namespace frob {

std::size_t SpectrumReport::multiplicity(long lambda) const {
  const auto it = eigenvalues.find(lambda);
  return it == eigenvalues.end() ? 0 : it->second;
}

bool SpectrumReport::unbroken() const {
  if (eigenvalues.empty()) return true;
  const long lo = eigenvalues.begin()->first;
  const long hi = eigenvalues.rbegin()->first;
  return static_cast<long>(eigenvalues.size()) == hi - lo + 1;
}

Matrix ad_matrix(const LieAlgebra& lie, const Element& x) {
  const std::size_t d = lie.dim();
  if (x.size() != d) throw InvalidParameter("ad_matrix: element length mismatch");
  Matrix m(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : lie.structure(a, b)) m(k, b) += x[a] * c;
  }
  return m;
}

namespace {

Matrix shifted(Matrix m, long k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= k;
  return m;
}

/// Rows of the reduced echelon form of the given vectors: a basis of their span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t length) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), length);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < length; ++c) m(r, c) = vectors[r][c];
  const Echelon e = row_reduce(std::move(m));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const auto row = e.reduced.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v, std::size_t length) {
  if (is_zero(v)) return true;
  auto extended = basis;
  extended.push_back(v);
  return span_basis(extended, length).size() == span_basis(basis, length).size();
}

}  // namespace

SpectrumReport integer_spectrum(const LieAlgebra& lie, const Element& x) {
  const std::size_t d = lie.dim();
  const Matrix ad = ad_matrix(lie, x);
  SpectrumReport report;
  std::size_t found = 0;
  const long bound = static_cast<long>(d);
  for (long k = -bound; k <= bound && found < d; ++k) {
    const Matrix m = shifted(ad, k);
    if (rank(m) == d) continue;
    auto basis = kernel_basis(m);
    found += basis.size();
    report.eigenvalues[k] = basis.size();
    report.eigenspaces[k] = std::move(basis);
  }
  report.certified_semisimple = found == d;
  return report;
}

bool lemma1_check(const LieAlgebra& lie, const Functional& f, const SpectrumReport& report) {
  const Vector c = coefficients(lie, f);
  for (const auto& [lambda, vectors] : report.eigenspaces) {
    if (lambda == 1) continue;
    for (const auto& v : vectors) {
      Rational value = 0;
      for (std::size_t a = 0; a < c.size(); ++a) value += c[a] * v[a];
      if (sgn(value) != 0) return false;
    }
  }
  return true;
}

bool duality_check(const LieAlgebra& lie, const Functional& f, const SpectrumReport& report) {
  const Matrix form = bform_matrix(lie, f);
  for (const auto& [lambda, rows] : report.eigenspaces) {
    const auto partner = report.eigenspaces.find(1 - lambda);
    if (partner == report.eigenspaces.end() || partner->second.size() != rows.size()) return false;
    const auto& cols = partner->second;
    Matrix block(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Vector left = vecmat(rows[r], form);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < left.size(); ++k) block(r, c) += left[k] * cols[c][k];
    }
    if (rank(block) != rows.size()) return false;
  }
  return true;
}

bool derivation_check(const LieAlgebra& lie, const SpectrumReport& report) {
  for (const auto& [a, us] : report.eigenspaces)
    for (const auto& [b, vs] : report.eigenspaces) {
      const auto target = report.eigenspaces.find(a + b);
      for (const auto& u : us)
        for (const auto& v : vs) {
          const Element w = bracket(lie, u, v);
          if (target == report.eigenspaces.end()) {
            if (!is_zero(w)) return false;
          } else if (!in_span(target->second, w, lie.dim())) {
            return false;
          }
        }
    }
  return true;
}

bool eigenvector_check(const LieAlgebra& lie, const Element& x, const SpectrumReport& report) {
  const Matrix ad = ad_matrix(lie, x);
  for (const auto& [lambda, vectors] : report.eigenspaces)
    for (const auto& v : vectors)
      if (matvec(ad, v) != Rational(lambda) * v) return false;
  return true;
}

bool top_weight_exclusion(const LieAlgebra& lie, const SpectrumReport& report) {
  if (report.eigenvalues.empty()) return true;
  const long top = report.eigenvalues.rbegin()->first;
  if (top < 1) return true;
  const auto& space = report.eigenspaces.at(top);
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    const auto& l = lie.label(a);
    if (l.kind != BasisLabel::Kind::MatrixUnit || l.i == l.j) continue;
    if (in_span(space, unit_vector(lie.dim(), a), lie.dim()) && lie.index_of(BasisLabel::unit(l.j, l.i)))
      return false;
  }
  return true;
}

InvarianceResult spectrum_invariance_check(const LieAlgebra& lie, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  InvarianceResult result;
  std::set<std::map<BasisLabel, Rational>> seen;
  for (std::size_t draws = 0; result.functionals.size() < trials && draws < trials * kDefaultMaxAttempts;
       ++draws) {
    Functional f = random_functional(lie, rng);
    if (seen.count(f.terms) || !is_frobenius(lie, f)) continue;
    seen.insert(f.terms);
    result.functionals.push_back(std::move(f));
  }
  if (result.functionals.size() < trials)
    throw NotFrobenius(lie.name() + ": could not sample " + std::to_string(trials) + " Frobenius functionals");

  result.identical = true;
  for (const auto& f : result.functionals) {
    const auto report = integer_spectrum(lie, principal_element(lie, f));
    if (!report.certified_semisimple) result.identical = false;
    result.spectra.push_back(report.eigenvalues);
    if (result.spectra.back() != result.spectra.front()) result.identical = false;
  }
  return result;
}

namespace {

/// Whether the subalgebra generated by `generators` spans `expected` dimensions.
bool generates(const LieAlgebra& lie, const std::vector<Element>& generators, std::size_t expected) {
  const std::size_t d = lie.dim();
  std::vector<Vector> total = span_basis(generators, d);
  std::vector<Vector> level = total;
  while (!level.empty() && total.size() < expected) {
    std::vector<Vector> next;
    for (const auto& g : generators)
      for (const auto& v : level) {
        Element w = bracket(lie, g, v);
        if (!is_zero(w)) next.push_back(std::move(w));
      }
    level = span_basis(next, d);
    auto grown = total;
    grown.insert(grown.end(), level.begin(), level.end());
    grown = span_basis(grown, d);
    if (grown.size() == total.size()) break;
    total = std::move(grown);
  }
  return total.size() == expected;
}

}  // namespace

std::pair<bool, bool> generation_check(const LieAlgebra& lie, const SpectrumReport& report) {
  std::size_t positive = 0, negative = 0;
  for (const auto& [lambda, m] : report.eigenvalues) {
    if (lambda > 0) positive += m;
    if (lambda < 0) negative += m;
  }
  const auto gens = [&](long lambda) {
    const auto it = report.eigenspaces.find(lambda);
    return it == report.eigenspaces.end() ? std::vector<Element>{} : it->second;
  };
  return {generates(lie, gens(1), positive), generates(lie, gens(-1), negative)};
}

}  // namespace frob
