#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "frob/index.hpp"
#include "frob/lie.hpp"

namespace frob {

/// Integer eigenvalues of ad F^ with their eigenspaces.
struct SpectrumReport {
  std::map<long, std::size_t> eigenvalues;
  std::map<long, std::vector<Element>> eigenspaces;
  /// The eigenspaces found add up to the whole algebra, so ad F^ is
  /// diagonalizable with integer eigenvalues.
  bool certified_semisimple = false;

  std::size_t multiplicity(long lambda) const;
  /// No integer gaps between the smallest and largest eigenvalue.
  bool unbroken() const;
};

/// Column b holds the coordinates of [x, x_b].
Matrix ad_matrix(const LieAlgebra& lie, const Element& x);

/// Nullity of ad x - k for every integer k in [-dim, dim]. The scan stops
/// early once the eigenspaces found fill the algebra.
SpectrumReport integer_spectrum(const LieAlgebra& lie, const Element& x);

/// F vanishes on every eigenspace other than the 1-eigenspace.
bool lemma1_check(const LieAlgebra& lie, const Functional& f, const SpectrumReport& report);

/// For every eigenvalue a: dim f_a = dim f_{1-a}, and B_F restricted to
/// f_a x f_{1-a} has full rank.
bool duality_check(const LieAlgebra& lie, const Functional& f, const SpectrumReport& report);

/// [f_a, f_b] lies in f_{a+b} (zero when a+b is not an eigenvalue), checked on
/// eigenspace basis vectors.
bool derivation_check(const LieAlgebra& lie, const SpectrumReport& report);

/// Every reported eigenvector v satisfies ad(x) v = lambda v.
bool eigenvector_check(const LieAlgebra& lie, const Element& x, const SpectrumReport& report);

/// For L with matrix-unit labels: if e_ij realizes the largest eigenvalue
/// m >= 1 then e_ji is not in L.
bool top_weight_exclusion(const LieAlgebra& lie, const SpectrumReport& report);

struct InvarianceResult {
  bool identical = false;
  std::vector<Functional> functionals;
  std::vector<std::map<long, std::size_t>> spectra;
};

/// Draws `trials` distinct Frobenius functionals from Rng(seed) and compares
/// the eigenvalue multisets of their principal elements. Throws NotFrobenius
/// when no Frobenius functional turns up.
InvarianceResult spectrum_invariance_check(const LieAlgebra& lie, std::size_t trials,
                                           std::uint64_t seed);

/// (f_1 generates the positive part, f_-1 generates the negative part).
std::pair<bool, bool> generation_check(const LieAlgebra& lie, const SpectrumReport& report);

}  // namespace frob
