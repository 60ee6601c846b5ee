#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "frob/lie.hpp"
#include "frob/rng.hpp"

namespace frob {

/// Element of the dual space, as coordinates over the dual basis.
struct Functional {
  std::map<BasisLabel, Rational> terms;

  Functional& add(const BasisLabel& label, const Rational& c);
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// Dense coefficients of F over L's dual basis. Throws InvalidParameter when
/// F has support outside L's basis.
Vector coefficients(const LieAlgebra& lie, const Functional& f);
Functional functional_from(const LieAlgebra& lie, std::span<const Rational> coeffs);

/// F(x)
Rational evaluate(const LieAlgebra& lie, const Functional& f, const Element& x);

/// Matrix of B_F(x_a, x_b) = F([x_a, x_b]).
Matrix bform_matrix(const LieAlgebra& lie, const Functional& f);

/// dim ker B_F
std::size_t index_of_functional(const LieAlgebra& lie, const Functional& f);

bool is_frobenius(const LieAlgebra& lie, const Functional& f);

/// Functional with independent integer coefficients uniform in
/// [-2 dim, 2 dim].
Functional random_functional(const LieAlgebra& lie, Rng& rng);

struct IndexReport {
  std::size_t dim = 0;
  std::size_t index = 0;
  Functional witness;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultTrials = 5;
inline constexpr std::size_t kDefaultMaxAttempts = 50;

/// Minimum of dim ker B_F over `trials` sampled functionals; trial k draws
/// from Rng::for_trial(seed, k). Trials run concurrently; the earliest trial
/// achieving the minimum is the witness.
IndexReport generic_index(const LieAlgebra& lie, std::size_t trials = kDefaultTrials,
                          std::uint64_t seed = 0);

/// First sampled functional (attempt k uses Rng::for_trial(seed, k)) whose
/// form is nondegenerate. Throws NotFrobeniusOrUnlucky.
Functional find_frobenius_functional(const LieAlgebra& lie,
                                     std::size_t max_attempts = kDefaultMaxAttempts,
                                     std::uint64_t seed = 0);

/// The unique F^ with F([F^, x]) = F(x) for all x. Throws NotFrobenius.
Element principal_element(const LieAlgebra& lie, const Functional& f);

}  // namespace frob
