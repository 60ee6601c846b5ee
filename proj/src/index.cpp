#include "frob/index.hpp"

#include <future>

#include "frob/errors.hpp"

namespace frob {

Functional& Functional::add(const BasisLabel& label, const Rational& c) {
  Rational& slot = terms[label];
  slot += c;
  if (sgn(slot) == 0) terms.erase(label);
  return *this;
}

Vector coefficients(const LieAlgebra& lie, const Functional& f) {
  Vector v(lie.dim());
  for (const auto& [label, c] : f.terms) {
    const auto a = lie.index_of(label);
    if (!a) throw InvalidParameter("functional term " + to_string(label) + " is not in " + lie.name());
    v[*a] = c;
  }
  return v;
}

Functional functional_from(const LieAlgebra& lie, std::span<const Rational> coeffs) {
  if (coeffs.size() != lie.dim()) throw InvalidParameter("functional length mismatch");
  Functional f;
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    if (sgn(coeffs[a]) != 0) f.terms[lie.label(a)] = coeffs[a];
  return f;
}

Rational evaluate(const LieAlgebra& lie, const Functional& f, const Element& x) {
  const Vector c = coefficients(lie, f);
  Rational value = 0;
  for (std::size_t a = 0; a < c.size(); ++a)
    if (sgn(c[a]) != 0) value += c[a] * x[a];
  return value;
}

Matrix bform_matrix(const LieAlgebra& lie, const Functional& f) {
  const Vector c = coefficients(lie, f);
  const std::size_t d = lie.dim();
  Matrix m(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Rational value = 0;
      for (const auto& [k, s] : lie.structure(a, b))
        if (sgn(c[k]) != 0) value += c[k] * s;
      m(b, a) = -value;
      m(a, b) = std::move(value);
    }
  return m;
}

std::size_t index_of_functional(const LieAlgebra& lie, const Functional& f) {
  return lie.dim() - rank(bform_matrix(lie, f));
}

bool is_frobenius(const LieAlgebra& lie, const Functional& f) { return index_of_functional(lie, f) == 0; }

Functional random_functional(const LieAlgebra& lie, Rng& rng) {
  const auto bound = 2 * static_cast<std::int64_t>(lie.dim());
  Functional f;
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    const std::int64_t c = rng.uniform(-bound, bound);
    if (c != 0) f.terms[lie.label(a)] = Rational(static_cast<long>(c));
  }
  return f;
}

IndexReport generic_index(const LieAlgebra& lie, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidParameter("generic_index needs at least one trial");
  struct Trial {
    Functional f;
    std::size_t index;
  };
  std::vector<std::future<Trial>> pending;
  pending.reserve(trials);
  for (std::size_t k = 0; k < trials; ++k)
    pending.push_back(std::async(std::launch::async, [&lie, seed, k] {
      Rng rng = Rng::for_trial(seed, k);
      Functional f = random_functional(lie, rng);
      const std::size_t index = index_of_functional(lie, f);
      return Trial{std::move(f), index};
    }));

  IndexReport report;
  report.dim = lie.dim();
  report.index = lie.dim() + 1;
  report.trials = trials;
  report.seed = seed;
  for (auto& p : pending) {
    Trial t = p.get();
    if (t.index < report.index) {
      report.index = t.index;
      report.witness = std::move(t.f);
    }
  }
  return report;
}

Functional find_frobenius_functional(const LieAlgebra& lie, std::size_t max_attempts, std::uint64_t seed) {
  for (std::size_t k = 0; k < max_attempts; ++k) {
    Rng rng = Rng::for_trial(seed, k);
    Functional f = random_functional(lie, rng);
    if (is_frobenius(lie, f)) return f;
  }
  throw NotFrobeniusOrUnlucky(lie.name() + ": no Frobenius functional in " + std::to_string(max_attempts) +
                              " attempts");
}

Element principal_element(const LieAlgebra& lie, const Functional& f) {
  const Matrix m = bform_matrix(lie, f);
  try {
    return solve_row(coefficients(lie, f), m);
  } catch (const SingularMatrix&) {
    throw NotFrobenius("B_F is degenerate on " + lie.name());
  }
}

}  // namespace frob
