#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/errors.hpp"
#include "frob/lie.hpp"
#include "oracles.hpp"

using namespace frob;

namespace {

Element basis_vector(const LieAlgebra& lie, const BasisLabel& l) {
  const auto a = lie.index_of(l);
  REQUIRE(a.has_value());
  return unit_vector(lie.dim(), *a);
}

bool has(const LieAlgebra& lie, int i, int j) { return lie.index_of(BasisLabel::unit(i, j)).has_value(); }

}  // namespace

TEST_CASE("sl(n)") {
  CHECK(sl(2).dim() == 3);
  CHECK(sl(3).dim() == 8);
  CHECK_THROWS_AS(sl(1), InvalidParameter);
  const LieAlgebra g = sl(3);
  CHECK(g.label(0) == BasisLabel::cartan(1));
  CHECK(g.label(1) == BasisLabel::cartan(2));
  CHECK(g.label(2) == BasisLabel::unit(1, 2));
  CHECK(g.label(7) == BasisLabel::unit(3, 2));
  CHECK(bracket(g, basis_vector(g, BasisLabel::unit(1, 2)), basis_vector(g, BasisLabel::unit(2, 1))) ==
        basis_vector(g, BasisLabel::cartan(1)));
}

TEST_CASE("bracket examples") {
  const LieAlgebra g2 = sl(2);
  const Element h = basis_vector(g2, BasisLabel::cartan(1));
  const Element e = basis_vector(g2, BasisLabel::unit(1, 2));
  CHECK(bracket(g2, h, e) == Rational(2) * e);
  const Element x{3, Rational(1, 2), -1};
  CHECK(is_zero(bracket(g2, x, x)));
  const LieAlgebra g3 = sl(3);
  CHECK(bracket(g3, basis_vector(g3, BasisLabel::unit(1, 2)), basis_vector(g3, BasisLabel::unit(2, 3))) ==
        basis_vector(g3, BasisLabel::unit(1, 3)));
}

TEST_CASE("structure constants agree with dense matrix commutators") {
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra g = sl(n);
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b) {
        const Matrix expected =
            oracle::commutator(oracle::label_matrix(g.label(a), n), oracle::label_matrix(g.label(b), n));
        CHECK(to_matrix(g, bracket(g, unit_vector(g.dim(), a), unit_vector(g.dim(), b))) == expected);
      }
  }
}

TEST_CASE("seaweed membership") {
  CHECK(seaweed(Composition{{4}}, Composition{{4}}).dim() == 15);
  const LieAlgebra s = seaweed(Composition{{1, 2}}, Composition{{3}});
  CHECK(s.dim() == 6);
  CHECK(has(s, 3, 2));
  CHECK_FALSE(has(s, 2, 1));
  CHECK_FALSE(has(s, 3, 1));
  const LieAlgebra borel = seaweed(Composition{{1, 1}}, Composition{{2}});
  CHECK(borel.basis() == std::vector<BasisLabel>{BasisLabel::cartan(1), BasisLabel::unit(1, 2)});
  CHECK_THROWS_AS(seaweed(Composition{{2, 2}}, Composition{{3}}), InvalidParameter);
  CHECK_THROWS_AS(seaweed(Composition{{2, 0}}, Composition{{2}}), InvalidParameter);
}

TEST_CASE("maximal parabolics") {
  CHECK(maximal_parabolic(3, 1).dim() == 6);
  CHECK(maximal_parabolic(4, 2).dim() == 11);
  CHECK(maximal_parabolic(2, 1).dim() == 2);
  CHECK_THROWS_AS(maximal_parabolic(4, 4), InvalidParameter);
  CHECK_THROWS_AS(maximal_parabolic(4, 0), InvalidParameter);
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i) {
      const LieAlgebra p = maximal_parabolic(n, i);
      CHECK(p.dim() == static_cast<std::size_t>(n * n - 1 - i * (n - i)));
      CHECK(p.basis() == seaweed(Composition{{i, n - i}}, Composition{{n}}).basis());
    }
}

TEST_CASE("rais family") {
  CHECK(rais_algebra(2, 1).dim() == 6);
  CHECK(rais_algebra(3, 2).dim() == 15);
  CHECK_THROWS_AS(rais_algebra(0, 1), InvalidParameter);
  const LieAlgebra r = rais_algebra(2, 2);
  const Element t11 = basis_vector(r, BasisLabel::translation(1, 1));
  CHECK(bracket(r, basis_vector(r, BasisLabel::unit(1, 1)), t11) == t11);
  CHECK(is_zero(bracket(r, basis_vector(r, BasisLabel::unit(2, 2)), t11)));
  CHECK(bracket(r, basis_vector(r, BasisLabel::unit(2, 1)), t11) == basis_vector(r, BasisLabel::translation(2, 1)));
  CHECK(closure_check(r));
}

TEST_CASE("rais translations form an abelian ideal") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 3; ++p) {
      const LieAlgebra r = rais_algebra(n, p);
      for (std::size_t a = 0; a < r.dim(); ++a)
        for (std::size_t b = 0; b < r.dim(); ++b) {
          if (r.label(b).kind != BasisLabel::Kind::Translation) continue;
          for (const auto& [k, c] : r.structure(a, b)) CHECK(r.label(k).kind == BasisLabel::Kind::Translation);
          if (r.label(a).kind == BasisLabel::Kind::Translation) CHECK(r.structure(a, b).empty());
        }
    }
}

TEST_CASE("closure_check") {
  CHECK(closure_check(seaweed(Composition{{2, 1}}, Composition{{1, 2}})));
  CHECK_FALSE(closure_check(span_of_labels(2, {BasisLabel::unit(1, 2), BasisLabel::unit(2, 1)})));
  CHECK(closure_check(span_of_labels(3, {BasisLabel::unit(1, 2), BasisLabel::cartan(1)})));
  CHECK(closure_check(rais_algebra(2, 2)));
  CHECK_THROWS_AS(span_of_labels(2, {BasisLabel::unit(1, 1)}), InvalidParameter);
}

TEST_CASE("every seaweed with n <= 4 passes antisymmetry and Jacobi; transposes have equal dimension") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& top : compositions(n))
      for (const auto& bottom : compositions(n)) {
        const LieAlgebra s = seaweed(top, bottom);
        CHECK(closure_check(s));
        CHECK(s.dim() == seaweed(bottom, top).dim());
        std::size_t units = 0;
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (i != j && top.block_of(i) <= top.block_of(j) && bottom.block_of(i) >= bottom.block_of(j)) ++units;
        CHECK(s.dim() == static_cast<std::size_t>(n - 1) + units);
      }
}

TEST_CASE("compositions") {
  CHECK(compositions(3).size() == 4);
  CHECK(compositions(6).size() == 32);
  CHECK(compositions(3).front() == Composition{{1, 1, 1}});
  CHECK(compositions(3).back() == Composition{{3}});
}

TEST_CASE("normalizer_in_ambient") {
  const LieAlgebra borel = maximal_parabolic(2, 1);
  CHECK(normalizer_in_ambient(borel).dim() == 2);
  CHECK(is_saturated(borel));
  CHECK(is_saturated(maximal_parabolic(3, 1)));
  const LieAlgebra line = span_of_labels(2, {BasisLabel::unit(1, 2)});
  const LieAlgebra n = normalizer_in_ambient(line);
  CHECK(n.dim() == 2);
  CHECK(n.express(sparse_of(oracle::label_matrix(BasisLabel::cartan(1), 2))).has_value());
  CHECK_FALSE(is_saturated(line));
  CHECK_THROWS_AS(normalizer_in_ambient(rais_algebra(2, 1)), NoAmbient);
}

TEST_CASE("contains_cartan") {
  CHECK(contains_cartan(seaweed(Composition{{2, 1}}, Composition{{1, 2}})));
  CHECK_FALSE(contains_cartan(span_of_labels(3, {BasisLabel::unit(1, 2), BasisLabel::cartan(1)})));
  CHECK(contains_cartan(sl(4)));
  CHECK_THROWS_AS(contains_cartan(rais_algebra(2, 1)), NoAmbient);
}

TEST_CASE("change of basis keeps the algebra") {
  Rng rng(9);
  const LieAlgebra p = maximal_parabolic(3, 1);
  Matrix change;
  do {
    change = oracle::random_matrix(rng, p.dim(), p.dim(), 2);
  } while (sgn(oracle::determinant(change)) == 0);
  const LieAlgebra q = change_basis(p, change);
  CHECK(closure_check(q));
  // Brackets computed in either basis describe the same matrices.
  for (std::size_t a = 0; a < q.dim(); ++a)
    for (std::size_t b = 0; b < q.dim(); ++b) {
      const Element in_q = bracket(q, unit_vector(q.dim(), a), unit_vector(q.dim(), b));
      const Element in_p = bracket(p, change.column(a), change.column(b));
      CHECK(to_matrix(q, in_q) == to_matrix(p, in_p));
    }
}
