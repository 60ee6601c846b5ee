#pragma once

#include <array>
#include <map>

#include "frob/index.hpp"
#include "frob/lie.hpp"

namespace frob {

/// Matrix unit e_{row,col} of gl_N, 1-based.
struct UnitLabel {
  int row = 0;
  int col = 0;
  auto operator<=>(const UnitLabel&) const = default;
};

/// Element of gl_N (x) gl_N over the matrix-unit basis.
struct Tensor2 {
  int n = 0;
  std::map<std::array<UnitLabel, 2>, Rational> terms;

  Tensor2 flip() const;
  void add(const std::array<UnitLabel, 2>& key, const Rational& c);
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

/// Element of gl_N (x) gl_N (x) gl_N over the matrix-unit basis.
struct Tensor3 {
  int n = 0;
  std::map<std::array<UnitLabel, 3>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const std::array<UnitLabel, 3>& key, const Rational& c);
};

/// r = sum_{a,b} (M^-1)_{ab} x_a (x) x_b with M the matrix of B_F, expanded in
/// matrix units. Throws NotFrobenius or NoAmbient.
Tensor2 r_matrix(const LieAlgebra& lie, const Functional& f);

/// [r12, r13] + [r12, r23] + [r13, r23].
Tensor3 cybe_residual(const Tensor2& r);

bool is_cybe_solution(const Tensor2& r);

}  // namespace frob
