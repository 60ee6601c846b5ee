#include "frob/cybe.hpp"

#include <vector>

#include "frob/errors.hpp"

namespace frob {

Tensor2 Tensor2::flip() const {
  Tensor2 out{n, {}};
  for (const auto& [key, c] : terms) out.terms[{key[1], key[0]}] = c;
  return out;
}

void Tensor2::add(const std::array<UnitLabel, 2>& key, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = terms[key];
  slot += c;
  if (sgn(slot) == 0) terms.erase(key);
}

void Tensor3::add(const std::array<UnitLabel, 3>& key, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = terms[key];
  slot += c;
  if (sgn(slot) == 0) terms.erase(key);
}

Tensor2 r_matrix(const LieAlgebra& lie, const Functional& f) {
  if (!lie.has_realization()) throw NoAmbient(lie.name() + " has no matrix realization");
  Matrix inv;
  try {
    inv = inverse(bform_matrix(lie, f));
  } catch (const SingularMatrix&) {
    throw NotFrobenius("B_F is degenerate on " + lie.name());
  }
  Tensor2 r{lie.ambient_n(), {}};
  for (std::size_t a = 0; a < lie.dim(); ++a)
    for (std::size_t b = 0; b < lie.dim(); ++b) {
      if (sgn(inv(a, b)) == 0) continue;
      for (const auto& x : lie.realization(a))
        for (const auto& y : lie.realization(b))
          r.add({UnitLabel{x.row + 1, x.col + 1}, UnitLabel{y.row + 1, y.col + 1}}, inv(a, b) * x.value * y.value);
    }
  return r;
}

namespace {

struct Term {
  UnitLabel left;
  UnitLabel right;
  Rational c;
};

/// [e_ij, e_kl] = d_jk e_il - d_li e_kj, as at most two (unit, sign) pairs.
template <typename Emit>
void unit_bracket(const UnitLabel& x, const UnitLabel& y, Emit&& emit) {
  if (x.col == y.row) emit(UnitLabel{x.row, y.col}, 1);
  if (y.col == x.row) emit(UnitLabel{y.row, x.col}, -1);
}

}  // namespace

Tensor3 cybe_residual(const Tensor2& r) {
  std::vector<Term> terms;
  terms.reserve(r.terms.size());
  for (const auto& [key, c] : r.terms) terms.push_back({key[0], key[1], c});

  Tensor3 out{r.n, {}};
  for (const auto& s : terms)
    for (const auto& t : terms) {
      const Rational w = s.c * t.c;
      // [r12, r13]: [a, c] (x) b (x) d
      unit_bracket(s.left, t.left, [&](UnitLabel u, int sign) { out.add({u, s.right, t.right}, sign * w); });
      // [r12, r23]: a (x) [b, c] (x) d
      unit_bracket(s.right, t.left, [&](UnitLabel u, int sign) { out.add({s.left, u, t.right}, sign * w); });
      // [r13, r23]: a (x) c (x) [b, d]
      unit_bracket(s.right, t.right, [&](UnitLabel u, int sign) { out.add({s.left, t.left, u}, sign * w); });
    }
  return out;
}

bool is_cybe_solution(const Tensor2& r) { return cybe_residual(r).is_zero(); }

}  // namespace frob
