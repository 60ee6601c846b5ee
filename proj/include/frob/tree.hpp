#pragma once

#include <utility>
#include <vector>

#include "frob/index.hpp"
#include "frob/lie.hpp"
#include "frob/rng.hpp"

namespace frob {

/// Directed pairs (i, j), 1-based, on vertices 1..n.
struct EdgeSet {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Diagonal n x n matrix, stored as its diagonal.
using DiagonalElement = std::vector<Rational>;

/// n - 1 edges whose underlying undirected graph is connected.
bool validate_tree(const EdgeSet& s);

/// F_S = sum over S of e*_ij. Throws NotATree.
Functional small_functional(const EdgeSet& s);

/// eps_k summed over the vertices left on the source side when s is removed.
/// Throws EdgeNotInSet, NotATree.
DiagonalElement d_edge(const EdgeSet& s, std::pair<int, int> edge);

/// D_S, the sum of d_edge over S. Throws NotATree.
DiagonalElement principal_from_tree(const EdgeSet& s);

/// Signed count of edges along the tree path from i to j (forward +1,
/// backward -1). Throws NotATree or InvalidParameter when i == j.
int path_weight(const EdgeSet& s, int i, int j);

/// Uniform labelled tree (random Pruefer sequence), each edge oriented by a
/// fair coin.
EdgeSet random_tree(int n, Rng& rng);

/// x_1 e_11 + ... + x_n e_nn as an element of L. Requires the diagonal to be
/// traceless and every h_k in L; throws HypothesisViolated otherwise.
Element diagonal_element(const LieAlgebra& lie, const DiagonalElement& d);

struct Theorem5Result {
  bool holds = false;
  bool frobenius = false;
  std::string reason;
  DiagonalElement from_tree;
  Element principal;
};

/// Checks that F_S is Frobenius on L and that its principal element is D_S.
/// Throws HypothesisViolated when L lacks the Cartan or an edge of S.
Theorem5Result theorem5_check(const LieAlgebra& lie, const EdgeSet& s);

}  // namespace frob
