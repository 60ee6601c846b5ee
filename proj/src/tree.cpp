#include "frob/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "frob/errors.hpp"

namespace frob {

namespace {

bool edge_in_range(const EdgeSet& s, std::pair<int, int> e) {
  return e.first >= 1 && e.first <= s.n && e.second >= 1 && e.second <= s.n && e.first != e.second;
}

void require_tree(const EdgeSet& s) {
  if (!validate_tree(s)) throw NotATree("edge set is not a spanning tree on " + std::to_string(s.n) + " vertices");
}

/// Vertices reachable from `start` without using edge number `skip`.
std::vector<bool> reachable(const EdgeSet& s, int start, std::size_t skip) {
  std::vector<bool> seen(s.n + 1, false);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < s.edges.size(); ++k) {
      if (k == skip) continue;
      const auto [a, b] = s.edges[k];
      const int w = a == v ? b : b == v ? a : 0;
      if (w != 0 && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool validate_tree(const EdgeSet& s) {
  if (s.n < 1 || s.edges.size() != static_cast<std::size_t>(s.n - 1)) return false;
  for (const auto& e : s.edges)
    if (!edge_in_range(s, e)) return false;
  const auto seen = reachable(s, 1, s.edges.size());
  return std::count(seen.begin() + 1, seen.end(), true) == s.n;
}

Functional small_functional(const EdgeSet& s) {
  require_tree(s);
  Functional f;
  for (auto [i, j] : s.edges) f.add(BasisLabel::unit(i, j), 1);
  return f;
}

DiagonalElement d_edge(const EdgeSet& s, std::pair<int, int> edge) {
  require_tree(s);
  const auto it = std::find(s.edges.begin(), s.edges.end(), edge);
  if (it == s.edges.end())
    throw EdgeNotInSet("(" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ") is not in S");
  const auto source_side = reachable(s, edge.first, static_cast<std::size_t>(it - s.edges.begin()));
  const auto size = std::count(source_side.begin() + 1, source_side.end(), true);
  const Rational share = Rational(static_cast<long>(size)) / static_cast<long>(s.n);
  DiagonalElement d(s.n);
  for (int k = 1; k <= s.n; ++k) d[k - 1] = source_side[k] ? Rational(1 - share) : Rational(-share);
  return d;
}

DiagonalElement principal_from_tree(const EdgeSet& s) {
  require_tree(s);
  DiagonalElement total(s.n);
  for (const auto& e : s.edges) {
    const auto d = d_edge(s, e);
    for (int k = 0; k < s.n; ++k) total[k] += d[k];
  }
  return total;
}

int path_weight(const EdgeSet& s, int i, int j) {
  require_tree(s);
  if (i == j || i < 1 || j < 1 || i > s.n || j > s.n)
    throw InvalidParameter("path_weight needs distinct vertices in range");
  // Breadth-first search from i, remembering the signed step into each vertex.
  std::vector<int> parent(s.n + 1, 0), step(s.n + 1, 0);
  std::deque<int> queue{i};
  parent[i] = i;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [a, b] : s.edges) {
      int w = 0, sign = 0;
      if (a == v) w = b, sign = 1;
      else if (b == v) w = a, sign = -1;
      if (w != 0 && parent[w] == 0) {
        parent[w] = v;
        step[w] = sign;
        queue.push_back(w);
      }
    }
  }
  int weight = 0;
  for (int v = j; v != i; v = parent[v]) weight += step[v];
  return weight;
}

EdgeSet random_tree(int n, Rng& rng) {
  if (n < 1) throw InvalidParameter("random_tree needs n >= 1");
  EdgeSet s{n, {}};
  if (n == 1) return s;
  std::vector<int> code(n - 2);
  for (auto& c : code) c = static_cast<int>(rng.uniform(1, n));
  std::vector<int> degree(n + 1, 1);
  for (int c : code) ++degree[c];
  std::vector<std::pair<int, int>> undirected;
  for (int c : code) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    undirected.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> last;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) last.push_back(v);
  undirected.emplace_back(last[0], last[1]);
  for (auto [a, b] : undirected) s.edges.push_back(rng.uniform(0, 1) ? std::pair{a, b} : std::pair{b, a});
  return s;
}

Element diagonal_element(const LieAlgebra& lie, const DiagonalElement& d) {
  if (lie.ambient() != Ambient::SpecialLinear || static_cast<std::size_t>(lie.ambient_n()) != d.size())
    throw HypothesisViolated(lie.name() + " is not a subalgebra of sl_" + std::to_string(d.size()));
  SparseMatrix m;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (sgn(d[k]) != 0) m.push_back({static_cast<int>(k), static_cast<int>(k), d[k]});
  auto x = lie.express(m);
  if (!x) throw HypothesisViolated("diagonal element is not in " + lie.name());
  return *x;
}

Theorem5Result theorem5_check(const LieAlgebra& lie, const EdgeSet& s) {
  require_tree(s);
  if (lie.ambient() != Ambient::SpecialLinear || lie.ambient_n() != s.n)
    throw HypothesisViolated(lie.name() + " is not a subalgebra of sl_" + std::to_string(s.n));
  if (!contains_cartan(lie)) throw HypothesisViolated(lie.name() + " does not contain the Cartan subalgebra");
  for (auto [i, j] : s.edges)
    if (!lie.index_of(BasisLabel::unit(i, j)))
      throw HypothesisViolated("e" + std::to_string(i) + "," + std::to_string(j) + " is not in " + lie.name());

  Theorem5Result result;
  const Functional f = small_functional(s);
  result.from_tree = principal_from_tree(s);
  result.frobenius = is_frobenius(lie, f);
  if (!result.frobenius) {
    result.reason = "F_S is not a Frobenius functional on " + lie.name();
    return result;
  }
  result.principal = principal_element(lie, f);
  result.holds = result.principal == diagonal_element(lie, result.from_tree);
  if (!result.holds) result.reason = "principal element differs from D_S";
  return result;
}

}  // namespace frob
