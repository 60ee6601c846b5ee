#include "frob/meander.hpp"

#include <numeric>
#include <sstream>

#include "frob/errors.hpp"

namespace frob {

namespace {

std::vector<std::pair<int, int>> nested_arcs(const Composition& c) {
  std::vector<std::pair<int, int>> arcs;
  int start = 1;
  for (int part : c.parts) {
    if (part <= 0) throw InvalidParameter("composition parts must be positive");
    for (int l = start, r = start + part - 1; l < r; ++l, --r) arcs.emplace_back(l, r);
    start += part;
  }
  return arcs;
}

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

}  // namespace

MeanderGraph build_meander(const Composition& top, const Composition& bottom) {
  if (top.total() != bottom.total())
    throw InvalidParameter("compositions sum to " + std::to_string(top.total()) + " and " +
                           std::to_string(bottom.total()));
  return MeanderGraph{top.total(), nested_arcs(top), nested_arcs(bottom)};
}

ComponentCount count_components(const MeanderGraph& g) {
  DisjointSets sets(g.n);
  for (const auto* arcs : {&g.top_arcs, &g.bottom_arcs})
    for (auto [u, v] : *arcs) sets.unite(u - 1, v - 1);

  std::vector<int> vertices(g.n, 0), edges(g.n, 0);
  for (int v = 0; v < g.n; ++v) ++vertices[sets.find(v)];
  for (const auto* arcs : {&g.top_arcs, &g.bottom_arcs})
    for (auto [u, v] : *arcs) ++edges[sets.find(u - 1)];

  ComponentCount count;
  for (int root = 0; root < g.n; ++root) {
    if (vertices[root] == 0) continue;
    // Every vertex has degree <= 2, so a component is a cycle exactly when it
    // has as many edges as vertices, and a path otherwise.
    if (edges[root] == vertices[root])
      ++count.cycles;
    else
      ++count.paths;
  }
  return count;
}

int meander_index_sl(const Composition& top, const Composition& bottom) {
  const auto c = count_components(build_meander(top, bottom));
  return 2 * c.cycles + c.paths - 1;
}

std::string to_dot(const MeanderGraph& g) {
  std::ostringstream out;
  out << "graph meander {\n";
  out << "  node [shape=circle];\n";
  out << "  {\n    rank=same;\n";
  for (int v = 1; v <= g.n; ++v) out << "    " << v << ";\n";
  out << "  }\n";
  for (auto [u, v] : g.top_arcs) out << "  " << u << " -- " << v << " [class=\"top\", style=solid];\n";
  for (auto [u, v] : g.bottom_arcs) out << "  " << u << " -- " << v << " [class=\"bottom\", style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace frob
