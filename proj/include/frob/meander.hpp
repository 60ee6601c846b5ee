#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frob/lie.hpp"

namespace frob {

/// Vertices 1..n; arcs are stored as (smaller, larger) pairs in the order
/// they were produced.
struct MeanderGraph {
  int n = 0;
  std::vector<std::pair<int, int>> top_arcs;
  std::vector<std::pair<int, int>> bottom_arcs;
};

struct ComponentCount {
  int cycles = 0;
  int paths = 0;  // isolated vertices included
  friend bool operator==(const ComponentCount&, const ComponentCount&) = default;
};

MeanderGraph build_meander(const Composition& top, const Composition& bottom);
ComponentCount count_components(const MeanderGraph& g);

/// 2 * cycles + paths - 1
int meander_index_sl(const Composition& top, const Composition& bottom);

std::string to_dot(const MeanderGraph& g);

}  // namespace frob
