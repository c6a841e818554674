#pragma once

#include <cstddef>
#include <vector>

#include "ddpart/graph.hpp"

namespace ddpart {

/// Frontier sets for a fixed edge order.
///
/// frontier[i] = (vertices of e_1..e_i) ∩ (vertices of e_{i+1}..e_m) for
/// i in 0..m, so frontier[0] and frontier[m] are empty. A search state taken
/// before edge i covers frontier[i - 1].
struct FrontierPlan {
  /// Sorted ascending, indices 0..m.
  std::vector<std::vector<Vertex>> frontier;
  /// Endpoints of e_i not in frontier[i - 1], indices 1..m.
  std::vector<std::vector<Vertex>> entering;
  /// Endpoints of e_i not in frontier[i], in (u, v) order, indices 1..m.
  std::vector<std::vector<Vertex>> leaving;
  std::size_t max_frontier = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  /// Position of v within frontier[i], or npos.
  std::size_t position(Label i, Vertex v) const;
};

FrontierPlan build_frontier_plan(const Graph& g);

}  // namespace ddpart
