#include "ddpart/frontier.hpp"

#include <algorithm>

namespace ddpart {

std::size_t FrontierPlan::position(Label i, Vertex v) const {
  const auto& f = frontier[i];
  auto it = std::lower_bound(f.begin(), f.end(), v);
  return (it != f.end() && *it == v) ? static_cast<std::size_t>(it - f.begin())
                                     : npos;
}

FrontierPlan build_frontier_plan(const Graph& g) {
  const Label m = g.edge_count();
  const Vertex n = g.vertex_count();
  std::vector<Label> first(n + 1, 0);
  std::vector<Label> last(n + 1, 0);
  for (Label e = 1; e <= m; ++e) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (first[x] == 0) first[x] = e;
      last[x] = e;
    }
  }

  FrontierPlan plan;
  plan.frontier.resize(m + 1);
  plan.entering.resize(m + 1);
  plan.leaving.resize(m + 1);
  for (Label i = 1; i <= m; ++i) {
    for (Vertex v = 1; v <= n; ++v) {
      if (first[v] != 0 && first[v] <= i && last[v] > i) {
        plan.frontier[i].push_back(v);
      }
    }
    plan.max_frontier = std::max(plan.max_frontier, plan.frontier[i].size());
    const Edge& e = g.edge(i);
    for (Vertex x : {e.u, e.v}) {
      if (first[x] == i) plan.entering[i].push_back(x);
      if (last[x] == i) plan.leaving[i].push_back(x);
    }
  }
  return plan;
}

}  // namespace ddpart
