#include "ddpart/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ddpart {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool has_light_component(const Graph& g, const EdgeSet& edges, Weight bound) {
  const Vertex n = g.vertex_count();
  DisjointSets sets(n + 1);
  for (Label e : edges) sets.join(g.edge(e).u, g.edge(e).v);
  std::vector<Weight> total(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) total[sets.find(v)] += g.weight(v);
  for (Vertex v = 1; v <= n; ++v) {
    if (sets.find(v) == v && total[v] < bound) return true;
  }
  return false;
}

std::vector<EdgeSet> brute_force_filter(const Graph& g,
                                        const std::vector<EdgeSet>& family,
                                        Weight bound) {
  std::vector<EdgeSet> out;
  std::set<EdgeSet> seen;
  for (EdgeSet s : family) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!seen.insert(s).second) continue;
    if (!has_light_component(g, s, bound)) out.push_back(s);
  }
  return out;
}

}  // namespace ddpart
