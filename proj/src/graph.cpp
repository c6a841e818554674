#include "ddpart/graph.hpp"

#include <string>

namespace ddpart {

void Graph::check_vertex(Vertex v) const {
  if (v == 0 || v > vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(vertex_count()));
  }
}

void Graph::set_weight(Vertex v, Weight w) {
  check_vertex(v);
  if (w == 0) throw UsageError("vertex weights must be positive");
  weights_[v] = w;
}

Weight Graph::weight(Vertex v) const {
  check_vertex(v);
  return weights_[v];
}

Weight Graph::total_weight() const {
  Weight total = 0;
  for (Vertex v = 1; v <= vertex_count(); ++v) total += weights_[v];
  return total;
}

Label Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  edges_.push_back({u, v});
  return edge_count();
}

const Edge& Graph::edge(Label e) const {
  if (e == 0 || e > edge_count()) {
    throw UsageError("edge " + std::to_string(e) + " outside 1.." +
                     std::to_string(edge_count()));
  }
  return edges_[e - 1];
}

std::vector<Label> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  std::vector<Label> out;
  for (Label e = 1; e <= edge_count(); ++e) {
    if (edges_[e - 1].u == v || edges_[e - 1].v == v) out.push_back(e);
  }
  return out;
}

Weight weight_of(const Graph& g, const EdgeSet& edges) {
  std::vector<bool> touched(g.vertex_count() + 1, false);
  Weight total = 0;
  for (Label e : edges) {
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (!touched[x]) {
        touched[x] = true;
        total += g.weight(x);
      }
    }
  }
  return total;
}

}  // namespace ddpart
