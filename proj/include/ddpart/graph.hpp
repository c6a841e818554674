#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddpart/types.hpp"

namespace ddpart {

using Weight = std::uint64_t;

struct Edge {
  Vertex u;
  Vertex v;
};

/// Vertex-weighted undirected graph with a fixed edge order.
///
/// Vertices are 1..n and edges 1..m; edge labels in every diagram refer to
/// this order. Weights default to 1 and must stay positive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : weights_(n + 1, 1) { weights_[0] = 0; }

  Vertex vertex_count() const {
    return weights_.empty() ? 0 : static_cast<Vertex>(weights_.size() - 1);
  }
  Label edge_count() const { return static_cast<Label>(edges_.size()); }

  void set_weight(Vertex v, Weight w);
  Weight weight(Vertex v) const;
  Weight total_weight() const;

  /// Appends an edge and returns its label.
  Label add_edge(Vertex u, Vertex v);
  const Edge& edge(Label e) const;
  std::span<const Edge> edges() const { return edges_; }

  std::vector<Label> incident_edges(Vertex v) const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
};

/// Total weight of the vertices touched by `edges`, each counted once.
Weight weight_of(const Graph& g, const EdgeSet& edges);

}  // namespace ddpart
