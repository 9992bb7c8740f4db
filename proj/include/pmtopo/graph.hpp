#pragma once

#include <cstddef>
#include <vector>

namespace pmtopo {

struct GraphEdge {
  int u;
  int v;
  bool operator==(const GraphEdge&) const = default;
};

/// Simple undirected graph with a fixed edge order; edge i is edges[i].
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<GraphEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  /// Edge ids incident to v, increasing.
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  int other_end(int edge_id, int v) const;

  /// Two-colouring if one exists.
  bool is_bipartite() const;

 private:
  int vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Small reference graphs.
Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph complete_graph(int vertices);
Graph complete_bipartite_graph(int left, int right);

}  // namespace pmtopo
