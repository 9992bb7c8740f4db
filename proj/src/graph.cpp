#include "pmtopo/graph.hpp"

#include <algorithm>
#include <queue>

#include "pmtopo/error.hpp"

namespace pmtopo {

Graph::Graph(int vertex_count, std::vector<GraphEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw Error("invalid_graph", "negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count || e.u == e.v)
      throw Error("invalid_graph", "edge endpoint out of range or loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

int Graph::other_end(int edge_id, int v) const {
  const auto& e = edge(edge_id);
  return e.u == v ? e.v : e.u;
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(static_cast<std::size_t>(vertex_count_), -1);
  for (int s = 0; s < vertex_count_; ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int e : incident(v)) {
        int w = other_end(e, v);
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          todo.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph path_graph(int vertices) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  return Graph(vertices, std::move(edges));
}

Graph cycle_graph(int vertices) {
  if (vertices < 3) throw Error("invalid_graph", "cycle needs at least 3 vertices");
  std::vector<GraphEdge> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, vertices - 1});
  return Graph(vertices, std::move(edges));
}

Graph complete_graph(int vertices) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) edges.push_back({i, j});
  return Graph(vertices, std::move(edges));
}

Graph complete_bipartite_graph(int left, int right) {
  std::vector<GraphEdge> edges;
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < right; ++j) edges.push_back({i, left + j});
  return Graph(left + right, std::move(edges));
}

}  // namespace pmtopo
