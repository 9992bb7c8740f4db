#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pmtopo/graph.hpp"

namespace pmtopo {

// Honeycomb H_{k x m x n} as the dual of the triangulated (k,m,n)-hexagon.
//
// Lattice points are integer pairs (p, q) in the basis X, Y of the triangular
// lattice; the third lattice direction is X + Y, and a cube of the plane
// partition picture moves by Z = -(X + Y) when stacked. A 3D point (x, y, z)
// of the k x m x n box projects to (x - z, y - z). The hexagon is
//   -n <= p <= k,  -n <= q <= m,  -m <= p - q <= k.
// Honeycomb vertices are unit triangles of this region, honeycomb edges are
// the interior lattice edges (each separates two triangles).

enum class Orientation : std::uint8_t { Left = 0, Right = 1 };

/// Left(p,q) has corners (p,q),(p+1,q),(p+1,q+1);
/// Right(p,q) has corners (p,q),(p,q+1),(p+1,q+1).
struct Triangle {
  int p = 0;
  int q = 0;
  Orientation orientation = Orientation::Left;
  auto operator<=>(const Triangle&) const = default;
};

enum class LatticeDir : std::uint8_t { X = 0, Y = 1, Diag = 2 };

/// Lattice segment from (p,q) to (p,q) + dir.
struct LatticeEdge {
  LatticeDir dir = LatticeDir::X;
  int p = 0;
  int q = 0;
  auto operator<=>(const LatticeEdge&) const = default;
};

enum class Family : std::uint8_t { A = 0, B = 1, D = 2 };

struct StructuredLabel {
  Family family;
  int i;
  int j;
  bool operator==(const StructuredLabel&) const = default;
};
struct NamedLabel {
  std::string name;
  bool operator==(const NamedLabel&) const = default;
};
struct RawLabel {
  int u;
  int v;
  bool operator==(const RawLabel&) const = default;
};
using EdgeLabel = std::variant<StructuredLabel, NamedLabel, RawLabel>;

/// Command-line spelling: a_1_0, x, alpha, c_1_0, raw_3_7.
std::string to_string(const EdgeLabel& label);
EdgeLabel parse_label(std::string_view text);

inline constexpr std::size_t kDefaultEdgeCap = 10'000;

class HexGraph {
 public:
  int k() const { return k_; }
  int m() const { return m_; }
  int n() const { return n_; }

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

  const std::vector<Triangle>& vertices() const { return vertices_; }
  const LatticeEdge& lattice_edge(int e) const { return lattice_edges_[static_cast<std::size_t>(e)]; }
  std::optional<int> find_edge(const LatticeEdge& le) const;
  std::optional<int> find_vertex(const Triangle& t) const;

  bool contains_point(int p, int q) const;

  /// Edge ids of the lozenge tiling read off the cube stack with the given
  /// heights (row-major k x m, entries in [0, n], weakly decreasing along rows
  /// and columns). Throws if a lozenge falls outside the graph.
  std::vector<int> surface_edges(std::span<const int> heights) const;

  /// Lattice segment dual to a structured k = 1 label (no range checks).
  static LatticeEdge structured_lattice_edge(const StructuredLabel& l);

  int resolve(const EdgeLabel& label) const;

  /// Display label: structured label when k = 1, figure alias for the
  /// 2 x 2 x 2 graph when one exists, otherwise raw_u_v.
  std::string label_of(int e) const;

  /// Every label that resolves on this graph, keyed by its spelling.
  std::map<std::string, int> label_table() const;

  /// Figure coordinates (doubled, so they are integral) of a triangle's
  /// centroid, with the hexagon centre at (14, 12).
  static std::pair<int, int> figure_position2(const Triangle& t);

 private:
  friend HexGraph build_honeycomb(int k, int m, int n, std::size_t edge_cap);

  int k_ = 0;
  int m_ = 0;
  int n_ = 0;
  Graph graph_;
  std::vector<Triangle> vertices_;
  std::vector<LatticeEdge> lattice_edges_;
  std::map<LatticeEdge, int> edge_index_;
  std::map<std::string, int> aliases_;
  std::vector<std::string> display_;
};

/// Builds H_{k x m x n}. Errors: a zero dimension ("invalid_dimensions") or
/// more than edge_cap edges ("graph too large").
HexGraph build_honeycomb(int k, int m, int n, std::size_t edge_cap = kDefaultEdgeCap);

int resolve_label(const HexGraph& g, const EdgeLabel& label);

/// d_{i,j} for 1 <= i <= m-1, 1 <= j <= n-1 (k = 1 only), increasing ids.
std::vector<int> significant_edges(const HexGraph& g);

nlohmann::json to_json(const HexGraph& g);
std::string to_dot(const HexGraph& g);

}  // namespace pmtopo
