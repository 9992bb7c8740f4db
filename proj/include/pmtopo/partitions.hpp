#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "pmtopo/bits.hpp"
#include "pmtopo/graph.hpp"
#include "pmtopo/hexgraph.hpp"

namespace pmtopo {

/// k x m array with entries in [0, n], weakly decreasing along rows and
/// down columns. Entries are stored row-major.
struct PlanePartition {
  int k = 0;
  int m = 0;
  int n = 0;
  std::vector<int> entries;

  int at(int r, int c) const { return entries[static_cast<std::size_t>(r * m + c)]; }
  bool is_valid() const;

  bool operator==(const PlanePartition&) const = default;
  auto operator<=>(const PlanePartition& o) const { return entries <=> o.entries; }
};

/// A matching is an edge subset of its graph.
using Matching = EdgeSet;

inline constexpr std::size_t kPartitionCap = 10'000'000;
inline constexpr std::size_t kMatchingCap = 1'000'000;

/// Number of plane partitions in a k x m x n box (MacMahon).
boost::multiprecision::cpp_int macmahon_count(int k, int m, int n);

/// All plane partitions of the box, lexicographic in row-major entries.
std::vector<PlanePartition> enumerate_plane_partitions(int k, int m, int n, std::size_t cap = kPartitionCap);

/// Closed-form membership rules for k = 1 (h_0 = n and h_{m+1} = 0):
///   a_{i,j} iff j = h_i;  b_{i,j} iff h_i >= j > h_{i+1};
///   d_{i,j} iff j > h_i or j < h_{i+1}.
Matching pp_to_matching_k1(const HexGraph& g, const PlanePartition& p);

/// Lozenge tiling of the cube stack, any k.
Matching pp_to_matching(const HexGraph& g, const PlanePartition& p);

/// Inverse of pp_to_matching. Throws unless m is a perfect matching of g.
PlanePartition matching_to_pp(const HexGraph& g, const Matching& m);

bool is_perfect_matching(const Graph& g, const Matching& m);

/// Backtracking over the lowest uncovered vertex; result sorted by edge list.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::size_t cap = kMatchingCap);

/// Same set, ordered by the corresponding plane partition.
std::vector<Matching> enumerate_perfect_matchings(const HexGraph& g, std::size_t cap = kMatchingCap);

nlohmann::json to_json(const PlanePartition& p);

}  // namespace pmtopo
