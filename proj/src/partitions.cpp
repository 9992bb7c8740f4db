#include "pmtopo/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pmtopo/error.hpp"

namespace pmtopo {

using boost::multiprecision::cpp_int;

bool PlanePartition::is_valid() const {
  if (k < 1 || m < 1 || n < 0 || entries.size() != static_cast<std::size_t>(k * m)) return false;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < m; ++c) {
      int v = at(r, c);
      if (v < 0 || v > n) return false;
      if (c + 1 < m && at(r, c + 1) > v) return false;
      if (r + 1 < k && at(r + 1, c) > v) return false;
    }
  return true;
}

cpp_int macmahon_count(int k, int m, int n) {
  cpp_int num = 1, den = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= m; ++j) {
      num *= i + j + n - 1;
      den *= i + j - 1;
    }
  return num / den;
}

std::vector<PlanePartition> enumerate_plane_partitions(int k, int m, int n, std::size_t cap) {
  if (k < 1 || m < 1 || n < 1) throw Error("invalid_dimensions", "dimensions must be positive");
  if (macmahon_count(k, m, n) > cap) throw Error("too_many_partitions", "partition count exceeds cap");

  std::vector<PlanePartition> out;
  PlanePartition cur{k, m, n, std::vector<int>(static_cast<std::size_t>(k * m), 0)};
  std::function<void(int)> fill = [&](int cell) {
    if (cell == k * m) {
      out.push_back(cur);
      return;
    }
    int r = cell / m, c = cell % m;
    int hi = n;
    if (c > 0) hi = std::min(hi, cur.at(r, c - 1));
    if (r > 0) hi = std::min(hi, cur.at(r - 1, c));
    for (int v = 0; v <= hi; ++v) {
      cur.entries[static_cast<std::size_t>(cell)] = v;
      fill(cell + 1);
    }
  };
  fill(0);
  return out;
}

namespace {

void check_dims(const HexGraph& g, const PlanePartition& p) {
  if (p.k != g.k() || p.m != g.m() || p.n != g.n() || !p.is_valid())
    throw Error("dimension_mismatch", "plane partition does not fit the graph's box");
}

}  // namespace

Matching pp_to_matching_k1(const HexGraph& g, const PlanePartition& p) {
  if (g.k() != 1) throw Error("unsupported", "defined for 1xmxn only");
  check_dims(g, p);
  const int m = g.m(), n = g.n();
  auto h = [&](int i) { return i == 0 ? n : i == m + 1 ? 0 : p.at(0, i - 1); };

  Matching out(static_cast<std::size_t>(g.edge_count()));
  auto put = [&](Family f, int i, int j) { out.set(static_cast<std::size_t>(g.resolve(StructuredLabel{f, i, j}))); };
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      if (j == h(i)) put(Family::A, i, j);
  for (int i = 0; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (h(i) >= j && j > h(i + 1)) put(Family::B, i, j);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      if ((i == 0 && j == n) || (i == m && j == 0)) continue;
      if (j > h(i) || j < h(i + 1)) put(Family::D, i, j);
    }
  return out;
}

Matching pp_to_matching(const HexGraph& g, const PlanePartition& p) {
  check_dims(g, p);
  Matching out(static_cast<std::size_t>(g.edge_count()));
  for (int e : g.surface_edges(p.entries)) out.set(static_cast<std::size_t>(e));
  return out;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  if (m.size() != static_cast<std::size_t>(g.edge_count())) return false;
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e : m.elements()) {
    ++cover[static_cast<std::size_t>(g.edge(e).u)];
    ++cover[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

PlanePartition matching_to_pp(const HexGraph& g, const Matching& match) {
  if (!is_perfect_matching(g.graph(), match)) throw Error("not_perfect_matching", "not a perfect matching of the graph");
  // Along a diagonal chain of cells (r+t, c+t) the heights weakly decrease,
  // so the chain's top faces sit on one lattice line in increasing order.
  PlanePartition p{g.k(), g.m(), g.n(), std::vector<int>(static_cast<std::size_t>(g.k() * g.m()), 0)};
  std::map<int, std::vector<int>> tops;
  for (int e : match.elements()) {
    const auto& le = g.lattice_edge(e);
    if (le.dir == LatticeDir::Diag) tops[le.q - le.p].push_back(le.p);
  }
  for (int r0 = 0; r0 < g.k(); ++r0)
    for (int c0 = 0; c0 < g.m(); ++c0) {
      if (r0 > 0 && c0 > 0) continue;
      auto& line = tops[c0 - r0];
      std::sort(line.begin(), line.end());
      int len = std::min(g.k() - r0, g.m() - c0);
      if (static_cast<int>(line.size()) != len) throw Error("not_perfect_matching", "matching is not a lozenge tiling of a cube stack");
      for (int t = 0; t < len; ++t)
        p.entries[static_cast<std::size_t>((r0 + t) * g.m() + c0 + t)] = r0 + t - line[static_cast<std::size_t>(t)];
    }
  if (!p.is_valid() || pp_to_matching(g, p) != match)
    throw Error("internal", "matching is not the tiling of its height function");
  return p;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::size_t cap) {
  std::vector<Matching> out;
  const int nv = g.vertex_count();
  if (nv % 2 == 1) return out;
  std::vector<char> covered(static_cast<std::size_t>(nv), 0);
  Matching cur(static_cast<std::size_t>(g.edge_count()));

  std::function<void(int)> extend = [&](int from) {
    int v = from;
    while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == nv) {
      if (out.size() >= cap) throw Error("too_many_matchings", "perfect matching count exceeds cap");
      out.push_back(cur);
      return;
    }
    covered[static_cast<std::size_t>(v)] = 1;
    for (int e : g.incident(v)) {
      int w = g.other_end(e, v);
      if (covered[static_cast<std::size_t>(w)]) continue;
      covered[static_cast<std::size_t>(w)] = 1;
      cur.set(static_cast<std::size_t>(e));
      extend(v + 1);
      cur.reset(static_cast<std::size_t>(e));
      covered[static_cast<std::size_t>(w)] = 0;
    }
    covered[static_cast<std::size_t>(v)] = 0;
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_perfect_matchings(const HexGraph& g, std::size_t cap) {
  auto ms = enumerate_perfect_matchings(g.graph(), cap);
  std::vector<std::pair<PlanePartition, Matching>> keyed;
  keyed.reserve(ms.size());
  for (auto& m : ms) keyed.emplace_back(matching_to_pp(g, m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Matching> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

nlohmann::json to_json(const PlanePartition& p) { return p.entries; }

}  // namespace pmtopo
