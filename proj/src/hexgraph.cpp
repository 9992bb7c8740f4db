#include "pmtopo/hexgraph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

#include "pmtopo/error.hpp"

namespace pmtopo {
namespace {

struct FigureSegment {
  const char* name;
  int x0, y0, x1, y1;  // doubled figure coordinates of the drawn endpoints
};

// Labelled segments of the 2 x 2 x 2 labelled drawing: for each label node, the
// drawn honeycomb edge whose midpoint is nearest to it.
constexpr std::array<FigureSegment, 18> kFigure222 = {{
    {"alpha", 12, 21, 16, 21}, {"beta", 12, 15, 16, 15},  {"gamma", 12, 9, 16, 9},
    {"delta", 12, 3, 16, 3},   {"b_1_3", 12, 21, 10, 18}, {"b_1_2", 10, 12, 12, 15},
    {"c_1_1", 10, 12, 12, 9},  {"c_1_0", 12, 3, 10, 6},   {"c_0_0", 6, 6, 4, 9},
    {"b_0_2", 4, 15, 6, 18},   {"c_2_3", 16, 21, 18, 18}, {"c_2_2", 18, 12, 16, 15},
    {"b_2_2", 16, 9, 18, 12},  {"b_2_1", 18, 6, 16, 3},   {"b_3_2", 24, 9, 22, 6},
    {"c_3_3", 24, 15, 22, 18}, {"a_1_1", 6, 12, 10, 12},  {"a_3_2", 18, 12, 22, 12},
}};

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'a';
    case Family::B: return 'b';
    case Family::D: return 'd';
  }
  return '?';
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Inverse of structured_lattice_edge.
StructuredLabel structured_of(const LatticeEdge& le) {
  switch (le.dir) {
    case LatticeDir::Diag: return {Family::A, le.q + 1 - le.p, -le.p};
    case LatticeDir::Y: return {Family::B, le.q + 1 - le.p, 1 - le.p};
    case LatticeDir::X: return {Family::D, le.q - le.p, -le.p};
  }
  return {Family::A, 0, 0};
}

bool structured_in_range(const StructuredLabel& l, int m, int n) {
  switch (l.family) {
    case Family::A: return l.i >= 1 && l.i <= m && l.j >= 0 && l.j <= n;
    case Family::B: return l.i >= 0 && l.i <= m && l.j >= 1 && l.j <= n;
    case Family::D:
      if (l.i < 0 || l.i > m || l.j < 0 || l.j > n) return false;
      return !(l.i == 0 && l.j == n) && !(l.i == m && l.j == 0);
  }
  return false;
}

// Checks the transcribed 2 x 2 x 2 aliases against the partitions whose
// tilings contain them.
void check_figure_aliases(const HexGraph& g, const std::map<std::string, int>& alias) {
  std::vector<std::array<int, 4>> pps;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= a; ++c)
        for (int d = 0; d <= std::min(b, c); ++d) pps.push_back({a, b, c, d});

  auto support = [&](const std::string& name) {
    std::set<std::array<int, 4>> out;
    int e = alias.at(name);
    for (const auto& pp : pps) {
      auto edges = g.surface_edges(pp);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) out.insert(pp);
    }
    return out;
  };
  auto select = [&](auto pred) {
    std::set<std::array<int, 4>> out;
    for (const auto& pp : pps)
      if (pred(pp)) out.insert(pp);
    return out;
  };
  using PP = std::array<int, 4>;
  const PP full{2, 2, 2, 2}, zero{0, 0, 0, 0};
  bool ok = support("alpha") == select([](const PP& p) { return p[0] == 2; }) &&
            support("beta") == select([&](const PP& p) { return p == full || p[0] == 1; }) &&
            support("gamma") == select([&](const PP& p) { return p == zero || p[3] == 1; }) &&
            support("delta") == select([](const PP& p) { return p[3] == 0; });

  std::set<int> common;
  {
    auto f1 = g.surface_edges(std::array<int, 4>{2, 2, 2, 1});
    auto f2 = g.surface_edges(std::array<int, 4>{1, 1, 1, 1});
    auto f3 = g.surface_edges(std::array<int, 4>{2, 2, 2, 2});
    for (int e : f1)
      if (std::count(f2.begin(), f2.end(), e) && std::count(f3.begin(), f3.end(), e)) common.insert(e);
  }
  std::set<int> expected{alias.at("c_0_0"), alias.at("c_1_0"), alias.at("b_2_1"), alias.at("b_3_2")};
  ok = ok && common == expected;
  if (!ok) throw Error("alias_table", "2x2x2 figure aliases disagree with their partition supports");
}

}  // namespace

std::string to_string(const EdgeLabel& label) {
  if (const auto* s = std::get_if<StructuredLabel>(&label))
    return std::string(1, family_char(s->family)) + "_" + std::to_string(s->i) + "_" + std::to_string(s->j);
  if (const auto* n = std::get_if<NamedLabel>(&label)) return n->name;
  const auto& r = std::get<RawLabel>(label);
  return "raw_" + std::to_string(r.u) + "_" + std::to_string(r.v);
}

EdgeLabel parse_label(std::string_view text) {
  if (text.empty()) throw Error("unknown_label", "empty label");
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find('_', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() == 3) {
    auto a = parse_int(parts[1]);
    auto b = parse_int(parts[2]);
    if (a && b) {
      if (parts[0] == "raw") return RawLabel{*a, *b};
      if (parts[0] == "a") return StructuredLabel{Family::A, *a, *b};
      if (parts[0] == "b") return StructuredLabel{Family::B, *a, *b};
      if (parts[0] == "d") return StructuredLabel{Family::D, *a, *b};
    }
  }
  return NamedLabel{std::string(text)};
}

LatticeEdge HexGraph::structured_lattice_edge(const StructuredLabel& l) {
  switch (l.family) {
    case Family::A: return {LatticeDir::Diag, -l.j, l.i - 1 - l.j};
    case Family::B: return {LatticeDir::Y, 1 - l.j, l.i - l.j};
    case Family::D: return {LatticeDir::X, -l.j, l.i - l.j};
  }
  return {};
}

bool HexGraph::contains_point(int p, int q) const {
  return p >= -n_ && p <= k_ && q >= -n_ && q <= m_ && p - q >= -m_ && p - q <= k_;
}

std::optional<int> HexGraph::find_edge(const LatticeEdge& le) const {
  auto it = edge_index_.find(le);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> HexGraph::find_vertex(const Triangle& t) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t);
  if (it == vertices_.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<int> HexGraph::surface_edges(std::span<const int> heights) const {
  const auto kk = static_cast<std::size_t>(k_), mm = static_cast<std::size_t>(m_);
  if (heights.size() != kk * mm) throw Error("dimension_mismatch", "height matrix has wrong shape");
  auto h = [&](int r, int c) { return heights[static_cast<std::size_t>(r) * mm + static_cast<std::size_t>(c)]; };
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < m_; ++c) {
      if (h(r, c) < 0 || h(r, c) > n_) throw Error("invalid_partition", "entry outside [0, n]");
      if ((c + 1 < m_ && h(r, c + 1) > h(r, c)) || (r + 1 < k_ && h(r + 1, c) > h(r, c)))
        throw Error("invalid_partition", "entries must weakly decrease along rows and columns");
    }

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k_ * m_ + m_ * n_ + k_ * n_));
  auto add = [&](LatticeEdge le) {
    auto e = find_edge(le);
    if (!e) throw Error("internal", "surface lozenge outside the honeycomb");
    out.push_back(*e);
  };
  // Top faces.
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < m_; ++c) add({LatticeDir::Diag, r - h(r, c), c - h(r, c)});
  // Faces facing +x: one per (column, level).
  for (int c = 0; c < m_; ++c)
    for (int z = 0; z < n_; ++z) {
      int depth = 0;
      for (int r = 0; r < k_; ++r) depth += h(r, c) > z ? 1 : 0;
      add({LatticeDir::X, depth - z - 1, c - z});
    }
  // Faces facing +y: one per (row, level).
  for (int r = 0; r < k_; ++r)
    for (int z = 0; z < n_; ++z) {
      int width = 0;
      for (int c = 0; c < m_; ++c) width += h(r, c) > z ? 1 : 0;
      add({LatticeDir::Y, r - z, width - z - 1});
    }
  std::sort(out.begin(), out.end());
  return out;
}

int HexGraph::resolve(const EdgeLabel& label) const {
  if (const auto* s = std::get_if<StructuredLabel>(&label)) {
    if (k_ == 1) {
      if (!structured_in_range(*s, m_, n_))
        throw Error("label_out_of_range", "label " + to_string(label) + " is outside the edge ranges");
      auto e = find_edge(structured_lattice_edge(*s));
      if (!e) throw Error("internal", "structured label has no edge");
      return *e;
    }
    auto it = aliases_.find(to_string(label));
    if (it == aliases_.end()) throw Error("unknown_label", "unknown label " + to_string(label));
    return it->second;
  }
  if (const auto* nl = std::get_if<NamedLabel>(&label)) {
    auto it = aliases_.find(nl->name);
    if (it == aliases_.end()) throw Error("unknown_label", "unknown label " + nl->name);
    return it->second;
  }
  const auto& r = std::get<RawLabel>(label);
  const auto& g = graph_;
  if (r.u >= 0 && r.u < g.vertex_count())
    for (int e : g.incident(r.u))
      if (g.other_end(e, r.u) == r.v) return e;
  throw Error("unknown_label", "no edge " + to_string(label));
}

std::string HexGraph::label_of(int e) const { return display_[static_cast<std::size_t>(e)]; }

std::map<std::string, int> HexGraph::label_table() const {
  std::map<std::string, int> out = aliases_;
  if (k_ == 1)
    for (int e = 0; e < edge_count(); ++e) out.emplace(display_[static_cast<std::size_t>(e)], e);
  return out;
}

std::pair<int, int> HexGraph::figure_position2(const Triangle& t) {
  if (t.orientation == Orientation::Left) return {12 - 6 * t.p + 6 * t.q, 9 - 3 * t.p - 3 * t.q};
  return {16 - 6 * t.p + 6 * t.q, 9 - 3 * t.p - 3 * t.q};
}

HexGraph build_honeycomb(int k, int m, int n, std::size_t edge_cap) {
  if (k < 1 || m < 1 || n < 1) throw Error("invalid_dimensions", "dimensions must be positive");
  constexpr long long kDimLimit = 1'000'000;
  if (k > kDimLimit || m > kDimLimit || n > kDimLimit) throw Error("graph_too_large", "graph too large");
  const long long kl = k, ml = m, nl = n;
  const long long edges = 3 * (kl * ml + kl * nl + ml * nl) - (kl + ml + nl);
  if (edges > static_cast<long long>(edge_cap)) throw Error("graph_too_large", "graph too large");

  HexGraph g;
  g.k_ = k;
  g.m_ = m;
  g.n_ = n;
  for (int p = -n; p <= k; ++p)
    for (int q = -n; q <= m; ++q) {
      if (g.contains_point(p, q) && g.contains_point(p + 1, q) && g.contains_point(p + 1, q + 1))
        g.vertices_.push_back({p, q, Orientation::Left});
      if (g.contains_point(p, q) && g.contains_point(p, q + 1) && g.contains_point(p + 1, q + 1))
        g.vertices_.push_back({p, q, Orientation::Right});
    }

  struct Candidate {
    LatticeEdge le;
    int u, v;
  };
  std::vector<Candidate> cands;
  for (std::size_t vi = 0; vi < g.vertices_.size(); ++vi) {
    const auto& t = g.vertices_[vi];
    if (t.orientation != Orientation::Left) continue;
    const std::array<std::pair<LatticeEdge, Triangle>, 3> around = {{
        {{LatticeDir::X, t.p, t.q}, {t.p, t.q - 1, Orientation::Right}},
        {{LatticeDir::Y, t.p + 1, t.q}, {t.p + 1, t.q, Orientation::Right}},
        {{LatticeDir::Diag, t.p, t.q}, {t.p, t.q, Orientation::Right}},
    }};
    for (const auto& [le, partner] : around)
      if (auto w = g.find_vertex(partner)) {
        int a = static_cast<int>(vi), b = *w;
        cands.push_back({le, std::min(a, b), std::max(a, b)});
      }
  }

  if (k == 1) {
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      auto la = structured_of(a.le), lb = structured_of(b.le);
      return std::tie(la.family, la.i, la.j) < std::tie(lb.family, lb.i, lb.j);
    });
  } else {
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  }

  std::vector<GraphEdge> graph_edges;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    graph_edges.push_back({cands[i].u, cands[i].v});
    g.lattice_edges_.push_back(cands[i].le);
    g.edge_index_.emplace(cands[i].le, static_cast<int>(i));
  }
  g.graph_ = Graph(static_cast<int>(g.vertices_.size()), std::move(graph_edges));

  g.display_.resize(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    g.display_[i] = k == 1 ? to_string(structured_of(cands[i].le))
                           : to_string(RawLabel{cands[i].u, cands[i].v});

  if (k == 1) {
    auto alias = [&](const char* name, StructuredLabel l) {
      if (structured_in_range(l, m, n)) g.aliases_[name] = *g.find_edge(HexGraph::structured_lattice_edge(l));
    };
    alias("x", {Family::D, 0, 0});
    alias("y", {Family::D, m, n});
    alias("z", {Family::D, m - 1, 1});
  } else if (k == 2 && m == 2 && n == 2) {
    std::map<std::pair<int, int>, int> by_position;
    for (std::size_t v = 0; v < g.vertices_.size(); ++v)
      by_position[HexGraph::figure_position2(g.vertices_[v])] = static_cast<int>(v);
    for (const auto& seg : kFigure222) {
      auto a = by_position.find({seg.x0, seg.y0});
      auto b = by_position.find({seg.x1, seg.y1});
      if (a == by_position.end() || b == by_position.end())
        throw Error("alias_table", std::string("figure label ") + seg.name + " is not on the graph");
      int e = g.resolve(RawLabel{std::min(a->second, b->second), std::max(a->second, b->second)});
      g.aliases_[seg.name] = e;
      g.display_[static_cast<std::size_t>(e)] = seg.name;
    }
    check_figure_aliases(g, g.aliases_);
  }
  return g;
}

int resolve_label(const HexGraph& g, const EdgeLabel& label) { return g.resolve(label); }

std::vector<int> significant_edges(const HexGraph& g) {
  if (g.k() != 1) throw Error("unsupported", "defined for 1xmxn only");
  std::vector<int> out;
  for (int i = 1; i <= g.m() - 1; ++i)
    for (int j = 1; j <= g.n() - 1; ++j) out.push_back(g.resolve(StructuredLabel{Family::D, i, j}));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const HexGraph& g) {
  nlohmann::json j;
  j["k"] = g.k();
  j["m"] = g.m();
  j["n"] = g.n();
  auto verts = nlohmann::json::array();
  for (const auto& t : g.vertices()) verts.push_back({t.p, t.q, static_cast<int>(t.orientation)});
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::json::array();
  for (const auto& e : g.graph().edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [name, e] : g.label_table()) labels[name] = e;
  j["labels"] = std::move(labels);
  return j;
}

std::string to_dot(const HexGraph& g) {
  std::ostringstream os;
  os << "graph H_" << g.k() << "x" << g.m() << "x" << g.n() << " {\n";
  os << "  node [shape=point];\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    auto [x2, y2] = HexGraph::figure_position2(g.vertices()[v]);
    os << "  v" << v << " [pos=\"" << x2 / 2.0 << "," << y2 / 2.0 << "!\"];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ge = g.graph().edge(e);
    os << "  v" << ge.u << " -- v" << ge.v << " [label=\"" << g.label_of(e) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pmtopo
