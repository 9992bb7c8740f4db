#include <doctest.h>

#include <map>
#include <set>

#include "pmtopo/error.hpp"
#include "pmtopo/hexgraph.hpp"

using namespace pmtopo;

TEST_CASE("vertex and edge counts follow the hexagon formulas") {
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        auto g = build_honeycomb(k, m, n);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(g.vertex_count() == 2 * (k * m + k * n + m * n));
        CHECK(g.edge_count() == 3 * (k * m + k * n + m * n) - (k + m + n));
        CHECK(g.graph().is_bipartite());
        for (int v = 0; v < g.vertex_count(); ++v) {
          CHECK(g.graph().degree(v) >= 2);
          CHECK(g.graph().degree(v) <= 3);
        }
      }
}

TEST_CASE("a single hexagon is the 6-cycle") {
  auto g = build_honeycomb(1, 1, 1);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g.graph().degree(v) == 2);
}

TEST_CASE("edges join the triangles on either side of a lattice segment") {
  auto g = build_honeycomb(2, 3, 2);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& le = g.lattice_edge(e);
    const auto& a = g.vertices()[static_cast<std::size_t>(g.graph().edge(e).u)];
    const auto& b = g.vertices()[static_cast<std::size_t>(g.graph().edge(e).v)];
    CHECK(a.orientation != b.orientation);
    CHECK(g.find_edge(le) == e);
    std::pair<int, int> p0{le.p, le.q};
    std::pair<int, int> p1{le.p + (le.dir != LatticeDir::Y), le.q + (le.dir != LatticeDir::X)};
    for (const auto* t : {&a, &b}) {
      std::set<std::pair<int, int>> corners;
      if (t->orientation == Orientation::Left)
        corners = {{t->p, t->q}, {t->p + 1, t->q}, {t->p + 1, t->q + 1}};
      else
        corners = {{t->p, t->q}, {t->p, t->q + 1}, {t->p + 1, t->q + 1}};
      CHECK(corners.count(p0) == 1);
      CHECK(corners.count(p1) == 1);
    }
  }
}

TEST_CASE("structured labels round-trip on 1 x m x n") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto g = build_honeycomb(1, m, n);
      std::set<int> seen;
      for (int e = 0; e < g.edge_count(); ++e) {
        auto text = g.label_of(e);
        CHECK(g.resolve(parse_label(text)) == e);
        CHECK(to_string(parse_label(text)) == text);
        seen.insert(e);
      }
      // a: m(n+1), b: (m+1)n, d: (m+1)(n+1) - 2
      CHECK(g.edge_count() == m * (n + 1) + (m + 1) * n + (m + 1) * (n + 1) - 2);
      CHECK(g.resolve(NamedLabel{"x"}) == g.resolve(StructuredLabel{Family::D, 0, 0}));
      CHECK(g.resolve(NamedLabel{"y"}) == g.resolve(StructuredLabel{Family::D, m, n}));
      if (m >= 2) CHECK(g.resolve(NamedLabel{"z"}) == g.resolve(StructuredLabel{Family::D, m - 1, 1}));
      CHECK(significant_edges(g).size() == static_cast<std::size_t>((m - 1) * (n - 1)));
    }
}

TEST_CASE("hexagons of the line of hexagons are 6-cycles of labelled edges") {
  for (int n = 1; n <= 5; ++n) {
    auto g = build_honeycomb(1, 1, n);
    for (int j = 0; j < n; ++j) {
      std::vector<StructuredLabel> hex = {{Family::A, 1, j},     {Family::D, 0, j}, {Family::B, 0, j + 1},
                                          {Family::A, 1, j + 1}, {Family::D, 1, j + 1}, {Family::B, 1, j + 1}};
      std::map<int, int> deg;
      for (const auto& l : hex) {
        int e = g.resolve(l);
        ++deg[g.graph().edge(e).u];
        ++deg[g.graph().edge(e).v];
      }
      CHECK(deg.size() == 6);
      for (auto [v, d] : deg) CHECK(d == 2);
    }
  }
}

TEST_CASE("label errors") {
  auto g = build_honeycomb(1, 2, 3);
  CHECK_THROWS_WITH_AS(g.resolve(parse_label("a_5_0")), doctest::Contains("a_5_0"), Error);
  try {
    g.resolve(parse_label("d_0_3"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "label_out_of_range");
  }
  try {
    g.resolve(parse_label("alpha"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "unknown_label");
  }
  CHECK(std::holds_alternative<RawLabel>(parse_label("raw_1_4")));
  CHECK(std::holds_alternative<NamedLabel>(parse_label("c_1_0")));
}

TEST_CASE("dimension and size errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  CHECK(code_of([] { build_honeycomb(0, 1, 1); }) == "invalid_dimensions");
  CHECK(code_of([] { build_honeycomb(1, -1, 1); }) == "invalid_dimensions");
  CHECK(code_of([] { build_honeycomb(50, 50, 50); }) == "graph_too_large");
  CHECK(code_of([] { build_honeycomb(3, 3, 3, 20); }) == "graph_too_large");
  CHECK(code_of([] { significant_edges(build_honeycomb(2, 2, 2)); }) == "unsupported");
}

TEST_CASE("2 x 2 x 2 figure aliases") {
  auto g = build_honeycomb(2, 2, 2);
  std::set<int> ids;
  for (const char* l : {"alpha", "beta", "gamma", "delta", "a_1_1", "a_3_2", "b_0_2", "b_1_2", "b_1_3", "b_2_1",
                        "b_2_2", "b_3_2", "c_0_0", "c_1_0", "c_1_1", "c_2_2", "c_2_3", "c_3_3"})
    ids.insert(g.resolve(parse_label(l)));
  CHECK(ids.size() == 18);
  CHECK(g.label_of(g.resolve(parse_label("alpha"))) == "alpha");
}

TEST_CASE("exports") {
  auto g = build_honeycomb(1, 3, 2);
  auto j = to_json(g);
  CHECK(j["vertices"].size() == 22);
  CHECK(j["edges"].size() == static_cast<std::size_t>(g.edge_count()));
  CHECK(j["labels"]["d_0_0"] == g.resolve(NamedLabel{"x"}));
  auto dot = to_dot(g);
  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("pos=", pos)) != std::string::npos) ++nodes, ++pos;
  CHECK(nodes == 22);
  CHECK(dot.rfind("graph H_1x3x2", 0) == 0);
}
