// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "catalog222.hpp"
#include "pmtopo/complex.hpp"
#include "pmtopo/error.hpp"
#include "pmtopo/hexgraph.hpp"
#include "pmtopo/homology.hpp"
#include "pmtopo/morse.hpp"
#include "pmtopo/partitions.hpp"
#include "pmtopo/verify.hpp"

using namespace pmtopo;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.size() < 400) detail += what + "; ";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  std::optional<double> limit_seconds;
  std::function<Outcome()> run;
};

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_report(Outcome& o, const TheoremReport& r) {
  for (const auto& c : r.claims)
    if (!c.passed) o.require(false, r.theorem + "(" + std::to_string(r.n) + ") " + c.id + " [" + c.detail + "]");
  o.require(r.passed(), r.theorem + " report failed");
}

// Reports from criteria 4-7, reused by the engine checks of criterion 9.
std::vector<TheoremReport> g_reports;

Outcome matching_counts() {
  Outcome o;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      auto g = build_honeycomb(1, m, n);
      auto expected = static_cast<std::size_t>(binomial(m + n, m));
      auto tag = "1x" + std::to_string(m) + "x" + std::to_string(n);
      o.require(enumerate_perfect_matchings(g.graph()).size() == expected, tag + " backtracking");
      o.require(enumerate_plane_partitions(1, m, n).size() == expected, tag + " plane partitions");
    }
  auto g = build_honeycomb(2, 2, 2);
  auto found = enumerate_perfect_matchings(g.graph());
  o.require(found.size() == 20, "2x2x2 backtracking count");
  std::map<std::pair<int, int>, int> at;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    at[HexGraph::figure_position2(g.vertices()[v])] = static_cast<int>(v);
  std::set<Matching> drawn;
  for (const auto& entry : detail::kCatalog222) {
    Matching mt(static_cast<std::size_t>(g.edge_count()));
    for (const auto& s : entry.segments) {
      auto u = at.find({s[0], s[1]}), v = at.find({s[2], s[3]});
      if (u == at.end() || v == at.end()) {
        o.require(false, "catalog segment off the graph");
        continue;
      }
      mt.set(static_cast<std::size_t>(
          g.resolve(RawLabel{std::min(u->second, v->second), std::max(u->second, v->second)})));
    }
    PlanePartition p{2, 2, 2, {entry.tableau.begin(), entry.tableau.end()}};
    o.require(mt == pp_to_matching(g, p), "catalog diagram differs from its tableau's tiling");
    drawn.insert(mt);
  }
  o.require(drawn == std::set<Matching>(found.begin(), found.end()), "catalog differs from backtracking");
  return o;
}

Outcome bijection() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        auto tag = std::to_string(k) + "x" + std::to_string(m) + "x" + std::to_string(n);
        auto g = build_honeycomb(k, m, n);
        auto pps = enumerate_plane_partitions(k, m, n);
        auto all = enumerate_perfect_matchings(g.graph());
        std::set<Matching> image;
        for (const auto& p : pps) {
          auto mt = pp_to_matching(g, p);
          image.insert(mt);
          o.require(matching_to_pp(g, mt) == p, tag + " round trip");
          if (k == 1) o.require(pp_to_matching_k1(g, p) == mt, tag + " closed form");
        }
        o.require(image.size() == pps.size(), tag + " injective");
        o.require(image == std::set<Matching>(all.begin(), all.end()), tag + " onto");
      }
  return o;
}

Outcome lemmas() {
  Outcome o;
  require_report(o, verify_lemmas(4));
  return o;
}

Outcome line() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    g_reports.push_back(verify_line(n));
    require_report(o, g_reports.back());
  }
  return o;
}

Outcome sphere_1x2xn() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    g_reports.push_back(verify_1x2xn(n));
    require_report(o, g_reports.back());
  }
  return o;
}

Outcome contractible_1x3x3() {
  Outcome o;
  g_reports.push_back(verify_1xmxn(3, 3, face_cap_from_env()));
  require_report(o, g_reports.back());
  return o;
}

Outcome wedge_2x2x2() {
  Outcome o;
  g_reports.push_back(verify_2x2x2());
  require_report(o, g_reports.back());
  return o;
}

Outcome morse_engine() {
  Outcome o;
  auto sq = SimplicialComplex::from_facets(4, {Face::from_elements({0, 1}), Face::from_elements({1, 2}),
                                               Face::from_elements({2, 3}), Face::from_elements({0, 3})});
  std::vector<FacePair> cyc = {{Face::from_elements({0}), Face::from_elements({0, 1})},
                               {Face::from_elements({1}), Face::from_elements({1, 2})},
                               {Face::from_elements({2}), Face::from_elements({2, 3})},
                               {Face::from_elements({3}), Face::from_elements({0, 3})}};
  o.require(!verify_acyclic(sq, cyc), "cyclic square pairing accepted");

  std::mt19937 rng(20240601);
  for (auto dims : {std::array<int, 3>{1, 2, 2}, std::array<int, 3>{2, 2, 2}}) {
    auto c = perfect_matching_complex(build_honeycomb(dims[0], dims[1], dims[2]));
    std::vector<int> pool(static_cast<std::size_t>(c.ground()));
    std::iota(pool.begin(), pool.end(), 0);
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> seq(pool.begin(), pool.begin() + 1 + static_cast<std::ptrdiff_t>(rng() % pool.size()));
      auto p = sequential_pairing(c, seq);
      o.require(p.acyclic && verify_acyclic(c, p.pairs), "random sequence pairing rejected");
      o.require(c.face_count() == 2 * p.pairs.size() + p.critical.size(), "faces != 2 pairs + critical");
    }
  }
  return o;
}

SimplicialComplex boundary_of_simplex(int vertices) {
  std::vector<Face> facets;
  for (int skip = 0; skip < vertices; ++skip) {
    Face f;
    for (int i = 0; i < vertices; ++i)
      if (i != skip) f.set(i);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(vertices, facets);
}

Outcome homology_engine() {
  Outcome o;
  for (const auto& r : g_reports)
    for (const auto& c : r.claims)
      if (c.id == "homology.boundary" || c.id == "homology.euler")
        o.require(c.passed, r.theorem + "(" + std::to_string(r.n) + ") " + c.id);
  std::vector<SimplicialComplex> extra;
  for (int n = 1; n <= 6; ++n) extra.push_back(perfect_matching_complex(build_honeycomb(1, 1, n)));
  extra.push_back(perfect_matching_complex(build_honeycomb(1, 2, 2)));
  for (const auto& c : extra) {
    auto h = reduced_homology(c);
    o.require(boundary_squared_zero(c), "boundary squared nonzero");
    o.require(h.euler_characteristic() == reduced_euler_characteristic(c), "Euler-Poincare");
  }
  for (int n = 1; n <= 6; ++n) {
    Face f;
    for (int i = 0; i < n; ++i) f.set(i);
    auto s = SimplicialComplex::from_facets(n, {f});
    o.require(reduced_homology(s).is_trivial() && boundary_squared_zero(s), "simplex on " + std::to_string(n));
    if (n >= 2) {
      auto b = boundary_of_simplex(n);
      auto h = reduced_homology(b);
      o.require(h.is_sphere(n - 2) && boundary_squared_zero(b) &&
                    h.euler_characteristic() == reduced_euler_characteristic(b),
                "boundary of simplex on " + std::to_string(n));
    }
  }
  std::mt19937 rng(77);
  auto c = perfect_matching_complex(build_honeycomb(1, 2, 3));
  auto dense = boundary_matrix(c, 3).to_dense();
  auto ref = smith_normal_form(SparseMatrix::from_dense(dense));
  std::vector<std::size_t> rp(dense.size()), cp(dense[0].size());
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<std::vector<std::int64_t>> b(rp.size(), std::vector<std::int64_t>(cp.size()));
    for (std::size_t i = 0; i < rp.size(); ++i)
      for (std::size_t j = 0; j < cp.size(); ++j) b[i][j] = dense[rp[i]][cp[j]];
    auto s = smith_normal_form(SparseMatrix::from_dense(b));
    o.require(s.invariants == ref.invariants && s.rank == ref.rank, "SNF changed under permutation");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "matching counts C(m+n,m) and the 2x2x2 catalog", 5.0, matching_counts},
      {2, "plane partition bijection for k,m,n <= 3", 30.0, bijection},
      {3, "x/y membership and extreme intersection, 2 <= m,n <= 4", 10.0, lemmas},
      {4, "line of hexagons, n = 2..6", 10.0, line},
      {5, "H_{1x2xn} ~ S^{n-1}, n = 2..5", 120.0, sphere_1x2xn},
      {6, "H_{1x3x3} contractible", 300.0, contractible_1x3x3},
      {7, "H_{2x2x2} ~ S^3 v S^3", 120.0, wedge_2x2x2},
      {8, "Morse engine soundness", std::nullopt, morse_engine},
      {9, "homology engine soundness", std::nullopt, homology_engine},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = !c.limit_seconds || secs < *c.limit_seconds;
    bool pass = o.ok && in_time;
    all = all && pass;
    char timing[64];
    if (c.limit_seconds)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, *c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " (" << timing << ")";
    if (!o.ok) std::cout << "  " << o.detail;
    if (!in_time) std::cout << "  over time limit";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
