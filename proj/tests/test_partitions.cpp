#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pmtopo/error.hpp"
#include "pmtopo/partitions.hpp"

using namespace pmtopo;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "none";
}

}  // namespace

TEST_CASE("MacMahon counts") {
  CHECK(macmahon_count(2, 2, 2) == 20);
  CHECK(macmahon_count(3, 3, 3) == 980);
  CHECK(macmahon_count(4, 4, 4) == 232848);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) CHECK(macmahon_count(1, m, n) == oracle::binomial(m + n, m));
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        CHECK(macmahon_count(k, m, n) == macmahon_count(m, k, n));
        CHECK(macmahon_count(k, m, n) == macmahon_count(k, n, m));
      }
}

TEST_CASE("plane partition enumeration") {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        auto pps = enumerate_plane_partitions(k, m, n);
        CHECK(pps.size() == macmahon_count(k, m, n));
        CHECK(std::is_sorted(pps.begin(), pps.end()));
        CHECK(std::adjacent_find(pps.begin(), pps.end()) == pps.end());
        for (const auto& p : pps) CHECK(p.is_valid());
      }
  CHECK(code_of([] { enumerate_plane_partitions(3, 3, 3, 100); }) == "too_many_partitions");
  CHECK(code_of([] { enumerate_plane_partitions(0, 3, 3); }) == "invalid_dimensions");
  CHECK_FALSE((PlanePartition{1, 2, 2, {1, 2}}.is_valid()));
  CHECK_FALSE((PlanePartition{2, 1, 2, {1, 2}}.is_valid()));
  CHECK_FALSE((PlanePartition{1, 2, 2, {3, 0}}.is_valid()));
}

TEST_CASE("backtracking agrees with brute force") {
  for (auto [k, m, n] : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {1, 2, 1}}) {
    auto g = build_honeycomb(k, m, n);
    auto brute = oracle::brute_matchings(g.graph());
    std::set<std::vector<int>> fast;
    for (const auto& mt : enumerate_perfect_matchings(g.graph())) fast.insert(mt.elements());
    CHECK(fast == brute);
  }
  for (int v = 2; v <= 8; v += 2) CHECK(oracle::brute_matchings(complete_graph(v)).size() ==
                                        enumerate_perfect_matchings(complete_graph(v)).size());
  CHECK(enumerate_perfect_matchings(path_graph(7)).empty());
  CHECK(enumerate_perfect_matchings(cycle_graph(12)).size() == 2);
  CHECK(code_of([] { enumerate_perfect_matchings(build_honeycomb(2, 2, 2).graph(), 10); }) == "too_many_matchings");
}

TEST_CASE("the tiling bijection") {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        auto g = build_honeycomb(k, m, n);
        auto pps = enumerate_plane_partitions(k, m, n);
        auto all = enumerate_perfect_matchings(g.graph());
        std::set<Matching> image;
        for (const auto& p : pps) {
          auto mt = pp_to_matching(g, p);
          CHECK(is_perfect_matching(g.graph(), mt));
          CHECK(matching_to_pp(g, mt) == p);
          if (k == 1) CHECK(pp_to_matching_k1(g, p) == mt);
          image.insert(mt);
        }
        CHECK(image == std::set<Matching>(all.begin(), all.end()));
        auto ordered = enumerate_perfect_matchings(g);
        for (std::size_t i = 0; i < pps.size(); ++i) CHECK(ordered[i] == pp_to_matching(g, pps[i]));
      }
}

TEST_CASE("the tiling has one lozenge per unit square of the box faces") {
  auto g = build_honeycomb(2, 3, 4);
  for (const auto& p : enumerate_plane_partitions(2, 3, 4)) {
    std::map<LatticeDir, int> per_dir;
    for (int e : pp_to_matching(g, p).elements()) ++per_dir[g.lattice_edge(e).dir];
    CHECK(per_dir[LatticeDir::Diag] == 2 * 3);
    CHECK(per_dir[LatticeDir::X] == 3 * 4);
    CHECK(per_dir[LatticeDir::Y] == 2 * 4);
  }
}

TEST_CASE("x and y membership, extreme facet intersection") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      auto g = build_honeycomb(1, m, n);
      const auto x = static_cast<std::size_t>(g.resolve(NamedLabel{"x"}));
      const auto y = static_cast<std::size_t>(g.resolve(NamedLabel{"y"}));
      Matching zero, full;
      for (const auto& p : enumerate_plane_partitions(1, m, n)) {
        auto mt = pp_to_matching(g, p);
        bool is_zero = p.entries == std::vector<int>(static_cast<std::size_t>(m), 0);
        bool is_full = p.entries == std::vector<int>(static_cast<std::size_t>(m), n);
        CHECK(mt.test(x) == !is_zero);
        CHECK(mt.test(y) == !is_full);
        if (is_zero) zero = mt;
        if (is_full) full = mt;
      }
      CHECK((zero & full).elements() == significant_edges(g));
    }
}

TEST_CASE("bijection errors") {
  auto g = build_honeycomb(1, 2, 2);
  CHECK(code_of([&] { pp_to_matching(g, PlanePartition{1, 2, 3, {1, 0}}); }) == "dimension_mismatch");
  CHECK(code_of([&] { pp_to_matching(g, PlanePartition{1, 2, 2, {0, 1}}); }) == "dimension_mismatch");
  CHECK(code_of([&] { pp_to_matching_k1(build_honeycomb(2, 2, 2), PlanePartition{2, 2, 2, {0, 0, 0, 0}}); }) ==
        "unsupported");
  Matching half(static_cast<std::size_t>(g.edge_count()));
  half.set(0);
  CHECK_FALSE(is_perfect_matching(g.graph(), half));
  CHECK(code_of([&] { matching_to_pp(g, half); }) == "not_perfect_matching");
}

TEST_CASE("json export") {
  CHECK(to_json(PlanePartition{2, 2, 2, {2, 1, 1, 0}}) == nlohmann::json({2, 1, 1, 0}));
}
