#include "pmtopo/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "pmtopo/error.hpp"
#include "pmtopo/partitions.hpp"

namespace pmtopo {

std::size_t face_cap_from_env() {
  const char* env = std::getenv("PMTOPO_FACE_CAP");
  if (!env || !*env) return kDefaultFaceCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error("invalid_face_cap", "PMTOPO_FACE_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

SimplicialComplex SimplicialComplex::void_complex(int ground) {
  SimplicialComplex c;
  c.ground_ = ground;
  return c;
}

namespace {

// Calls fn on every subset of `elems` with exactly r elements.
template <class F>
void for_each_subset(const std::vector<int>& elems, int r, F&& fn) {
  const int n = static_cast<int>(elems.size());
  if (r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Face f;
    for (int i : idx) f.set(elems[static_cast<std::size_t>(i)]);
    fn(f);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < r; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

void sort_unique(std::vector<Face>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int ground, std::vector<Face> facets, std::size_t cap) {
  if (ground < 0 || ground > kMaxGround) throw Error("ground_too_large", "ground set exceeds 128 elements");
  if (facets.empty()) return void_complex(ground);
  for (const auto& f : facets)
    f.for_each([&](int e) {
      if (e >= ground) throw Error("invalid_face", "facet element outside the ground set");
    });

  SimplicialComplex c;
  c.ground_ = ground;
  c.void_ = false;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < facets.size() && keep; ++j) {
      if (i == j) continue;
      if (facets[i] == facets[j]) keep = j > i;
      else if (facets[i].is_subset_of(facets[j])) keep = false;
    }
    if (keep) c.facets_.push_back(facets[i]);
  }

  int top = 0;
  for (const auto& f : c.facets_) top = std::max(top, f.count());
  std::size_t total = 0;
  c.levels_.resize(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<int>> elems;
  for (const auto& f : c.facets_) elems.push_back(f.elements());
  for (int r = 0; r <= top; ++r) {
    auto& lvl = c.levels_[static_cast<std::size_t>(r)];
    for (const auto& el : elems) {
      for_each_subset(el, r, [&](const Face& f) {
        lvl.push_back(f);
        if (lvl.size() > 2 * cap) {
          sort_unique(lvl);
          if (total + lvl.size() > cap) throw Error("complex_too_large", "complex too large");
        }
      });
    }
    sort_unique(lvl);
    total += lvl.size();
    if (total > cap) throw Error("complex_too_large", "complex too large");
  }
  return c;
}

const std::vector<Face>& SimplicialComplex::level(int cardinality) const {
  static const std::vector<Face> kNone;
  if (cardinality < 0 || cardinality >= level_count()) return kNone;
  return levels_[static_cast<std::size_t>(cardinality)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t t = 0;
  for (const auto& l : levels_) t += l.size();
  return t;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
  const auto& lvl = level(f.count());
  auto it = std::lower_bound(lvl.begin(), lvl.end(), f);
  if (it == lvl.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - lvl.begin());
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  if (void_) throw Error("void_complex", "the void complex has no f-vector");
  std::vector<std::int64_t> out;
  for (const auto& l : levels_) out.push_back(static_cast<std::int64_t>(l.size()));
  return out;
}

bool is_face(const SimplicialComplex& c, const Face& s) {
  return std::any_of(c.facets().begin(), c.facets().end(), [&](const Face& f) { return s.is_subset_of(f); });
}

Face facet_intersection(const SimplicialComplex& c, std::size_t i, std::size_t j) {
  if (i >= c.facets().size() || j >= c.facets().size()) throw Error("invalid_facet", "facet index out of range");
  return c.facets()[i] & c.facets()[j];
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
  // Sum over d >= -1 of (-1)^d f_d; the empty face counts with sign -1.
  auto fv = c.f_vector();
  std::int64_t chi = 0;
  for (std::size_t r = 0; r < fv.size(); ++r) chi += (r % 2 == 1 ? 1 : -1) * fv[r];
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& c) { return reduced_euler_characteristic(c) + 1; }

namespace {

void check_ground(int edges) {
  if (edges > kMaxGround) throw Error("ground_too_large", "graph has more than 128 edges");
}

SimplicialComplex complex_of_matchings(int edges, const std::vector<Matching>& ms, std::size_t cap) {
  std::vector<Face> facets;
  for (const auto& m : ms) facets.push_back(m.to_face());
  return SimplicialComplex::from_facets(edges, std::move(facets), cap);
}

}  // namespace

SimplicialComplex perfect_matching_complex(const Graph& g, std::size_t cap) {
  check_ground(g.edge_count());
  return complex_of_matchings(g.edge_count(), enumerate_perfect_matchings(g), cap);
}

SimplicialComplex perfect_matching_complex(const HexGraph& g, std::size_t cap) {
  check_ground(g.edge_count());
  std::vector<Matching> ms;
  for (const auto& p : enumerate_plane_partitions(g.k(), g.m(), g.n())) ms.push_back(pp_to_matching(g, p));
  return complex_of_matchings(g.edge_count(), ms, cap);
}

NerveComplex nerve(const std::vector<Face>& sets) {
  if (sets.size() > static_cast<std::size_t>(kMaxNerveSets))
    throw Error("too_many_sets", "nerve supports at most " + std::to_string(kMaxNerveSets) + " sets");
  const int n = static_cast<int>(sets.size());
  Face all;
  for (const auto& s : sets) all = all | s;

  // Depth-first over index sets in increasing order; a branch dies as soon as
  // its intersection is empty. Leaves that cannot grow are the maximal faces.
  std::vector<Face> found{Face{}};
  std::function<void(int, Face, const Face&)> grow = [&](int next, Face idx, const Face& meet) {
    for (int i = next; i < n; ++i) {
      Face m = meet & sets[static_cast<std::size_t>(i)];
      if (m.empty()) continue;
      Face j = idx.with(i);
      found.push_back(j);
      grow(i + 1, j, m);
    }
  };
  grow(0, Face{}, all);

  std::vector<Face> maximal;
  for (const auto& f : found) {
    bool is_max = true;
    for (int i = 0; i < n && is_max; ++i)
      if (!f.test(i)) {
        Face m = all;
        f.with(i).for_each([&](int t) { m = m & sets[static_cast<std::size_t>(t)]; });
        if (!m.empty()) is_max = false;
      }
    if (is_max) maximal.push_back(f);
  }
  return {sets, SimplicialComplex::from_facets(n, std::move(maximal))};
}

nlohmann::json to_json(const SimplicialComplex& c, bool facets_only) {
  nlohmann::json j;
  j["ground"] = c.ground();
  auto facets = nlohmann::json::array();
  for (const auto& f : c.facets()) facets.push_back(f.elements());
  j["facets"] = std::move(facets);
  if (c.is_void()) j["void"] = true;
  else if (!facets_only) j["f_vector"] = c.f_vector();
  return j;
}

}  // namespace pmtopo
