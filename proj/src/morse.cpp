#include "pmtopo/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "pmtopo/error.hpp"

namespace pmtopo {

FaceState::FaceState(const SimplicialComplex& c) : c_(&c) {
  alive_.resize(static_cast<std::size_t>(c.level_count()));
  for (int r = 0; r < c.level_count(); ++r) {
    alive_[static_cast<std::size_t>(r)].assign(c.level(r).size(), 1);
    alive_count_ += c.level(r).size();
  }
}

bool FaceState::alive(const Face& f) const {
  auto idx = c_->index_of(f);
  return idx && alive_[static_cast<std::size_t>(f.count())][*idx];
}

void FaceState::remove(const Face& f) {
  auto idx = c_->index_of(f);
  if (!idx) return;
  char& flag = alive_[static_cast<std::size_t>(f.count())][*idx];
  if (flag) {
    flag = 0;
    --alive_count_;
  }
}

ElementPairing element_pairing(FaceState& state, int x) {
  ElementPairing out;
  const auto& c = state.complex();
  for (int r = 0; r + 1 < c.level_count(); ++r)
    state.for_each_alive(r, [&](const Face& s) {
      if (s.test(x)) return;
      Face t = s.with(x);
      if (state.alive(t)) out.pairs.emplace_back(s, t);
    });
  for (const auto& [s, t] : out.pairs) {
    out.removed.push_back(s);
    out.removed.push_back(t);
  }
  for (const auto& f : out.removed) state.remove(f);
  return out;
}

MorsePairing sequential_pairing(const SimplicialComplex& c, const std::vector<int>& xs) {
  if (c.is_void()) throw Error("void_complex", "cannot pair the void complex");
  std::set<int> seen;
  for (int x : xs) {
    if (x < 0 || x >= c.ground()) throw Error("invalid_vertex", "pairing vertex outside the ground set");
    if (!seen.insert(x).second) throw Error("duplicate_vertex", "duplicate pairing vertex");
  }
  MorsePairing p;
  p.sequence = xs;
  FaceState state(c);
  for (int x : xs) {
    auto ep = element_pairing(state, x);
    p.pairs.insert(p.pairs.end(), ep.pairs.begin(), ep.pairs.end());
  }
  for (int r = 0; r < c.level_count(); ++r) state.for_each_alive(r, [&](const Face& f) { p.critical.push_back(f); });
  p.acyclic = verify_acyclic(c, p.pairs);
  return p;
}

bool verify_acyclic(const SimplicialComplex& c, const std::vector<FacePair>& pairs) {
  // Validate, and bucket the pairs by the cardinality of their lower face.
  std::map<int, std::vector<FacePair>> layers;
  std::vector<std::vector<char>> used(static_cast<std::size_t>(c.level_count()));
  for (int r = 0; r < c.level_count(); ++r) used[static_cast<std::size_t>(r)].assign(c.level(r).size(), 0);
  auto claim = [&](const Face& f) {
    auto idx = c.index_of(f);
    if (!idx) throw Error("malformed_pairing", "paired set is not a face");
    char& u = used[static_cast<std::size_t>(f.count())][*idx];
    if (u) throw Error("malformed_pairing", "face occurs in two pairs");
    u = 1;
  };
  for (const auto& [s, t] : pairs) {
    if (!s.is_subset_of(t) || t.count() != s.count() + 1)
      throw Error("malformed_pairing", "pair is not a codimension-one incidence");
    claim(s);
    claim(t);
    layers[s.count()].push_back({s, t});
  }

  // A V-path a_0 < u(a_0) > a_1 < u(a_1) > ... stays in one layer. Arcs run
  // from a paired lower face to the other paired lower faces of its partner.
  for (auto& [r, layer] : layers) {
    std::sort(layer.begin(), layer.end());
    const std::size_t n = layer.size();
    auto find_lower = [&](const Face& f) -> std::optional<std::size_t> {
      auto it = std::lower_bound(layer.begin(), layer.end(), f,
                                 [](const FacePair& p, const Face& v) { return p.first < v; });
      if (it == layer.end() || it->first != f) return std::nullopt;
      return static_cast<std::size_t>(it - layer.begin());
    };
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [s, t] = layer[i];
      t.for_each([&](int e) {
        Face other = t.without(e);
        if (other == s) return;
        if (auto j = find_lower(other)) {
          out[i].push_back(*j);
          ++indeg[*j];
        }
      });
    }
    std::queue<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] == 0) ready.push(i);
    std::size_t done = 0;
    while (!ready.empty()) {
      auto i = ready.front();
      ready.pop();
      ++done;
      for (auto j : out[i])
        if (--indeg[j] == 0) ready.push(j);
    }
    if (done != n) return false;
  }
  return true;
}

namespace {

std::string wedge_name(int copies, int d) {
  std::string sphere = "S^" + std::to_string(d);
  std::string out = sphere;
  for (int i = 1; i < copies; ++i) out += " v " + sphere;
  return out;
}

}  // namespace

MorseSummary morse_summary(const MorsePairing& p) {
  if (!p.acyclic) throw Error("not_acyclic", "pairing is not acyclic");
  MorseSummary s;
  s.empty_face_paired = true;
  for (const auto& f : p.critical) {
    if (f.empty()) {
      s.empty_face_paired = false;
      continue;
    }
    auto d = static_cast<std::size_t>(f.dim());
    if (s.critical_by_dim.size() <= d) s.critical_by_dim.resize(d + 1, 0);
    ++s.critical_by_dim[d];
  }
  s.cells = s.critical_by_dim;
  if (s.empty_face_paired) {
    if (s.cells.empty()) s.cells.push_back(0);
    ++s.cells[0];
  }

  int total = 0, top = -1, top_count = 0;
  for (std::size_t d = 0; d < s.cells.size(); ++d) {
    total += s.cells[d];
    if (s.cells[d] > 0 && d > 0) {
      top = static_cast<int>(d);
      top_count = s.cells[d];
    }
  }
  int zero_cells = s.cells.empty() ? 0 : s.cells[0];
  if (total == 0) {
    s.homotopy_type = "empty";
  } else if (total == 1 && zero_cells == 1) {
    s.homotopy_type = "contractible (one 0-cell)";
  } else if (zero_cells == 1 && total == 1 + top_count && top > 0) {
    s.homotopy_type = wedge_name(top_count, top);
  } else if (zero_cells == total) {
    s.homotopy_type = zero_cells == 2 ? "S^0" : std::to_string(zero_cells) + " points";
  } else {
    std::string cells;
    for (std::size_t d = 0; d < s.cells.size(); ++d) {
      if (!cells.empty()) cells += ", ";
      cells += std::to_string(s.cells[d]) + " of dim " + std::to_string(d);
    }
    s.homotopy_type = "CW complex with cells: " + cells;
  }
  return s;
}

nlohmann::json to_json(const MorsePairing& p, const EdgeLabeller& label) {
  nlohmann::json j;
  auto seq = nlohmann::json::array();
  for (int x : p.sequence) seq.push_back(label(x));
  j["sequence"] = std::move(seq);
  j["pairs"] = p.pairs.size();
  auto crit = nlohmann::json::array();
  for (const auto& f : p.critical) {
    auto names = nlohmann::json::array();
    f.for_each([&](int e) { names.push_back(label(e)); });
    crit.push_back({{"dim", f.dim()}, {"face", std::move(names)}});
  }
  j["critical"] = std::move(crit);
  j["acyclic"] = p.acyclic;
  return j;
}

}  // namespace pmtopo
