#include "pmtopo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "catalog222.hpp"
#include "pmtopo/error.hpp"
#include "pmtopo/hexgraph.hpp"
#include "pmtopo/homology.hpp"
#include "pmtopo/morse.hpp"
#include "pmtopo/partitions.hpp"

namespace pmtopo {

bool TheoremReport::passed() const {
  return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

void TheoremReport::add(std::string id, std::string statement, bool ok, std::string detail) {
  claims.push_back({std::move(id), std::move(statement), ok, std::move(detail)});
}

nlohmann::json to_json(const TheoremReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["parameters"] = {{"k", r.k}, {"m", r.m}, {"n", r.n}};
  j["passed"] = r.passed();
  if (!r.note.empty()) j["note"] = r.note;
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["statement"] = c.statement;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  if (with_timings) {
    nlohmann::ordered_json t;
    for (const auto& [name, secs] : r.timings) t[name] = secs;
    j["timings"] = std::move(t);
  }
  return nlohmann::json::parse(j.dump());
}

namespace {

class Stage {
 public:
  Stage(TheoremReport& r, std::string name) : r_(r), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
  ~Stage() {
    r_.timings.emplace_back(name_, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count());
  }

 private:
  TheoremReport& r_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
};

// A honeycomb with its plane partitions and matching complex; facet i is the
// matching of pps[i].
struct Setting {
  HexGraph g;
  std::vector<PlanePartition> pps;
  SimplicialComplex c;

  int edge(std::string_view label) const { return g.resolve(parse_label(label)); }
  Face face(std::initializer_list<std::string_view> labels) const {
    Face f;
    for (auto l : labels) f.set(edge(l));
    return f;
  }
  std::string names(const Face& f) const {
    std::string s = "{";
    f.for_each([&](int e) {
      if (s.size() > 1) s += ", ";
      s += g.label_of(e);
    });
    return s + "}";
  }
  std::size_t pp_index(std::vector<int> entries) const {
    for (std::size_t i = 0; i < pps.size(); ++i)
      if (pps[i].entries == entries) return i;
    throw Error("internal", "no such plane partition");
  }
  const Face& facet(std::vector<int> entries) const { return c.facets()[pp_index(std::move(entries))]; }
  /// s lies in some facet whose partition satisfies pred.
  bool in_family(const Face& s, const std::function<bool(const PlanePartition&)>& pred) const {
    for (std::size_t i = 0; i < pps.size(); ++i)
      if (pred(pps[i]) && s.is_subset_of(c.facets()[i])) return true;
    return false;
  }
};

Setting make_setting(int k, int m, int n, std::size_t cap = kDefaultFaceCap) {
  Setting s{build_honeycomb(k, m, n), enumerate_plane_partitions(k, m, n), SimplicialComplex::void_complex(0)};
  s.c = perfect_matching_complex(s.g, cap);
  return s;
}

void check_facet_order(TheoremReport& r, const Setting& s) {
  bool ok = s.c.facets().size() == s.pps.size();
  for (std::size_t i = 0; ok && i < s.pps.size(); ++i) ok = s.c.facets()[i] == pp_to_matching(s.g, s.pps[i]).to_face();
  r.add("facets.bijection", "facets are the tilings of the plane partitions, one each", ok,
        std::to_string(s.c.facets().size()) + " facets, " + std::to_string(s.pps.size()) + " partitions");
}

std::string betti_string(const std::map<int, std::int64_t>& b) {
  std::string s;
  for (const auto& [d, v] : b)
    if (v != 0) s += (s.empty() ? "" : ", ") + ("b~" + std::to_string(d) + "=" + std::to_string(v));
  return s.empty() ? "all zero" : s;
}

// Homology expectations shared by the theorem reports: b~_dim = copies and
// nothing else. copies = 0 means the reduced homology should vanish.
HomologyProfile homology_claims(TheoremReport& r, const SimplicialComplex& c, int dim, int copies,
                                const std::string& what, const MorsePairing* pairing) {
  HomologyProfile h;
  {
    Stage st(r, "homology");
    h = reduced_homology(c);
  }
  bool ok = h.torsion.empty() && !h.is_void && (copies == 0 || h.betti(dim) == copies);
  for (const auto& [d, b] : h.betti_reduced) ok = ok && b == (d == dim ? copies : 0);
  std::string expect = copies == 0   ? "vanishes"
                       : copies == 1 ? "is that of S^" + std::to_string(dim)
                                     : "is that of a wedge of " + std::to_string(copies) + " copies of S^" +
                                           std::to_string(dim);
  std::string torsion = h.torsion.empty() ? "no torsion" : "torsion present";
  r.add("homology.profile", "reduced integral homology of " + what + " " + expect, ok, betti_string(h.betti_reduced) + "; " + torsion);
  r.add("homology.euler", "alternating sum of reduced Betti numbers equals the reduced Euler characteristic",
        h.euler_characteristic() == reduced_euler_characteristic(c),
        "chi~=" + std::to_string(reduced_euler_characteristic(c)));
  {
    Stage st(r, "homology-mod-p");
    auto mod_p = reduced_betti_mod_p(c);
    r.add("homology.mod-p", "Betti numbers over GF(2147483647) agree with the integral computation",
          mod_p == h.betti_reduced, betti_string(mod_p));
  }
  {
    Stage st(r, "boundary-check");
    r.add("homology.boundary", "every composite of consecutive boundary maps is zero", boundary_squared_zero(c));
  }
  if (pairing) {
    std::map<int, std::int64_t> crit;
    for (const auto& f : pairing->critical) ++crit[f.dim()];
    bool ineq = true;
    for (const auto& [d, b] : h.betti_reduced) ineq = ineq && crit[d] >= b;
    r.add("morse.inequalities", "critical faces per dimension (the empty face in dimension -1) bound the reduced Betti numbers",
          ineq);
  }
  return h;
}

std::vector<int> resolve_sequence(const Setting& s, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(s.edge(l));
  return out;
}

std::string face_list(const Setting& s, const std::vector<Face>& faces) {
  std::string out;
  for (const auto& f : faces) out += (out.empty() ? "" : " ") + s.names(f);
  return out.empty() ? "none" : out;
}

// Faces still unpaired after element pairings along xs.
std::vector<Face> unpaired_after(const SimplicialComplex& c, const std::vector<int>& xs) {
  FaceState st(c);
  for (int x : xs) element_pairing(st, x);
  std::vector<Face> out;
  for (int r = 0; r < c.level_count(); ++r) st.for_each_alive(r, [&](const Face& f) { out.push_back(f); });
  return out;
}

std::vector<Face> power_set(const Face& f) {
  std::vector<Face> out{Face{}};
  f.for_each([&](int e) {
    auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i].with(e));
  });
  return out;
}

std::set<Face> as_set(const std::vector<Face>& v) { return {v.begin(), v.end()}; }

// Edges of the line of hexagons under their own naming, as structured labels
// of H_{1x1xn}: rungs b_{i,1} are the parallel edges a_{1,i}, the upper path
// of hexagon i is a_{i,1}, d_{i,1} and the lower path d_{i-1,0}, a_{i,0}.
StructuredLabel line_edge(char family, int i, int j) {
  if (family == 'b') return {Family::A, 1, i};
  if (family == 'a') return j == 1 ? StructuredLabel{Family::B, 1, i} : StructuredLabel{Family::B, 0, i};
  return j == 1 ? StructuredLabel{Family::D, 1, i} : StructuredLabel{Family::D, 0, i};
}

}  // namespace

TheoremReport verify_line(int n) {
  if (n < 1 || n > 6) throw Error("out_of_range", "line of hexagons is supported for 1 <= n <= 6");
  TheoremReport r;
  r.theorem = "T-line";
  r.k = 1;
  r.m = 1;
  r.n = n;
  Setting s;
  {
    Stage st(r, "build");
    s = make_setting(1, 1, n);
  }
  check_facet_order(r, s);
  if (n == 1) {
    r.note = "a single hexagon is the 6-cycle baseline (S^0), outside the n >= 2 hypothesis";
    r.add("line.facets", "the hexagon has exactly two perfect matchings, and they are disjoint",
          s.c.facets().size() == 2 && (s.c.facets()[0] & s.c.facets()[1]).empty());
    homology_claims(r, s.c, 0, 1, "the hexagon's complex", nullptr);
    return r;
  }

  auto g_edge = [&](char f, int i, int j) { return s.g.resolve(line_edge(f, i, j)); };
  bool unique_ok = true;
  std::string unique_detail;
  for (int i = 0; i <= n; ++i) {
    Face expected;
    for (int h = 1; h <= i; ++h) {
      expected.set(g_edge('a', h, 1));
      expected.set(g_edge('d', h - 1, 0));
    }
    expected.set(g_edge('b', i, 1));
    for (int h = i + 1; h <= n; ++h) {
      expected.set(g_edge('d', h, 1));
      expected.set(g_edge('a', h, 0));
    }
    std::vector<std::size_t> holders;
    for (std::size_t f = 0; f < s.c.facets().size(); ++f)
      if (s.c.facets()[f].test(g_edge('b', i, 1))) holders.push_back(f);
    bool ok = holders.size() == 1 && s.c.facets()[holders[0]] == expected && s.pps[holders[0]].entries[0] == i;
    if (!ok) unique_detail += "rung " + std::to_string(i) + " fails; ";
    unique_ok = unique_ok && ok;
  }
  r.add("line.rung-matchings",
        "each rung b_{i,1} lies in exactly one perfect matching A_i, namely a_{h,1}, d_{h-1,0} for h <= i, "
        "b_{i,1}, and d_{h,1}, a_{h,0} for h > i",
        unique_ok, unique_detail.empty() ? std::to_string(n + 1) + " rungs checked" : unique_detail);

  const auto& A = s.c.facets();
  bool shared_ok = true;
  for (int i = 0; i <= n; ++i) {
    const Face& f = A[static_cast<std::size_t>(i)];
    if (i <= n - 1) shared_ok = shared_ok && f.test(g_edge('d', n, 1)) && f.test(g_edge('a', n, 0));
    if (i >= 1) shared_ok = shared_ok && f.test(g_edge('a', 1, 1)) && f.test(g_edge('d', 0, 0));
  }
  r.add("line.shared-edges", "A_0..A_{n-1} all contain d_{n,1}, a_{n,0}; A_1..A_n all contain a_{1,1}, d_{0,0}",
        shared_ok);
  r.add("line.ends-disjoint", "A_0 and A_n are disjoint", facet_intersection(s.c, 0, static_cast<std::size_t>(n)).empty());

  NerveComplex nv;
  {
    Stage st(r, "nerve");
    nv = nerve(A);
  }
  Face low, high, all;
  for (int i = 0; i <= n; ++i) {
    if (i < n) low.set(i);
    if (i > 0) high.set(i);
    all.set(i);
  }
  r.add("line.nerve-faces", "{A_0..A_{n-1}} and {A_1..A_n} are nerve faces, {A_0..A_n} is not",
        nv.complex.contains(low) && nv.complex.contains(high) && !nv.complex.contains(all),
        "nerve facets: " + std::to_string(nv.complex.facets().size()));
  bool meets_are_faces = true;
  for (int rr = 1; rr < nv.complex.level_count(); ++rr)
    for (const auto& J : nv.complex.level(rr)) {
      Face meet;
      bool first = true;
      J.for_each([&](int i) {
        meet = first ? A[static_cast<std::size_t>(i)] : (meet & A[static_cast<std::size_t>(i)]);
        first = false;
      });
      meets_are_faces = meets_are_faces && !meet.empty() && is_face(s.c, meet);
    }
  r.add("line.nerve-hypothesis", "every nonempty intersection of facets is a face (a simplex) of the complex",
        meets_are_faces);
  auto hn = reduced_homology(nv.complex);
  r.add("line.nerve-homology", "reduced homology of the nerve vanishes", hn.is_trivial(), betti_string(hn.betti_reduced));
  homology_claims(r, s.c, 0, 0, "the line complex", nullptr);
  return r;
}

namespace {

// x and y membership and the extreme-facet intersection for k = 1.
void lemma_claims(TheoremReport& r, const Setting& s) {
  const int x = s.edge("x"), y = s.edge("y");
  const int m = s.g.m(), n = s.g.n();
  bool xy = true;
  for (std::size_t i = 0; i < s.pps.size(); ++i) {
    const auto& e = s.pps[i].entries;
    bool zero = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    bool full = std::all_of(e.begin(), e.end(), [&](int v) { return v == n; });
    xy = xy && s.c.facets()[i].test(x) == !zero && s.c.facets()[i].test(y) == !full;
  }
  r.add("lemma.xy", "x = d_{0,0} lies in every matching but (0,...,0); y = d_{m,n} in every matching but (n,...,n)", xy);
  Face sig;
  for (int e : significant_edges(s.g)) sig.set(e);
  Face meet = s.facet(std::vector<int>(static_cast<std::size_t>(m), 0)) & s.facet(std::vector<int>(static_cast<std::size_t>(m), n));
  r.add("lemma.extreme-intersection", "the facets (0,...,0) and (n,...,n) meet exactly in the significant edges",
        meet == sig, s.names(meet));
}

}  // namespace

TheoremReport verify_1x2xn(int n) {
  if (n < 2 || n > 5) throw Error("out_of_range", "H_{1x2xn} is supported for 2 <= n <= 5");
  TheoremReport r;
  r.theorem = "T-1x2xn";
  r.k = 1;
  r.m = 2;
  r.n = n;
  Setting s;
  {
    Stage st(r, "build");
    s = make_setting(1, 2, n, face_cap_from_env());
  }
  check_facet_order(r, s);
  lemma_claims(r, s);
  const int x = s.edge("x"), y = s.edge("y");

  MorsePairing p;
  {
    Stage st(r, "pairing");
    p = sequential_pairing(s.c, {x, y});
  }
  r.add("morse.acyclic", "M(x) followed by M(y) is acyclic", p.acyclic);
  bool empty_with_x = std::find(p.pairs.begin(), p.pairs.end(), FacePair{Face{}, Face{}.with(x)}) != p.pairs.end();
  r.add("morse.empty-face", "the empty face is paired with {x}", empty_with_x);

  Face tau = Face{}.with(y);
  for (int i = 1; i <= n - 1; ++i) tau.set(s.edge("d_1_" + std::to_string(i)));
  r.add("morse.critical", "exactly one critical cell, {y, d_{1,1}, ..., d_{1,n-1}}",
        p.critical.size() == 1 && p.critical[0] == tau, face_list(s, p.critical));

  // Characterisation of the survivors through the four membership conditions.
  std::vector<Face> predicted;
  for (int rr = 0; rr < s.c.level_count(); ++rr)
    for (const auto& sigma : s.c.level(rr)) {
      if (sigma.test(x) || sigma.test(y)) continue;
      if (s.c.contains(sigma.with(y)) && s.c.contains(sigma.with(x)) && !s.c.contains(sigma.with(x).with(y)))
        predicted.push_back(sigma.with(y));
    }
  r.add("morse.survivor-conditions",
        "the unpaired faces are exactly {y} + sigma with x, y not in sigma, sigma+y and sigma+x faces, sigma+x+y not a face",
        as_set(predicted) == as_set(p.critical), std::to_string(predicted.size()) + " predicted");

  Face sig;
  for (int e : significant_edges(s.g)) sig.set(e);
  bool proper_ok = true;
  for (int i = 1; i <= n - 1; ++i) {
    const Face& f = s.facet({i, i});
    Face di = Face{}.with(s.edge("d_1_" + std::to_string(i)));
    proper_ok = proper_ok && (f & sig) == sig - di;
  }
  for (const auto& rho : power_set(sig)) {
    if (rho == sig) continue;
    bool covered = false;
    for (int i = 1; i <= n - 1 && !covered; ++i) covered = rho.is_subset_of(s.facet({i, i}));
    proper_ok = proper_ok && covered;
  }
  r.add("proof.proper-subsets",
        "(i,i) contains the significant edges except d_{1,i}, so every proper subset of them lies in some (i,i)", proper_ok);

  auto summary = morse_summary(p);
  std::string expected_type = "S^" + std::to_string(n - 1);
  r.add("morse.summary", "one 0-cell and one (n-1)-cell, i.e. " + expected_type, summary.homotopy_type == expected_type,
        summary.homotopy_type);
  homology_claims(r, s.c, n - 1, 1, "M_p(H_{1x2x" + std::to_string(n) + "})", &p);
  return r;
}

TheoremReport verify_1xmxn(int m, int n, std::size_t face_cap) {
  if (m == 2 || n == 2)
    throw Error("hypothesis", "requires m, n >= 3; the m = 2 case is verify_1x2xn");
  if (m < 3 || n < 3) throw Error("hypothesis", "requires m, n >= 3");
  TheoremReport r;
  r.theorem = "T-1xmxn";
  r.k = 1;
  r.m = m;
  r.n = n;
  Setting s;
  {
    Stage st(r, "build");
    s = make_setting(1, m, n, face_cap);
  }
  check_facet_order(r, s);
  lemma_claims(r, s);
  const int x = s.edge("x"), y = s.edge("y"), z = s.edge("z");
  Face sig;
  for (int e : significant_edges(s.g)) sig.set(e);
  r.add("proof.z-significant", "z = d_{m-1,1} is a significant edge", sig.test(z));

  {
    Stage st(r, "survivors");
    auto left = unpaired_after(s.c, {x, y});
    std::vector<Face> predicted;
    for (const auto& sigma : power_set(sig)) {
      Face tau = sigma.with(y);
      if (s.c.contains(tau) && !s.c.contains(tau.with(x))) predicted.push_back(tau);
    }
    r.add("morse.survivors-xy",
          "after M(x), M(y) the unpaired faces are {y} + sigma with sigma in the extreme intersection and tau + x not a face",
          as_set(left) == as_set(predicted), std::to_string(left.size()) + " faces");
  }

  MorsePairing p;
  {
    Stage st(r, "pairing");
    p = sequential_pairing(s.c, {x, y, z});
  }
  r.add("morse.acyclic", "M(x), M(y), M(z) is acyclic", p.acyclic);
  r.add("morse.critical", "no critical faces remain", p.critical.empty(), face_list(s, p.critical));

  // Where sigma+z fails to extend, replayed over every facet.
  {
    Stage st(r, "cases");
    const Face xy = Face{}.with(x).with(y);
    std::size_t case1 = 0, case2 = 0, failing = 0;
    bool implication = true, c1 = true, c2 = true, c2_row = true;
    auto h = [&](const PlanePartition& pp, int i) { return pp.entries[static_cast<std::size_t>(i - 1)]; };
    for (const auto& sigma : power_set(sig.without(z))) {
      for (std::size_t i = 0; i < s.pps.size(); ++i) {
        const auto& pp = s.pps[i];
        const Face& P = s.c.facets()[i];
        if (!(sigma | xy).is_subset_of(P)) continue;
        const Face big = sigma.with(z) | xy;
        if (!big.is_subset_of(P)) {
          ++failing;
          implication = implication && h(pp, m - 1) >= 1 && h(pp, m) <= 1;
        }
        if (h(pp, m - 1) >= 2 && h(pp, m) <= 1) {
          ++case1;
          auto e = pp.entries;
          e[static_cast<std::size_t>(m - 1)] = 2;
          c1 = c1 && big.is_subset_of(s.facet(e));
        } else if (h(pp, m - 1) == 1) {
          ++case2;
          c2_row = c2_row && h(pp, m - 2) >= 1;
          auto e = pp.entries;
          e[static_cast<std::size_t>(m - 2)] = 0;
          e[static_cast<std::size_t>(m - 1)] = 0;
          c2 = c2 && big.is_subset_of(s.facet(e));
        }
      }
    }
    r.add("proof.failure-forces", "if sigma+x+y lies in (h) but sigma+z+x+y does not, then h_{m-1} >= 1 and h_m <= 1",
          implication && failing > 0, std::to_string(failing) + " such pairs");
    r.add("proof.raise-last-row", "h_{m-1} >= 2, h_m <= 1: sigma+z+x+y lies in (h_1, ..., h_{m-1}, 2)", c1 && case1 > 0,
          std::to_string(case1) + " pairs (sigma, h)");
    r.add("proof.row-above-nonzero", "h_{m-1} = 1 forces h_{m-2} >= 1", c2_row);
    r.add("proof.clear-last-rows", "h_{m-1} = 1: sigma+z+x+y lies in (h_1, ..., h_{m-2}, 0, 0)", c2 && case2 > 0,
          std::to_string(case2) + " pairs (sigma, h)");
  }

  auto summary = morse_summary(p);
  r.add("morse.summary", "the pairing leaves a single 0-cell: contractible", summary.homotopy_type == "contractible (one 0-cell)",
        summary.homotopy_type);
  homology_claims(r, s.c, 0, 0, "M_p(H_{1x" + std::to_string(m) + "x" + std::to_string(n) + "})", &p);
  return r;
}

std::vector<std::string> sequence_2x2x2() {
  return {"alpha", "beta", "gamma", "delta", "c_1_0", "b_0_2", "c_3_3", "c_0_0", "b_3_2"};
}

TheoremReport verify_2x2x2() {
  TheoremReport r;
  r.theorem = "T-2x2x2";
  r.k = r.m = r.n = 2;
  Setting s;
  {
    Stage st(r, "build");
    s = make_setting(2, 2, 2);
  }
  check_facet_order(r, s);
  using PP = PlanePartition;
  auto A = [](const PP& p) { return p.entries[0]; };
  auto D = [](const PP& p) { return p.entries[3]; };
  auto is = [](std::vector<int> e) { return [e](const PP& p) { return p.entries == e; }; };

  // (i) the catalogue of drawn matchings.
  {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t v = 0; v < s.g.vertices().size(); ++v)
      at[HexGraph::figure_position2(s.g.vertices()[v])] = static_cast<int>(v);
    bool ok = s.pps.size() == detail::kCatalog222.size();
    for (const auto& entry : detail::kCatalog222) {
      Face drawn;
      for (const auto& seg : entry.segments) {
        auto u = at.find({seg[0], seg[1]}), v = at.find({seg[2], seg[3]});
        if (u == at.end() || v == at.end()) {
          ok = false;
          continue;
        }
        drawn.set(s.g.resolve(RawLabel{std::min(u->second, v->second), std::max(u->second, v->second)}));
      }
      std::vector<int> tab(entry.tableau.begin(), entry.tableau.end());
      ok = ok && drawn == s.facet(tab);
    }
    auto found = enumerate_perfect_matchings(s.g.graph());
    ok = ok && found.size() == 20;
    r.add("catalog.matchings", "the 20 drawn perfect matchings are exactly the tilings of the 20 plane partitions", ok);
  }

  // (ii) observations on which faces extend by alpha..delta.
  {
    struct Obs {
      const char* label;
      std::function<bool(const PP&)> family;
      const char* text;
    };
    std::vector<Obs> obs = {
        {"alpha", [&](const PP& p) { return A(p) == 2; }, "sigma + alpha is a face iff sigma lies in [2*/**]"},
        {"beta", [&](const PP& p) { return is({2, 2, 2, 2})(p) || A(p) == 1; },
         "sigma + beta is a face iff sigma lies in [22/22] or [1*/**]"},
        {"gamma", [&](const PP& p) { return is({0, 0, 0, 0})(p) || D(p) == 1; },
         "sigma + gamma is a face iff sigma lies in [00/00] or [**/*1]"},
        {"delta", [&](const PP& p) { return D(p) == 0; }, "sigma + delta is a face iff sigma lies in [**/*0]"},
    };
    for (const auto& o : obs) {
      const int e = s.edge(o.label);
      bool ok = true;
      std::set<std::size_t> support;
      for (std::size_t i = 0; i < s.pps.size(); ++i)
        if (s.c.facets()[i].test(e)) support.insert(i);
      for (std::size_t i = 0; i < s.pps.size(); ++i) ok = ok && support.count(i) == (o.family(s.pps[i]) ? 1u : 0u);
      for (int rr = 0; rr < s.c.level_count(); ++rr)
        for (const auto& sigma : s.c.level(rr)) {
          if (sigma.test(e)) continue;
          ok = ok && s.c.contains(sigma.with(e)) == s.in_family(sigma, o.family);
        }
      r.add(std::string("extends.") + o.label, o.text, ok);
    }
  }

  const int alpha = s.edge("alpha"), beta = s.edge("beta"), gamma = s.edge("gamma"), delta = s.edge("delta");
  // Two types survive pairing on alpha then beta.
  {
    auto left = unpaired_after(s.c, {alpha, beta});
    auto only_zero = [&](const Face& f) {
      for (std::size_t i = 0; i < s.pps.size(); ++i)
        if (f.is_subset_of(s.c.facets()[i]) != (s.pps[i].entries == std::vector<int>{0, 0, 0, 0})) return false;
      return true;
    };
    std::vector<Face> predicted;
    for (int rr = 0; rr < s.c.level_count(); ++rr)
      for (const auto& f : s.c.level(rr)) {
        if (!f.test(alpha) && !f.test(beta) && only_zero(f)) predicted.push_back(f);
        if (f.test(beta) && !f.test(alpha)) {
          Face sigma = f.without(beta);
          if (s.in_family(sigma, [&](const PP& p) { return A(p) == 2; }) &&
              s.in_family(sigma, [&](const PP& p) { return A(p) == 1; }) && !s.in_family(sigma, is({2, 2, 2, 2})))
            predicted.push_back(f);
        }
      }
    r.add("proof.types-after-beta",
          "after alpha, beta the unpaired faces are: faces only in [00/00] avoiding alpha, beta; and sigma + beta with "
          "sigma in [2*/**] and in [1*/**] but not in [22/22]",
          as_set(left) == as_set(predicted), std::to_string(left.size()) + " faces");
  }

  // (iii) [2*/*1] meets [11/11] and [22/22] in four edges.
  {
    const Face four = s.face({"c_0_0", "c_1_0", "b_2_1", "b_3_2"});
    const Face q11 = s.facet({1, 1, 1, 1}), q22 = s.facet({2, 2, 2, 2});
    Face named = s.facet({2, 2, 2, 1}) & q11 & q22;
    r.add("proof.delta-meet-named", "[22/21] ^ [11/11] ^ [22/22] = {c_{0,0}, c_{1,0}, b_{2,1}, b_{3,2}}", named == four,
          s.names(named));
    std::set<Face> faces;
    Face edges;
    for (std::size_t i = 0; i < s.pps.size(); ++i)
      if (A(s.pps[i]) == 2 && D(s.pps[i]) == 1) {
        Face meet = s.c.facets()[i] & q11 & q22;
        edges = edges | meet;
        for (const auto& f : power_set(meet)) faces.insert(f);
      }
    r.add("proof.delta-meet-family",
          "faces common to some [2*/*1], [11/11] and [22/22] form the power set of {c_{0,0}, c_{1,0}, b_{2,1}, b_{3,2}}",
          edges == four && faces == as_set(power_set(four)), s.names(edges));
  }

  // (iv) meets of [2*/*0], [1*/*0] with [22/22] or [2*/*1], [11/11].
  {
    const Face q11 = s.facet({1, 1, 1, 1}), q22 = s.facet({2, 2, 2, 2});
    std::vector<Face> f20, f10, f21;
    for (std::size_t i = 0; i < s.pps.size(); ++i) {
      const auto& p = s.pps[i];
      if (A(p) == 2 && D(p) == 0) f20.push_back(s.c.facets()[i]);
      if (A(p) == 1 && D(p) == 0) f10.push_back(s.c.facets()[i]);
      if (A(p) == 2 && D(p) == 1) f21.push_back(s.c.facets()[i]);
    }
    std::set<Face> sub1;
    for (const auto& a : f20)
      for (const auto& b : f10)
        for (const auto& f : power_set(a & b & q22)) sub1.insert(f);
    std::set<Face> sub1_expected;
    for (auto list : std::vector<std::vector<std::string_view>>{
             {}, {"c_0_0"}, {"c_1_1"}, {"b_3_2"}, {"b_2_2"}, {"c_0_0", "b_3_2"}, {"c_0_0", "b_2_2"},
             {"c_1_1", "b_3_2"}, {"c_1_1", "b_2_2"}}) {
      Face f;
      for (auto l : list) f.set(s.edge(l));
      sub1_expected.insert(f);
    }
    r.add("proof.gamma-meet-22",
          "faces common to some [2*/*0], [1*/*0] and [22/22] are the nine listed sets", sub1 == sub1_expected,
          std::to_string(sub1.size()) + " faces");

    std::set<Face> sub2;
    std::size_t combos = 0;
    for (const auto& a : f20)
      for (const auto& b : f10)
        for (const auto& c : f21) {
          ++combos;
          for (const auto& f : power_set(a & b & c & q11)) sub2.insert(f);
        }
    const Face six = s.face({"b_0_2", "a_1_1", "c_0_0", "c_3_3", "a_3_2", "b_3_2"});
    r.add("proof.gamma-meet-11",
          "faces common to some [2*/*0], [1*/*0], [2*/*1] and [11/11] form the power set of "
          "{b_{0,2}, a_{1,1}, c_{0,0}, c_{3,3}, a_{3,2}, b_{3,2}}",
          sub2 == as_set(power_set(six)), std::to_string(combos) + " facet combinations");
  }

  // (v) the three families left after delta and the follow-up pairings.
  const auto seq_labels = sequence_2x2x2();
  const auto seq = resolve_sequence(s, seq_labels);
  {
    auto faces_with = [&](const std::vector<Face>& sigmas, Face extra) {
      std::vector<Face> out;
      for (const auto& f : sigmas) out.push_back(f | extra);
      return out;
    };
    auto listed = [&](std::vector<std::vector<std::string_view>> lists) {
      std::vector<Face> out;
      for (const auto& l : lists) {
        Face f;
        for (auto x : l) f.set(s.edge(x));
        out.push_back(f);
      }
      return out;
    };
    const Face bg = Face{}.with(beta).with(gamma), gd = Face{}.with(gamma).with(delta),
               bd = Face{}.with(beta).with(delta);
    auto t1 = faces_with(power_set(s.face({"c_0_0", "b_3_2", "c_1_0", "b_2_1"})), bg);
    auto t2 = faces_with(power_set(s.face({"b_0_2", "b_1_3", "c_3_3", "c_2_3"})), gd);
    for (auto f : faces_with(listed({{"b_1_2"}, {"c_2_2"}, {"b_1_2", "c_2_2"}, {"b_1_2", "c_3_3"}, {"b_0_2", "c_2_2"}}), gd))
      t2.push_back(f);
    auto t3 = faces_with(power_set(s.face({"b_0_2", "a_1_1", "c_0_0", "c_3_3", "a_3_2", "b_3_2"})), bd);
    auto t3_extra = listed({{"c_1_1"}, {"b_2_2"}, {"c_0_0", "b_2_2"}, {"c_1_1", "b_3_2"}, {"c_1_1", "b_2_2"}});
    for (auto f : faces_with(t3_extra, bd)) t3.push_back(f);

    std::set<Face> expected = as_set(t1);
    for (const auto& f : t2) expected.insert(f);
    for (const auto& f : t3) expected.insert(f);
    auto after_delta = unpaired_after(s.c, {alpha, beta, gamma, delta});
    r.add("proof.three-types",
          "after alpha, beta, gamma, delta the unpaired faces are exactly the three listed families (16 + 21 + 69)",
          as_set(after_delta) == expected && t1.size() == 16 && t2.size() == 21 && t3.size() == 69,
          std::to_string(after_delta.size()) + " faces");

    std::vector<int> prefix(seq.begin(), seq.begin() + 5);
    auto after_c10 = as_set(unpaired_after(s.c, prefix));
    std::set<Face> expected_c10 = expected;
    for (const auto& f : t1) expected_c10.erase(f);
    r.add("proof.pair-c10", "pairing on c_{1,0} pairs every face of the first family and nothing else",
          after_c10 == expected_c10, std::to_string(after_c10.size()) + " faces");

    prefix.push_back(seq[5]);
    auto after_b02 = as_set(unpaired_after(s.c, prefix));
    std::set<Face> expected_b02;
    for (auto f : faces_with(listed({{"b_1_2"}, {"b_1_2", "c_2_2"}, {"b_1_2", "c_3_3"}}), gd)) expected_b02.insert(f);
    for (auto f : faces_with(t3_extra, bd)) expected_b02.insert(f);
    r.add("proof.pair-b02", "pairing on b_{0,2} leaves the eight listed faces", after_b02 == expected_b02,
          face_list(s, {after_b02.begin(), after_b02.end()}));

    FaceState st(s.c);
    for (std::size_t i = 0; i < 6; ++i) element_pairing(st, seq[i]);
    auto p33 = element_pairing(st, s.edge("c_3_3"));
    auto p00 = element_pairing(st, s.edge("c_0_0"));
    auto p32 = element_pairing(st, s.edge("b_3_2"));
    auto single = [](const ElementPairing& ep, const Face& lo, const Face& hi) {
      return ep.pairs.size() == 1 && ep.pairs[0] == FacePair{lo, hi};
    };
    bool tail_ok = single(p33, s.face({"b_1_2"}) | gd, s.face({"b_1_2", "c_3_3"}) | gd) &&
                   single(p00, s.face({"b_2_2"}) | bd, s.face({"c_0_0", "b_2_2"}) | bd) &&
                   single(p32, s.face({"c_1_1"}) | bd, s.face({"c_1_1", "b_3_2"}) | bd);
    r.add("proof.final-pairings",
          "c_{3,3}, c_{0,0}, b_{3,2} each pair exactly one face: {b_{1,2}}, {b_{2,2}}, {c_{1,1}} with their extensions",
          tail_ok);
  }

  // (vi) critical cells of the whole sequence.
  MorsePairing p;
  {
    Stage st(r, "pairing");
    p = sequential_pairing(s.c, seq);
  }
  const Face cell1 = s.face({"b_1_2", "c_2_2", "delta", "gamma"});
  const Face cell2 = s.face({"c_1_1", "b_2_2", "beta", "delta"});
  r.add("morse.acyclic", "the nine element pairings form an acyclic pairing", p.acyclic);
  r.add("morse.critical", "exactly two critical cells: {b_{1,2}, c_{2,2}, delta, gamma} and {c_{1,1}, b_{2,2}, beta, delta}",
        as_set(p.critical) == std::set<Face>{cell1, cell2}, face_list(s, p.critical));
  auto summary = morse_summary(p);
  r.add("morse.summary", "one 0-cell and two 3-cells: S^3 v S^3", summary.homotopy_type == "S^3 v S^3",
        summary.homotopy_type);

  // Later pairings never mix faces with and without an earlier pairing vertex.
  {
    FaceState st(s.c);
    bool same_type = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto ep = element_pairing(st, seq[i]);
      for (std::size_t j = 0; j < i; ++j)
        for (const auto& [lo, hi] : ep.pairs) same_type = same_type && lo.test(seq[j]) == hi.test(seq[j]);
    }
    r.add("morse.same-type", "each later element pairing keeps membership of every earlier pairing vertex", same_type);
  }

  // The choice of c_{1,0} for the first family is not essential.
  {
    bool ok = true;
    std::string detail;
    for (const char* alt : {"c_0_0", "b_2_1", "b_3_2"}) {
      std::vector<std::string> labels = seq_labels;
      labels[4] = alt;
      std::vector<std::string> dedup;
      for (const auto& l : labels)
        if (std::find(dedup.begin(), dedup.end(), l) == dedup.end()) dedup.push_back(l);
      auto q = sequential_pairing(s.c, resolve_sequence(s, dedup));
      bool two = q.acyclic && q.critical.size() == 2 &&
                 std::all_of(q.critical.begin(), q.critical.end(), [](const Face& f) { return f.dim() == 3; });
      detail += std::string(alt) + ": " + std::to_string(q.critical.size()) + " critical; ";
      ok = ok && two;
    }
    r.add("morse.alternative-edge",
          "replacing c_{1,0} by c_{0,0}, b_{2,1} or b_{3,2} (dropping the later repeat) also leaves two critical 3-cells", ok,
          detail);
  }

  homology_claims(r, s.c, 3, 2, "M_p(H_{2x2x2})", &p);
  return r;
}

TheoremReport verify_baselines() {
  TheoremReport r;
  r.theorem = "baseline-cases";
  for (int n = 1; n <= 6; ++n) {
    auto c = perfect_matching_complex(path_graph(2 * n));
    bool ok = c.facets().size() == 1 && c.facets()[0].count() == n &&
              c.face_count() == (std::size_t{1} << n) && reduced_homology(c).is_trivial();
    r.add("baseline.path-" + std::to_string(2 * n),
          "M_p(P_" + std::to_string(2 * n) + ") is the full " + std::to_string(n - 1) + "-simplex", ok,
          std::to_string(c.face_count()) + " faces");
  }
  for (int n = 2; n <= 6; ++n) {
    auto c = perfect_matching_complex(cycle_graph(2 * n));
    auto h = reduced_homology(c);
    bool ok = c.facets().size() == 2 && (c.facets()[0] & c.facets()[1]).empty() && c.facets()[0].count() == n &&
              h.is_sphere(0);
    r.add("baseline.cycle-" + std::to_string(2 * n),
          "M_p(C_" + std::to_string(2 * n) + ") is two disjoint " + std::to_string(n - 1) + "-simplices, b~_0 = 1", ok,
          betti_string(h.betti_reduced));
  }
  {
    auto c = perfect_matching_complex(complete_bipartite_graph(2, 3));
    r.add("baseline.k23-void", "M_p(K_{2,3}) is the void complex", c.is_void() && reduced_homology(c).is_void);
    auto c5 = perfect_matching_complex(complete_graph(5));
    r.add("baseline.k5-void", "M_p(K_5) is the void complex (odd vertex count)", c5.is_void());
    auto p5 = perfect_matching_complex(path_graph(5));
    r.add("baseline.path5-void", "M_p(P_5) is the void complex", p5.is_void());
  }
  return r;
}

TheoremReport verify_lemmas(int max_dim) {
  if (max_dim < 2 || max_dim > 5) throw Error("out_of_range", "lemma suite supports 2 <= max_dim <= 5");
  TheoremReport r;
  r.theorem = "lemmas";
  r.k = 1;
  r.m = max_dim;
  r.n = max_dim;
  bool xy = true, meet = true, closed_form = true;
  std::string fails;
  for (int m = 2; m <= max_dim; ++m)
    for (int n = 2; n <= max_dim; ++n) {
      auto g = build_honeycomb(1, m, n);
      auto pps = enumerate_plane_partitions(1, m, n);
      const int x = g.resolve(NamedLabel{"x"}), y = g.resolve(NamedLabel{"y"});
      Matching zero, full;
      for (const auto& p : pps) {
        auto mt = pp_to_matching(g, p);
        bool is_zero = std::all_of(p.entries.begin(), p.entries.end(), [](int v) { return v == 0; });
        bool is_full = std::all_of(p.entries.begin(), p.entries.end(), [&](int v) { return v == n; });
        if (is_zero) zero = mt;
        if (is_full) full = mt;
        bool ok_xy = mt.test(static_cast<std::size_t>(x)) == !is_zero && mt.test(static_cast<std::size_t>(y)) == !is_full;
        bool ok_cf = mt == pp_to_matching_k1(g, p);
        if (!ok_xy || !ok_cf) fails += "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
        xy = xy && ok_xy;
        closed_form = closed_form && ok_cf;
      }
      auto sig = significant_edges(g);
      auto both = (zero & full).elements();
      meet = meet && both == sig;
    }
  std::string range = "all 2 <= m, n <= " + std::to_string(max_dim);
  r.add("lemma.xy", "x lies in every matching but (0,...,0) and y in every matching but (n,...,n), " + range, xy, fails);
  r.add("lemma.extreme-intersection", "(0,...,0) ^ (n,...,n) is the set of significant edges, " + range, meet);
  r.add("lemma.closed-form", "the closed-form a/b/d membership rules reproduce the tiling, " + range, closed_form, fails);
  return r;
}

}  // namespace pmtopo
