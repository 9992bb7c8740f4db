#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmtopo/bits.hpp"
#include "pmtopo/graph.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<std::int64_t>>;

inline std::int64_t binomial(int n, int k) {
  std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return k < 0 || k > n ? 0 : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Every subset of every facet.
inline std::set<pmtopo::Face> all_faces(const std::vector<pmtopo::Face>& facets) {
  std::set<pmtopo::Face> out;
  for (const auto& f : facets) {
    auto el = f.elements();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << el.size()); ++mask) {
      pmtopo::Face s;
      for (std::size_t i = 0; i < el.size(); ++i)
        if (mask >> i & 1u) s.set(el[i]);
      out.insert(s);
    }
  }
  return out;
}

/// Perfect matchings by trying every edge subset of size |V|/2.
inline std::set<std::vector<int>> brute_matchings(const pmtopo::Graph& g) {
  std::set<std::vector<int>> out;
  const int ne = g.edge_count(), nv = g.vertex_count();
  if (nv % 2) return out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == nv / 2) {
      std::vector<int> seen(static_cast<std::size_t>(nv), 0);
      for (int e : pick) {
        if (seen[static_cast<std::size_t>(g.edge(e).u)]++ || seen[static_cast<std::size_t>(g.edge(e).v)]++) return;
      }
      out.insert(pick);
      return;
    }
    for (int e = from; e < ne; ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::size_t rational_rank(const Dense& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<cpp_rational>> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto v : a[i]) m[i].push_back(cpp_rational(v));
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline cpp_int determinant(std::vector<std::vector<cpp_int>> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  cpp_int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? cpp_int(1) : sign * m[n - 1][n - 1];
}

inline cpp_int gcd(cpp_int a, cpp_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    cpp_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Invariant factors as ratios of determinantal divisors (gcd of k x k minors).
inline std::vector<cpp_int> determinantal_invariants(const std::vector<std::vector<cpp_int>>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<cpp_int> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    cpp_int g = 0;
    std::vector<int> rsel(rows, 0), csel(cols, 0);
    std::fill(rsel.end() - static_cast<std::ptrdiff_t>(k), rsel.end(), 1);
    do {
      std::fill(csel.begin(), csel.end(), 0);
      std::fill(csel.end() - static_cast<std::ptrdiff_t>(k), csel.end(), 1);
      do {
        std::vector<std::vector<cpp_int>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          sub.emplace_back();
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) sub.back().push_back(a[r][c]);
        }
        g = gcd(g, determinant(sub));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<cpp_int> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

/// Reduced Betti numbers over Q from a face list, built without the library's
/// boundary code: faces are sorted element lists, sign (-1)^position.
inline std::map<int, std::int64_t> rational_betti(const std::set<pmtopo::Face>& faces) {
  std::map<int, std::vector<pmtopo::Face>> by_card;
  for (const auto& f : faces) by_card[f.count()].push_back(f);
  const int top = by_card.empty() ? -1 : by_card.rbegin()->first;
  std::map<int, std::size_t> rank;  // rank of boundary from cardinality r
  for (int r = 1; r <= top; ++r) {
    const auto& hi = by_card[r];
    const auto& lo = by_card[r - 1];
    std::map<pmtopo::Face, std::size_t> idx;
    for (std::size_t i = 0; i < lo.size(); ++i) idx[lo[i]] = i;
    Dense m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      auto el = hi[j].elements();
      for (std::size_t p = 0; p < el.size(); ++p) m[idx.at(hi[j].without(el[p]))][j] = p % 2 ? -1 : 1;
    }
    rank[r] = rational_rank(m);
  }
  std::map<int, std::int64_t> betti;
  for (int r = 0; r <= top; ++r) {
    auto n = static_cast<std::int64_t>(by_card[r].size());
    betti[r - 1] = n - static_cast<std::int64_t>(rank[r]) - static_cast<std::int64_t>(rank[r + 1]);
  }
  return betti;
}

inline std::vector<pmtopo::Face> random_facets(std::mt19937& rng, int ground, int count, int max_size) {
  std::uniform_int_distribution<int> elem(0, ground - 1), size(1, max_size);
  std::vector<pmtopo::Face> out;
  for (int i = 0; i < count; ++i) {
    pmtopo::Face f;
    int s = size(rng);
    while (f.count() < s) f.set(elem(rng));
    out.push_back(f);
  }
  return out;
}

}  // namespace oracle
