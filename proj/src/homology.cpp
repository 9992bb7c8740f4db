#include "pmtopo/homology.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "pmtopo/error.hpp"

namespace pmtopo {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& a) {
  SparseMatrix m;
  m.rows = static_cast<int>(a.size());
  m.cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  m.columns.resize(static_cast<std::size_t>(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    if (a[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(m.cols))
      throw Error("invalid_matrix", "ragged matrix");
    for (int c = 0; c < m.cols; ++c)
      if (auto v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; v != 0)
        m.columns[static_cast<std::size_t>(c)].emplace_back(r, v);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(rows),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : columns[static_cast<std::size_t>(c)]) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  return a;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t t = 0;
  for (const auto& c : columns) t += c.size();
  return t;
}

SparseMatrix boundary_matrix(const SimplicialComplex& c, int cardinality) {
  if (c.is_void()) throw Error("void_complex", "the void complex has no chain complex");
  SparseMatrix m;
  const auto& upper = c.level(cardinality);
  m.rows = static_cast<int>(c.level(cardinality - 1).size());
  m.cols = static_cast<int>(upper.size());
  m.columns.resize(upper.size());
  if (cardinality <= 0) return m;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    auto& col = m.columns[j];
    int pos = 0;
    upper[j].for_each([&](int e) {
      auto row = c.index_of(upper[j].without(e));
      if (!row) throw Error("internal", "complex is not closed under taking faces");
      col.emplace_back(static_cast<int>(*row), pos % 2 == 0 ? 1 : -1);
      ++pos;
    });
    std::sort(col.begin(), col.end());
  }
  return m;
}

ChainComplexData boundary_matrices(const SimplicialComplex& c) {
  if (c.is_void()) throw Error("void_complex", "the void complex has no chain complex");
  ChainComplexData d;
  for (int r = 0; r < c.level_count(); ++r) {
    d.faces.push_back(c.level(r));
    d.boundary.push_back(boundary_matrix(c, r));
  }
  return d;
}

bool boundary_squared_zero(const SimplicialComplex& c) {
  if (c.is_void()) return true;
  SparseMatrix upper = boundary_matrix(c, c.level_count() - 1);
  for (int r = c.level_count() - 1; r >= 2; --r) {
    SparseMatrix lower = boundary_matrix(c, r - 1);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(lower.rows), 0);
    std::vector<int> touched;
    for (const auto& col : upper.columns) {
      for (auto [k, v] : col)
        for (auto [i, w] : lower.columns[static_cast<std::size_t>(k)]) {
          if (acc[static_cast<std::size_t>(i)] == 0) touched.push_back(i);
          acc[static_cast<std::size_t>(i)] += v * w;
        }
      bool zero = true;
      for (int i : touched) {
        if (acc[static_cast<std::size_t>(i)] != 0) zero = false;
        acc[static_cast<std::size_t>(i)] = 0;
      }
      touched.clear();
      if (!zero) return false;
    }
    upper = std::move(lower);
  }
  return true;
}

namespace {

struct Overflow {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

using Dense = std::vector<std::vector<BigInt>>;

// Nearest-integer quotient, so that |a - q b| <= |b| / 2.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

// Dense Smith form; returns the nonzero invariant factors in divisibility order.
// Every round pivots on the smallest entry of the whole trailing block.
std::vector<BigInt> dense_smith(Dense a) {
  std::vector<BigInt> out;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      std::swap(a[t], a[pi]);
      if (pj != t)
        for (auto& row : a) std::swap(row[t], row[pj]);
      const BigInt p = a[t][t];

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = round_div(a[i][t], p);
        for (std::size_t j = t; j < cols; ++j)
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = round_div(a[t][j], p);
        for (std::size_t i = t; i < rows; ++i)
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

template <class T>
struct UnitEliminator {
  using Column = std::vector<std::pair<int, T>>;
  std::vector<Column> cols;
  std::vector<std::size_t> row_count;
  std::vector<std::vector<int>> row_cols;
  std::vector<char> alive;
  std::size_t units = 0;

  explicit UnitEliminator(const SparseMatrix& a)
      : cols(a.columns.size()), row_count(static_cast<std::size_t>(a.rows), 0),
        row_cols(static_cast<std::size_t>(a.rows)), alive(a.columns.size(), 1) {
    for (std::size_t j = 0; j < a.columns.size(); ++j)
      for (auto [r, v] : a.columns[j]) {
        cols[j].emplace_back(r, T(v));
        ++row_count[static_cast<std::size_t>(r)];
        row_cols[static_cast<std::size_t>(r)].push_back(static_cast<int>(j));
      }
  }

  static const T* find(const Column& c, int r) {
    auto it = std::lower_bound(c.begin(), c.end(), r, [](const auto& e, int v) { return e.first < v; });
    return it != c.end() && it->first == r ? &it->second : nullptr;
  }

  // target -= f * pivot, keeping the row bookkeeping in step.
  void axpy(int target, const T& f, const Column& pivot) {
    Column& t = cols[static_cast<std::size_t>(target)];
    Column merged;
    merged.reserve(t.size() + pivot.size());
    std::size_t i = 0, k = 0;
    while (i < t.size() || k < pivot.size()) {
      if (k == pivot.size() || (i < t.size() && t[i].first < pivot[k].first)) {
        merged.push_back(std::move(t[i++]));
      } else if (i == t.size() || pivot[k].first < t[i].first) {
        int r = pivot[k].first;
        merged.emplace_back(r, sub_mul(T(0), f, pivot[k].second));
        ++row_count[static_cast<std::size_t>(r)];
        row_cols[static_cast<std::size_t>(r)].push_back(target);
        ++k;
      } else {
        T v = sub_mul(t[i].second, f, pivot[k].second);
        if (v != 0) merged.emplace_back(t[i].first, std::move(v));
        else --row_count[static_cast<std::size_t>(t[i].first)];
        ++i;
        ++k;
      }
    }
    t = std::move(merged);
  }

  void run() {
    using Entry = std::pair<std::size_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!cols[j].empty()) pq.emplace(cols[j].size(), static_cast<int>(j));

    std::vector<int> targets;
    while (!pq.empty()) {
      auto [size, j] = pq.top();
      pq.pop();
      auto& col = cols[static_cast<std::size_t>(j)];
      if (!alive[static_cast<std::size_t>(j)] || col.size() != size) continue;

      int pr = -1;
      T pv{};
      for (const auto& [r, v] : col)
        if (is_unit(v) && (pr < 0 || row_count[static_cast<std::size_t>(r)] < row_count[static_cast<std::size_t>(pr)])) {
          pr = r;
          pv = v;
        }
      if (pr < 0) continue;  // revisited only if a later pivot changes it

      targets.clear();
      for (int j2 : row_cols[static_cast<std::size_t>(pr)])
        if (j2 != j && alive[static_cast<std::size_t>(j2)]) targets.push_back(j2);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      const Column pivot = col;
      for (int j2 : targets) {
        const T* a = find(cols[static_cast<std::size_t>(j2)], pr);
        if (!a) continue;
        T f = *a * pv;  // pv is +-1, so a / pv == a * pv
        axpy(j2, f, pivot);
        const auto& c2 = cols[static_cast<std::size_t>(j2)];
        if (c2.empty()) alive[static_cast<std::size_t>(j2)] = 0;
        else pq.emplace(c2.size(), j2);
      }
      for (const auto& e : pivot) --row_count[static_cast<std::size_t>(e.first)];
      row_cols[static_cast<std::size_t>(pr)].clear();
      col.clear();
      alive[static_cast<std::size_t>(j)] = 0;
      ++units;
    }
  }

  Dense residual() const {
    std::vector<int> rows;
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (alive[j] && !cols[j].empty()) {
        live.push_back(j);
        for (const auto& e : cols[j]) rows.push_back(e.first);
      }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    Dense d(rows.size(), std::vector<BigInt>(live.size(), 0));
    for (std::size_t c = 0; c < live.size(); ++c)
      for (const auto& [r, v] : cols[live[c]]) {
        auto ri = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
        d[ri][c] = BigInt(v);
      }
    return d;
  }
};

template <class T>
SmithForm smith_with(const SparseMatrix& a) {
  UnitEliminator<T> el(a);
  el.run();
  SmithForm s;
  s.invariants.assign(el.units, BigInt(1));
  for (auto& v : dense_smith(el.residual())) s.invariants.push_back(std::move(v));
  s.rank = s.invariants.size();
  return s;
}

// Lowest-row column reduction over GF(p). Columns flagged in `skip` are known
// to reduce to zero and are not touched; rows that end up as pivots are
// flagged in `pivot_rows` when given.
std::size_t reduce_mod_p(const SparseMatrix& a, std::uint32_t p, const std::vector<char>* skip,
                         std::vector<char>* pivot_rows) {
  using Column = std::vector<std::pair<int, std::uint64_t>>;
  const std::uint64_t P = p;
  auto norm = [&](std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(P) : r);
  };
  auto inverse = [&](std::uint64_t v) {
    std::uint64_t result = 1, base = v, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return result;
  };
  std::vector<Column> reduced(a.columns.size());
  std::vector<int> owner(static_cast<std::size_t>(a.rows), -1);
  std::size_t rank = 0;
  Column scratch;
  for (std::size_t j = 0; j < a.columns.size(); ++j) {
    if (skip && (*skip)[j]) continue;
    Column col;
    for (auto [r, v] : a.columns[j])
      if (auto m = norm(v)) col.emplace_back(r, m);
    while (!col.empty()) {
      auto [low, lv] = col.back();
      int k = owner[static_cast<std::size_t>(low)];
      if (k < 0) break;
      const Column& other = reduced[static_cast<std::size_t>(k)];
      std::uint64_t f = lv * inverse(other.back().second) % P;
      scratch.clear();
      std::size_t i = 0, t = 0;
      while (i < col.size() || t < other.size()) {
        if (t == other.size() || (i < col.size() && col[i].first < other[t].first)) {
          scratch.push_back(col[i++]);
        } else if (i == col.size() || other[t].first < col[i].first) {
          scratch.emplace_back(other[t].first, (P - f * other[t].second % P) % P);
          ++t;
        } else {
          std::uint64_t v = (col[i].second + P - f * other[t].second % P) % P;
          if (v) scratch.emplace_back(col[i].first, v);
          ++i;
          ++t;
        }
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[static_cast<std::size_t>(col.back().first)] = static_cast<int>(j);
      if (pivot_rows) (*pivot_rows)[static_cast<std::size_t>(col.back().first)] = 1;
      reduced[j] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& a) {
  try {
    return smith_with<std::int64_t>(a);
  } catch (const Overflow&) {
    return smith_with<BigInt>(a);
  }
}

std::size_t rank_mod_p(const SparseMatrix& a, std::uint32_t p) { return reduce_mod_p(a, p, nullptr, nullptr); }

std::int64_t HomologyProfile::betti(int d) const {
  auto it = betti_reduced.find(d);
  return it == betti_reduced.end() ? 0 : it->second;
}

bool HomologyProfile::is_trivial() const {
  if (is_void) return false;
  for (const auto& [d, b] : betti_reduced)
    if (b != 0) return false;
  return torsion.empty();
}

bool HomologyProfile::is_sphere(int d) const {
  if (is_void || !torsion.empty()) return false;
  for (const auto& [e, b] : betti_reduced)
    if (b != (e == d ? 1 : 0)) return false;
  return betti(d) == 1;
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [d, b] : betti_reduced) chi += (d % 2 == 0 ? 1 : -1) * b;
  return chi;
}

namespace {

std::map<int, std::int64_t> betti_from_ranks(const SimplicialComplex& c, const std::vector<std::size_t>& rank) {
  // rank[r] is the rank of the boundary out of faces with r elements.
  std::map<int, std::int64_t> out;
  const int levels = c.level_count();
  for (int r = 0; r < levels; ++r) {
    auto in = r + 1 < levels ? rank[static_cast<std::size_t>(r + 1)] : 0;
    out[r - 1] = static_cast<std::int64_t>(c.level(r).size()) - static_cast<std::int64_t>(rank[static_cast<std::size_t>(r)]) -
                 static_cast<std::int64_t>(in);
  }
  return out;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  HomologyProfile h;
  if (c.is_void()) {
    h.is_void = true;
    return h;
  }
  const int levels = c.level_count();
  std::vector<std::size_t> rank(static_cast<std::size_t>(levels), 0);
  for (int r = 1; r < levels; ++r) {
    auto snf = smith_normal_form(boundary_matrix(c, r));
    rank[static_cast<std::size_t>(r)] = snf.rank;
    std::vector<BigInt> tors;
    for (auto& v : snf.invariants)
      if (v > 1) tors.push_back(v);
    if (!tors.empty()) h.torsion[r - 2] = std::move(tors);
  }
  h.betti_reduced = betti_from_ranks(c, rank);
  return h;
}

std::map<int, std::int64_t> reduced_betti_mod_p(const SimplicialComplex& c, std::uint32_t p) {
  if (c.is_void()) throw Error("void_complex", "the void complex has no chain complex");
  const int levels = c.level_count();
  std::vector<std::size_t> rank(static_cast<std::size_t>(levels), 0);
  // Top-down, so that pivot rows of one map clear columns of the next.
  std::vector<char> skip;
  for (int r = levels - 1; r >= 1; --r) {
    auto m = boundary_matrix(c, r);
    std::vector<char> pivots(static_cast<std::size_t>(m.rows), 0);
    if (skip.size() != m.columns.size()) skip.assign(m.columns.size(), 0);
    rank[static_cast<std::size_t>(r)] = reduce_mod_p(m, p, &skip, &pivots);
    skip = std::move(pivots);
  }
  return betti_from_ranks(c, rank);
}

nlohmann::json to_json(const HomologyProfile& h) {
  nlohmann::json j;
  if (h.is_void) {
    j["void"] = true;
    return j;
  }
  nlohmann::json betti = nlohmann::json::object();
  for (const auto& [d, b] : h.betti_reduced)
    if (d >= 0 || b != 0) betti[std::to_string(d)] = b;
  nlohmann::json tors = nlohmann::json::object();
  for (const auto& [d, list] : h.torsion) {
    auto arr = nlohmann::json::array();
    for (const auto& v : list) arr.push_back(v.str());
    tors[std::to_string(d)] = std::move(arr);
  }
  j["betti_reduced"] = std::move(betti);
  j["torsion"] = std::move(tors);
  return j;
}

void write_triplets(std::ostream& os, const SparseMatrix& a) {
  for (int c = 0; c < a.cols; ++c)
    for (auto [r, v] : a.columns[static_cast<std::size_t>(c)]) os << r << ' ' << c << ' ' << v << '\n';
}

}  // namespace pmtopo
