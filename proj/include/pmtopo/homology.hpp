#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "pmtopo/complex.hpp"

namespace pmtopo {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column is sorted by row.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a);
  std::vector<std::vector<std::int64_t>> to_dense() const;
  std::size_t nonzeros() const;
};

/// Boundary from faces with r elements to faces with r - 1 elements, in the
/// order of SimplicialComplex::level. Removing the element at position i of
/// the sorted face contributes (-1)^i. For r = 1 this is the augmentation.
SparseMatrix boundary_matrix(const SimplicialComplex& c, int cardinality);

struct ChainComplexData {
  /// faces[r] are the faces with r elements (dimension r - 1).
  std::vector<std::vector<Face>> faces;
  /// boundary[r] maps faces[r] to faces[r-1]; boundary[0] is 0 x 0.
  std::vector<SparseMatrix> boundary;
};

ChainComplexData boundary_matrices(const SimplicialComplex& c);

/// True iff every composite of consecutive boundary maps vanishes.
bool boundary_squared_zero(const SimplicialComplex& c);

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
  std::vector<BigInt> invariants;
  std::size_t rank = 0;
};

/// Unit pivots are eliminated sparsely (fewest-entry column first, then the
/// lightest row); whatever is left is reduced densely with smallest-pivot
/// selection over unbounded integers.
SmithForm smith_normal_form(const SparseMatrix& a);

/// Rank over GF(p) by lowest-row column reduction.
std::size_t rank_mod_p(const SparseMatrix& a, std::uint32_t p = 2147483647u);

struct HomologyProfile {
  bool is_void = false;
  /// Reduced Betti numbers by dimension, from -1 up to the top dimension.
  std::map<int, std::int64_t> betti_reduced;
  /// Invariant factors > 1 by dimension; only dimensions with torsion.
  std::map<int, std::vector<BigInt>> torsion;

  std::int64_t betti(int d) const;
  bool is_trivial() const;
  /// b~_d = 1 in one dimension, zero elsewhere, no torsion.
  bool is_sphere(int d) const;
  std::int64_t euler_characteristic() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);

/// Betti numbers over GF(p) from rank_mod_p, with the same indexing.
std::map<int, std::int64_t> reduced_betti_mod_p(const SimplicialComplex& c, std::uint32_t p = 2147483647u);

nlohmann::json to_json(const HomologyProfile& h);

/// One "row col value" line per nonzero entry.
void write_triplets(std::ostream& os, const SparseMatrix& a);

}  // namespace pmtopo
