#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "pmtopo/bits.hpp"
#include "pmtopo/graph.hpp"
#include "pmtopo/hexgraph.hpp"

namespace pmtopo {

inline constexpr std::size_t kDefaultFaceCap = 10'000'000;

/// Face cap from PMTOPO_FACE_CAP when set, otherwise the default.
std::size_t face_cap_from_env();

/// Finite simplicial complex on the ground set {0, ..., ground-1}, stored as
/// its facets plus every face, grouped by cardinality and sorted. The empty
/// face is a member of every non-void complex; the void complex has none.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int ground);

  /// Union of the power sets of the facets. Non-maximal and repeated
  /// generators are dropped; the survivors keep their input order.
  static SimplicialComplex from_facets(int ground, std::vector<Face> facets,
                                       std::size_t cap = kDefaultFaceCap);

  bool is_void() const { return void_; }
  int ground() const { return ground_; }
  const std::vector<Face>& facets() const { return facets_; }
  int dimension() const { return static_cast<int>(levels_.size()) - 2; }

  /// Faces with the given number of elements, sorted.
  const std::vector<Face>& level(int cardinality) const;
  int level_count() const { return static_cast<int>(levels_.size()); }
  std::size_t face_count() const;

  /// Position of f inside level(f.count()), if f is a face.
  std::optional<std::size_t> index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }

  /// f_{-1}, f_0, f_1, ...
  std::vector<std::int64_t> f_vector() const;

 private:
  int ground_ = 0;
  bool void_ = true;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> levels_;
};

/// Membership through the facets, independent of the stored face list.
bool is_face(const SimplicialComplex& c, const Face& s);

Face facet_intersection(const SimplicialComplex& c, std::size_t i, std::size_t j);

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);
std::int64_t euler_characteristic(const SimplicialComplex& c);

/// Perfect matching complex of g. Void when g has no perfect matching.
SimplicialComplex perfect_matching_complex(const Graph& g, std::size_t cap = kDefaultFaceCap);
/// Facets in plane-partition order.
SimplicialComplex perfect_matching_complex(const HexGraph& g, std::size_t cap = kDefaultFaceCap);

inline constexpr int kMaxNerveSets = 20;

struct NerveComplex {
  /// Vertex i stands for sets[i].
  std::vector<Face> sets;
  SimplicialComplex complex;
};

/// Nerve of at most kMaxNerveSets sets.
NerveComplex nerve(const std::vector<Face>& sets);

nlohmann::json to_json(const SimplicialComplex& c, bool facets_only = false);

}  // namespace pmtopo
