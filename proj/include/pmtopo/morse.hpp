#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pmtopo/bits.hpp"
#include "pmtopo/complex.hpp"

namespace pmtopo {

/// Faces of a complex that are still unpaired, as per-level flags aligned
/// with SimplicialComplex::level.
class FaceState {
 public:
  explicit FaceState(const SimplicialComplex& c);

  bool alive(const Face& f) const;
  void remove(const Face& f);
  std::size_t alive_count() const { return alive_count_; }
  const SimplicialComplex& complex() const { return *c_; }

  template <class F>
  void for_each_alive(int cardinality, F&& fn) const {
    const auto& lvl = c_->level(cardinality);
    const auto& flags = alive_[static_cast<std::size_t>(cardinality)];
    for (std::size_t i = 0; i < lvl.size(); ++i)
      if (flags[i]) fn(lvl[i]);
  }

 private:
  const SimplicialComplex* c_;
  std::vector<std::vector<char>> alive_;
  std::size_t alive_count_ = 0;
};

using FacePair = std::pair<Face, Face>;

struct ElementPairing {
  std::vector<FacePair> pairs;
  /// N(x): every face that took part in a pair.
  std::vector<Face> removed;
};

/// Pairs sigma with sigma + {x} whenever both are still alive, then removes
/// them from the state.
ElementPairing element_pairing(FaceState& state, int x);

struct MorsePairing {
  std::vector<int> sequence;
  std::vector<FacePair> pairs;
  /// Unpaired faces, sorted by cardinality then face order.
  std::vector<Face> critical;
  bool acyclic = false;
};

/// Union of the element pairings along xs on the shrinking face set.
/// Errors on a repeated or out-of-range vertex.
MorsePairing sequential_pairing(const SimplicialComplex& c, const std::vector<int>& xs);

/// True iff the pairing has no closed V-path. Throws on a malformed pairing
/// (a pair that is not a codimension-one face incidence, a face used twice,
/// or a non-face).
bool verify_acyclic(const SimplicialComplex& c, const std::vector<FacePair>& pairs);

struct MorseSummary {
  /// Critical faces per simplicial dimension 0, 1, ...
  std::vector<int> critical_by_dim;
  bool empty_face_paired = false;
  /// Cells of the homotopy-equivalent CW complex: critical counts, plus one
  /// 0-cell when the empty face is paired.
  std::vector<int> cells;
  std::string homotopy_type;
};

MorseSummary morse_summary(const MorsePairing& p);

using EdgeLabeller = std::function<std::string(int)>;

nlohmann::json to_json(const MorsePairing& p, const EdgeLabeller& label);

}  // namespace pmtopo
