#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pmtopo/complex.hpp"

namespace pmtopo {

struct Claim {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  int k = 0;
  int m = 0;
  int n = 0;
  std::string note;
  std::vector<Claim> claims;
  /// Seconds spent per stage; left out of JSON unless asked for, so that
  /// reports are byte-stable.
  std::vector<std::pair<std::string, double>> timings;

  bool passed() const;
  void add(std::string id, std::string statement, bool passed, std::string detail = {});
};

nlohmann::json to_json(const TheoremReport& r, bool with_timings = false);

/// Line of n hexagons (1 <= n <= 6); n = 1 is reported as the 6-cycle
/// baseline (S^0) rather than as an instance of the contractibility result.
TheoremReport verify_line(int n);

/// M_p(H_{1x2xn}) ~ S^{n-1}, 2 <= n <= 5.
TheoremReport verify_1x2xn(int n);

/// M_p(H_{1xmxn}) contractible for m, n >= 3. Refuses m = 2 or n = 2.
TheoremReport verify_1xmxn(int m, int n, std::size_t face_cap = kDefaultFaceCap);

/// M_p(H_{2x2x2}) ~ S^3 v S^3, with every intermediate set of the argument.
TheoremReport verify_2x2x2();

/// Paths, cycles and graphs without perfect matchings.
TheoremReport verify_baselines();

/// Membership of x and y, the extreme-facet intersection, and agreement of
/// the closed-form k = 1 rules with the tiling, for 2 <= m, n <= max_dim.
TheoremReport verify_lemmas(int max_dim = 4);

/// The nine-step sequence used for H_{2x2x2}.
std::vector<std::string> sequence_2x2x2();

}  // namespace pmtopo
