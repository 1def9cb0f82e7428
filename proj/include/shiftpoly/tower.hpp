#pragma once

#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/patterns.hpp"

namespace shiftpoly {

// Restriction of window-k measures to window n: 0/1 matrix whose (a, b) entry
// is 1 iff the big pattern b restricts to the small pattern a.  Every column
// holds exactly one 1, so probability vectors map to probability vectors.
struct MarginalMap {
  int k = 0, n = 0;
  PatternIndex big, small;
  AffineMap map;
};

/// k >= n >= 0; k == n gives the identity.
MarginalMap marginal_map(int k, int n, int d, const Alphabet& alphabet, const Caps& caps = {});

/// The projected polytope: image of the window-k locally invariant polytope
/// under restriction, canonical V-form.  Small instances go through vertex
/// images; large ones through the support-oracle image of the H-form.
VPolytope project_Iloc(int k, int n, int d, const Alphabet& alphabet, const Caps& caps = {});

struct RefinementRow {
  int k = 0;
  std::size_t vertices = 0;
  bool equal_to_previous = false;
};

/// Projected polytopes for k = n+1 .. k_max, each compared with its
/// predecessor (the k = n entry being the window-n polytope itself).
std::vector<RefinementRow> refinement_report(int n, int k_max, int d, const Alphabet& alphabet,
                                             const Caps& caps = {});

}  // namespace shiftpoly
