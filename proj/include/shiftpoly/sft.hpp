#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/lp.hpp"
#include "shiftpoly/patterns.hpp"

namespace shiftpoly {

// Finite forbidden pattern list defining a shift of finite type.  Shapes are
// arbitrary finite subsets of Z^d; symbols are indices into the working
// alphabet.
struct ForbiddenSet {
  int d = 0;
  std::vector<Pattern> patterns;
};

/// True iff some translate of a lies inside b's shape and matches b there.
/// The empty pattern occurs in everything.
bool pattern_occurs(const Pattern& a, const Pattern& b);

// The face of the locally invariant polytope cut out by a forbidden set:
// every full window pattern containing a forbidden occurrence is pinned to
// mass 0.
struct FaceDescription {
  PatternIndex index;
  std::vector<std::uint64_t> zeroed;  // ascending
  HPolytope polytope;
};

/// Builds the face.  Every forbidden pattern must fit inside the window after
/// translation, and its symbols must lie in the window's alphabet.
FaceDescription face_of_forbidden(const ForbiddenSet& L, const PatternIndex& index,
                                  const Caps& caps = {});

/// Exact feasibility decision for the face, certificate verified before return.
FeasibilityCertificate face_feasible(const FaceDescription& face);

/// Vertex enumeration of the face (empty when infeasible).
VPolytope face_vertices(const FaceDescription& face, const Caps& caps = {});

/// Word-overlap graph with every edge whose window word contains a forbidden
/// occurrence removed (states are kept; edgeless states are harmless).
TransitionGraph pruned_debruijn(const ForbiddenSet& L, const Alphabet& alphabet, int n,
                                const Caps& caps = {});

/// Exact emptiness decision for a one-dimensional SFT: true iff the pruned
/// word-overlap graph at the smallest window covering L has no directed cycle.
bool sft_empty_1d(const ForbiddenSet& L, const Alphabet& alphabet, const Caps& caps = {});

/// Searches m x m torus configurations (coordinates wrap) avoiding every
/// forbidden translate.  On success returns the window marginal of the uniform
/// measure on the configuration's translation orbit, a locally invariant
/// measure by construction.  std::nullopt means "not found at size m", never a
/// proof of emptiness.
std::optional<MeasureVector> bounded_2d_periodic_search(const ForbiddenSet& L,
                                                        const PatternIndex& index, int m,
                                                        const Caps& caps = {});

}  // namespace shiftpoly
