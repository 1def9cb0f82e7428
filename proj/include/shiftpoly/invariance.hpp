#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/patterns.hpp"

namespace shiftpoly {

// One linear equation mu(lhs cylinder) = mu(rhs cylinder): the cylinder of a
// on E against the cylinder of the shifted pattern on E - u.  lhs/rhs hold the
// raw member indices, deliberately unsimplified; numeric row reduction happens
// only inside the geometry engine.
struct InvarianceConstraint {
  Shape E;
  Pattern a;
  Cell u;
  std::vector<std::uint64_t> lhs;
  std::vector<std::uint64_t> rhs;
};

/// Unit-shift maximal-overlap family: for each coordinate direction e_i, all
/// patterns on the overlap cube ∩ (cube + e_i).  Empty when n = 0.
std::vector<InvarianceConstraint> generator_constraints(const PatternIndex& ix,
                                                        const Caps& caps = {});

/// Every admissible triple (E, a, u): nonempty E inside the cube, u != 0,
/// E - u still inside the cube.  Capped by caps.max_triples.
std::vector<InvarianceConstraint> full_constraints(const PatternIndex& ix,
                                                   const Caps& caps = {});

/// Dense coefficient row of a constraint (+1 on lhs members, -1 on rhs).
QVector constraint_row(const InvarianceConstraint& c, std::size_t dim);

/// The locally invariant polytope: probability simplex plus the generator
/// equations, as an H-polytope over the full-pattern coordinates.
HPolytope build_Iloc(const PatternIndex& ix, const Caps& caps = {});

/// Checks the full constraint family exactly; nullopt when invariant, else a
/// human-readable description of the first violated triple.
std::optional<std::string> first_violation(const MeasureVector& mu, const Caps& caps = {});

bool is_locally_invariant(const MeasureVector& mu, const Caps& caps = {});

// Exact comparison of the generator family against the full family.
// subset_identity_ok: every full-family equation is the literal sum of the
// maximal-overlap equations with the same shift (a partition of cylinders).
// spans_match: the maximal-overlap rows over all shifts lie in the row space
// of the unit-shift generators.  Both together give equal affine hulls.
struct EquivalenceReport {
  bool equal = false;
  bool spans_match = false;
  bool subset_identity_ok = false;
  std::size_t generator_rank = 0;
  std::size_t closure_rank = 0;
  std::uint64_t full_triples = 0;
};

EquivalenceReport generator_equivalence(const PatternIndex& ix, const Caps& caps = {});

}  // namespace shiftpoly
