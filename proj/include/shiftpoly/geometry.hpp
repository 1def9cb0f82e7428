#pragma once

#include <vector>

#include "shiftpoly/caps.hpp"
#include "shiftpoly/rational.hpp"

namespace shiftpoly {

// {x : eq_A x = eq_b, in_A x <= in_b}.  An all-zero equality row with nonzero
// right-hand side is legal and denotes the empty set.
struct HPolytope {
  int dim = 0;
  QMatrix eq_A;
  QVector eq_b;
  QMatrix in_A;
  QVector in_b;
};

// Convex hull of its vertices.  Canonical: vertices are pairwise distinct,
// each one extreme, sorted lexicographically.  Use make_vpolytope to build
// one from arbitrary points.
struct VPolytope {
  int dim = 0;
  std::vector<QVector> vertices;
};

// x -> M x + t.
struct AffineMap {
  QMatrix M;
  QVector t;
};

QVector apply_affine(const AffineMap& T, const QVector& x);
AffineMap compose_affine(const AffineMap& A, const AffineMap& B);  // x -> A(B(x))

/// Canonicalizes: dedupes, drops non-extreme points, sorts.
VPolytope make_vpolytope(int dim, std::vector<QVector> points);

/// Exact vertex set of an H-polytope by double description.  Throws Unbounded
/// when a recession direction exists, CapExceeded("max_rays") on blowup.
VPolytope vertex_enumeration(const HPolytope& H, const Caps& caps = {});

/// Image polytope {M x + t : x in P}, canonicalized.
VPolytope affine_image(const VPolytope& P, const AffineMap& T);

/// Exact equality as convex bodies (canonical forms compared).
bool polytope_equal(const VPolytope& P, const VPolytope& Q);

/// The extreme points among the given points (duplicates collapse first).
VPolytope extreme_subset(int dim, const std::vector<QVector>& points);

/// Is x a convex combination of the given points?  Decided by exact LP.
bool in_hull(const std::vector<QVector>& points, const QVector& x);

bool contains(const VPolytope& P, const QVector& x);

/// Image of an H-polytope without enumerating its vertices: grows an inner
/// hull from support-LP optimizers until every inner facet is certified tight.
VPolytope affine_image_of_hpolytope(const HPolytope& P, const AffineMap& T,
                                    const Caps& caps = {});

namespace detail {

/// Facet/equality description of a V-polytope (used by round-trip tests and
/// the LP-oracle projection).  Empty input yields the canonical empty system
/// {0 = 1}.
HPolytope facet_description(const VPolytope& P);

/// Extreme rays of the pointed cone {z : eq z = 0, le z <= 0} as primitive
/// integer vectors.  Throws Error when the cone is not pointed.
std::vector<ZVector> extreme_rays(int D, std::vector<ZVector> eq, std::vector<ZVector> le,
                                  const Caps& caps);

}  // namespace detail

}  // namespace shiftpoly
