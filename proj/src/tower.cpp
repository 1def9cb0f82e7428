/*
 * Restriction maps between window sizes and the descending projections of the
 * locally invariant polytopes.  The vertex-image route needs the full vertex
 * set of the big polytope, which explodes quickly; beyond 64 coordinates the
 * projection switches to the support-oracle image, which only ever asks the
 * big polytope linear programs.
 */
#include "shiftpoly/tower.hpp"

#include "shiftpoly/errors.hpp"
#include "shiftpoly/invariance.hpp"

namespace shiftpoly {

namespace {

// Vertex-image projection is used up to this many big-window coordinates.
constexpr std::uint64_t kVertexImageLimit = 64;

}  // namespace

MarginalMap marginal_map(int k, int n, int d, const Alphabet& alphabet, const Caps& caps) {
  if (n < 0 || k < n) throw InvalidInput("marginal_map: need k >= n >= 0");
  MarginalMap M;
  M.k = k;
  M.n = n;
  M.big = PatternIndex::make(d, k, alphabet, caps);
  M.small = PatternIndex::make(d, n, alphabet, caps);
  const std::uint64_t rows = M.small.count(), cols = M.big.count();
  M.map.M.assign(rows, QVector(cols, Rational(0)));
  M.map.t.assign(rows, Rational(0));
  for (std::uint64_t b = 0; b < cols; ++b) {
    Pattern big = M.big.pattern_at(b);
    std::uint64_t a = M.small.index_of(restrict_pattern(big, M.small.lambda));
    M.map.M[a][b] = 1;
  }
  return M;
}

VPolytope project_Iloc(int k, int n, int d, const Alphabet& alphabet, const Caps& caps) {
  if (n < 0 || k < n) throw InvalidInput("project_Iloc: need k >= n >= 0");
  if (k == n) {
    PatternIndex ix = PatternIndex::make(d, n, alphabet, caps);
    return vertex_enumeration(build_Iloc(ix, caps), caps);
  }
  MarginalMap M = marginal_map(k, n, d, alphabet, caps);
  HPolytope big = build_Iloc(M.big, caps);
  if (M.big.count() <= kVertexImageLimit)
    return affine_image(vertex_enumeration(big, caps), M.map);
  return affine_image_of_hpolytope(big, M.map, caps);
}

std::vector<RefinementRow> refinement_report(int n, int k_max, int d, const Alphabet& alphabet,
                                             const Caps& caps) {
  if (k_max < n) throw InvalidInput("refinement_report: need k_max >= n");
  std::vector<RefinementRow> report;
  VPolytope prev = project_Iloc(n, n, d, alphabet, caps);
  for (int k = n + 1; k <= k_max; ++k) {
    VPolytope cur = project_Iloc(k, n, d, alphabet, caps);
    report.push_back({k, cur.vertices.size(), polytope_equal(cur, prev)});
    prev = std::move(cur);
  }
  return report;
}

}  // namespace shiftpoly
