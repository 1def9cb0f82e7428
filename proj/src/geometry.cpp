/*
 * Exact polytope engine.
 *
 * Vertex enumeration follows the double description method (Motzkin et al.,
 * in the incremental form described by Fukuda & Prodon): homogenize to a
 * pointed cone, start from a simplicial subcone picked greedily in a fixed
 * row order, then insert the remaining constraints one at a time, combining
 * adjacent (+,-) ray pairs.  Adjacency is decided combinatorially from
 * tight-row bitmasks.  All arithmetic is exact; rays are primitive integer
 * vectors, so results are canonical and runs are reproducible bit for bit.
 */
#include "shiftpoly/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "shiftpoly/errors.hpp"
#include "shiftpoly/linalg.hpp"
#include "shiftpoly/lp.hpp"
#include "shiftpoly/parallel.hpp"

namespace shiftpoly {

namespace {

using Mask = std::vector<std::uint64_t>;

void set_bit(Mask& m, std::size_t k) { m[k >> 6] |= (std::uint64_t{1} << (k & 63)); }

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::size_t popcount(const Mask& m) {
  std::size_t c = 0;
  for (auto w : m) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

struct Ray {
  ZVector z;
  Mask tight;
};

QVector to_rational(const ZVector& z) {
  QVector q(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) q[i] = Rational(z[i]);
  return q;
}

void canonical_sign(ZVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

bool zvec_less(const ZVector& a, const ZVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

void validate_hpolytope(const HPolytope& H) {
  if (H.dim < 1) throw InvalidInput("HPolytope: dimension must be >= 1");
  if (H.eq_A.size() != H.eq_b.size() || H.in_A.size() != H.in_b.size())
    throw InvalidInput("HPolytope: row/rhs count mismatch");
  for (const auto& r : H.eq_A)
    if (r.size() != static_cast<std::size_t>(H.dim))
      throw InvalidInput("HPolytope: equality row width mismatch");
  for (const auto& r : H.in_A)
    if (r.size() != static_cast<std::size_t>(H.dim))
      throw InvalidInput("HPolytope: inequality row width mismatch");
}

}  // namespace

namespace detail {

std::vector<ZVector> extreme_rays(int D, std::vector<ZVector> eq, std::vector<ZVector> le,
                                  const Caps& caps) {
  if (D < 1) throw InvalidInput("extreme_rays: dimension must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(D);
  auto tidy = [&](std::vector<ZVector>& rows, bool sign) {
    for (auto& r : rows) {
      if (r.size() != dim) throw InvalidInput("extreme_rays: row width mismatch");
      primitive_reduce(r);
      if (sign) canonical_sign(r);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const ZVector& r) {
                                for (const auto& x : r)
                                  if (x != 0) return false;
                                return true;
                              }),
               rows.end());
    std::sort(rows.begin(), rows.end(), zvec_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  };
  tidy(eq, true);
  tidy(le, false);

  // Global row table: equalities first, then inequalities.
  std::vector<ZVector> rows = eq;
  rows.insert(rows.end(), le.begin(), le.end());
  const std::size_t n_eq = eq.size();
  const std::size_t W = rows.size();
  const std::size_t words = (W + 63) / 64;

  {
    QMatrix qrows;
    qrows.reserve(W);
    for (const auto& r : rows) qrows.push_back(to_rational(r));
    if (rank_of(qrows, dim) != dim) throw Error("extreme_rays: cone is not pointed");
  }

  // Simplicial start: the first D rows of full rank, as a subcone M z <= 0.
  std::vector<std::size_t> start;
  {
    RowBasis rb(dim);
    for (std::size_t k = 0; k < W && start.size() < dim; ++k)
      if (rb.add(to_rational(rows[k]))) start.push_back(k);
  }
  QMatrix M, Minv;
  for (auto k : start) M.push_back(to_rational(rows[k]));
  if (!invert_matrix(M, Minv)) throw VerificationFailure("extreme_rays: singular start basis");

  std::vector<bool> in_start(W, false);
  for (auto k : start) in_start[k] = true;
  std::vector<std::size_t> processed = start;

  std::vector<Ray> rays(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    QVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = -Minv[i][j];
    rays[j].z = primitive_integer(col);
    rays[j].tight.assign(words, 0);
    for (auto k : processed)
      if (dot(rows[k], rays[j].z) == 0) set_bit(rays[j].tight, k);
  }

  auto insert_row = [&](std::size_t k, bool is_eq) {
    const std::size_t R = rays.size();
    std::vector<Integer> s(R);
    par::for_each_index(R, [&](std::size_t i) { s[i] = dot(rows[k], rays[i].z); });

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < R; ++i) {
      if (s[i] > 0)
        pos.push_back(i);
      else if (s[i] < 0)
        neg.push_back(i);
    }
    if (pos.empty() && is_eq) {
      // Row already holds as <=; keep the tight rays only.
      std::vector<Ray> next;
      for (std::size_t i = 0; i < R; ++i)
        if (s[i] == 0) {
          set_bit(rays[i].tight, k);
          next.push_back(std::move(rays[i]));
        }
      rays = std::move(next);
      processed.push_back(k);
      return;
    }

    // Candidate pairs in fixed (p, n) order; adjacency decided against the
    // current ray list.  popcount prefilter: a 2-face needs >= D-2 tight rows.
    struct Cand {
      std::size_t p, n;
      bool adjacent = false;
      Ray ray;
    };
    std::vector<Cand> cands;
    cands.reserve(pos.size() * neg.size());
    for (auto p : pos)
      for (auto n : neg) cands.push_back(Cand{p, n, false, {}});

    const std::size_t need = dim >= 2 ? dim - 2 : 0;
    par::for_each_index(cands.size(), [&](std::size_t ci) {
      auto& cd = cands[ci];
      Mask common(words);
      for (std::size_t w = 0; w < words; ++w)
        common[w] = rays[cd.p].tight[w] & rays[cd.n].tight[w];
      if (popcount(common) < need) return;
      for (std::size_t t = 0; t < R; ++t) {
        if (t == cd.p || t == cd.n) continue;
        if (subset_of(common, rays[t].tight)) return;
      }
      cd.adjacent = true;
      ZVector w(dim);
      for (std::size_t c = 0; c < dim; ++c)
        w[c] = s[cd.p] * rays[cd.n].z[c] - s[cd.n] * rays[cd.p].z[c];
      primitive_reduce(w);
      cd.ray.z = std::move(w);
      cd.ray.tight.assign(words, 0);
      for (auto pr : processed)
        if (dot(rows[pr], cd.ray.z) == 0) set_bit(cd.ray.tight, pr);
      set_bit(cd.ray.tight, k);
    });

    std::vector<Ray> next;
    for (std::size_t i = 0; i < R; ++i) {
      if (s[i] == 0) {
        set_bit(rays[i].tight, k);
        next.push_back(std::move(rays[i]));
      } else if (s[i] < 0 && !is_eq) {
        next.push_back(std::move(rays[i]));
      }
    }
    for (auto& cd : cands)
      if (cd.adjacent) next.push_back(std::move(cd.ray));
    rays = std::move(next);
    processed.push_back(k);
    if (rays.size() > caps.max_rays)
      throw CapExceeded("max_rays", "double description grew to " +
                                        std::to_string(rays.size()) + " rays");
  };

  for (std::size_t k = 0; k < n_eq; ++k) insert_row(k, true);
  for (std::size_t k = n_eq; k < W; ++k)
    if (!in_start[k]) insert_row(k, false);

  std::vector<ZVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace detail

QVector apply_affine(const AffineMap& T, const QVector& x) {
  QVector y = mat_vec(T.M, x);
  if (y.size() != T.t.size()) throw InvalidInput("affine map: offset width mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += T.t[i];
  return y;
}

AffineMap compose_affine(const AffineMap& A, const AffineMap& B) {
  AffineMap C;
  C.M = mat_mul(A.M, B.M);
  C.t = apply_affine(A, B.t);
  return C;
}

bool in_hull(const std::vector<QVector>& points, const QVector& x) {
  if (points.empty()) return false;
  const std::size_t dim = x.size();
  QMatrix A(dim + 1, QVector(points.size(), Rational(0)));
  QVector b(dim + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != dim) throw InvalidInput("in_hull: point width mismatch");
    for (std::size_t i = 0; i < dim; ++i) A[i][j] = points[j][i];
    A[dim][j] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) b[i] = x[i];
  b[dim] = 1;
  return solve_eq_nonneg(A, b).feasible;
}

VPolytope extreme_subset(int dim, const std::vector<QVector>& points) {
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(dim))
      throw InvalidInput("extreme_subset: point width mismatch");
  std::vector<QVector> uniq = points;
  std::sort(uniq.begin(), uniq.end(), qvec_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  VPolytope P;
  P.dim = dim;
  if (uniq.size() <= 1) {
    P.vertices = std::move(uniq);
    return P;
  }
  std::vector<char> keep(uniq.size(), 0);
  par::for_each_index(uniq.size(), [&](std::size_t i) {
    std::vector<QVector> others;
    others.reserve(uniq.size() - 1);
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    keep[i] = in_hull(others, uniq[i]) ? 0 : 1;
  });
  for (std::size_t i = 0; i < uniq.size(); ++i)
    if (keep[i]) P.vertices.push_back(std::move(uniq[i]));
  return P;
}

VPolytope make_vpolytope(int dim, std::vector<QVector> points) {
  return extreme_subset(dim, points);
}

VPolytope vertex_enumeration(const HPolytope& H, const Caps& caps) {
  validate_hpolytope(H);
  const std::size_t dim = static_cast<std::size_t>(H.dim);

  // Pointedness of the feasible set decides between "bounded polytope",
  // "empty", and "has a recession direction".
  {
    RowBasis rb(dim);
    for (const auto& r : H.in_A) rb.add(r);
    if (rb.rank() < dim)
      for (const auto& r : H.eq_A)
        if (rb.add(r) && rb.rank() == dim) break;
    if (rb.rank() < dim) {
      FeasibilityCertificate cert = lp_feasible(H);
      if (!cert.feasible) return VPolytope{H.dim, {}};
      throw Unbounded("vertex_enumeration: feasible set has a nontrivial lineality space");
    }
  }

  const std::size_t D = dim + 1;
  std::vector<ZVector> eqh, leh;
  auto homogenize = [&](const QVector& row, const Rational& rhs) {
    QVector h(D);
    h[0] = -rhs;
    for (std::size_t j = 0; j < dim; ++j) h[j + 1] = row[j];
    return primitive_integer(h);
  };
  for (std::size_t r = 0; r < H.eq_A.size(); ++r) eqh.push_back(homogenize(H.eq_A[r], H.eq_b[r]));
  {
    ZVector x0(D, 0);
    x0[0] = -1;  // x0 >= 0
    leh.push_back(std::move(x0));
  }
  for (std::size_t r = 0; r < H.in_A.size(); ++r) leh.push_back(homogenize(H.in_A[r], H.in_b[r]));

  std::vector<ZVector> rays = detail::extreme_rays(static_cast<int>(D), eqh, leh, caps);

  std::vector<QVector> verts;
  bool recession = false;
  for (const auto& z : rays) {
    if (z[0] == 0) {
      recession = true;
      continue;
    }
    if (z[0] < 0) throw VerificationFailure("vertex_enumeration: ray violates x0 >= 0");
    QVector v(dim);
    Rational scale = Rational(z[0]);
    for (std::size_t j = 0; j < dim; ++j) v[j] = Rational(z[j + 1]) / scale;
    verts.push_back(std::move(v));
  }
  if (recession && !verts.empty())
    throw Unbounded("vertex_enumeration: polytope is unbounded");
  if (recession && verts.empty()) return VPolytope{H.dim, {}};
  std::sort(verts.begin(), verts.end(), qvec_less);
  VPolytope P;
  P.dim = H.dim;
  P.vertices = std::move(verts);
  return P;
}

VPolytope affine_image(const VPolytope& P, const AffineMap& T) {
  const int out_dim = static_cast<int>(T.M.size());
  if (out_dim < 1) throw InvalidInput("affine_image: empty matrix");
  for (const auto& row : T.M)
    if (row.size() != static_cast<std::size_t>(P.dim))
      throw InvalidInput("affine_image: matrix width mismatch");
  if (T.t.size() != static_cast<std::size_t>(out_dim))
    throw InvalidInput("affine_image: offset width mismatch");
  std::vector<QVector> images;
  images.reserve(P.vertices.size());
  for (const auto& v : P.vertices) images.push_back(apply_affine(T, v));
  return make_vpolytope(out_dim, std::move(images));
}

bool polytope_equal(const VPolytope& P, const VPolytope& Q) {
  return P.dim == Q.dim && P.vertices == Q.vertices;
}

bool contains(const VPolytope& P, const QVector& x) {
  if (x.size() != static_cast<std::size_t>(P.dim))
    throw InvalidInput("contains: point width mismatch");
  return in_hull(P.vertices, x);
}

namespace detail {

HPolytope facet_description(const VPolytope& P) {
  HPolytope H;
  H.dim = P.dim;
  const std::size_t dim = static_cast<std::size_t>(P.dim);
  if (P.vertices.empty()) {
    H.eq_A.push_back(QVector(dim, Rational(0)));
    H.eq_b.push_back(Rational(1));  // 0 = 1: canonical empty system
    return H;
  }
  if (P.vertices.size() == 1) {
    for (std::size_t i = 0; i < dim; ++i) {
      QVector row(dim, Rational(0));
      row[i] = 1;
      H.eq_A.push_back(std::move(row));
      H.eq_b.push_back(P.vertices[0][i]);
    }
    return H;
  }

  const QVector& v0 = P.vertices[0];
  RowBasis rb(dim);
  for (std::size_t i = 1; i < P.vertices.size(); ++i) {
    QVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = P.vertices[i][j] - v0[j];
    rb.add(d);
  }
  const std::size_t k = rb.rank();

  // Affine hull: left-orthogonal directions of the difference space.
  QMatrix span;
  for (const auto& r : rb.rows()) span.push_back(r);
  for (const auto& c : kernel_basis(span, dim)) {
    ZVector ci = primitive_integer(c);
    QVector row = to_rational(ci);
    H.eq_b.push_back(dot(row, v0));
    H.eq_A.push_back(std::move(row));
  }

  // Facets, computed in reduced coordinates (the pivot columns of the
  // difference space) where the hull is full-dimensional: the extreme rays of
  // {(c0, c) : c0 + c.t_i <= 0} are exactly the facet inequalities.
  const auto& J = rb.pivots();
  std::vector<ZVector> dual_rows;
  dual_rows.reserve(P.vertices.size());
  for (const auto& v : P.vertices) {
    QVector t(k + 1);
    t[0] = 1;
    for (std::size_t j = 0; j < k; ++j) t[j + 1] = v[J[j]];
    dual_rows.push_back(primitive_integer(t));
  }
  std::vector<ZVector> facets =
      extreme_rays(static_cast<int>(k + 1), {}, std::move(dual_rows), Caps{});
  QMatrix in_A;
  QVector in_b;
  for (const auto& f : facets) {
    QVector row(dim, Rational(0));
    for (std::size_t j = 0; j < k; ++j) row[J[j]] = Rational(f[j + 1]);
    in_A.push_back(std::move(row));
    in_b.push_back(Rational(-f[0]));
  }
  // Deterministic row order for stable serialization.
  std::vector<std::size_t> order(in_A.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (in_A[a] != in_A[b]) return qvec_less(in_A[a], in_A[b]);
    return in_b[a] < in_b[b];
  });
  for (auto i : order) {
    H.in_A.push_back(std::move(in_A[i]));
    H.in_b.push_back(std::move(in_b[i]));
  }
  return H;
}

}  // namespace detail

VPolytope affine_image_of_hpolytope(const HPolytope& P, const AffineMap& T, const Caps& caps) {
  validate_hpolytope(P);
  const int m = static_cast<int>(T.M.size());
  if (m < 1) throw InvalidInput("projection: empty matrix");
  for (const auto& row : T.M)
    if (row.size() != static_cast<std::size_t>(P.dim))
      throw InvalidInput("projection: matrix width mismatch");
  if (T.t.size() != static_cast<std::size_t>(m))
    throw InvalidInput("projection: offset width mismatch");

  if (!lp_feasible(P).feasible) return VPolytope{m, {}};

  std::set<QVector, QVecLess> seen;
  std::vector<QVector> points;
  auto support = [&](const QVector& dir) {
    QVector c(static_cast<std::size_t>(P.dim), Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
        if (dir[i] != 0) c[j] += dir[i] * T.M[i][j];
    }
    LpResult r = lp_solve(P, c, true);
    if (r.status != LpStatus::optimal)
      throw Unbounded("projection: support LP unbounded");
    return apply_affine(T, r.x);
  };
  auto add_point = [&](QVector y) {
    if (seen.insert(y).second) {
      points.push_back(std::move(y));
      if (points.size() > caps.max_rays)
        throw CapExceeded("max_rays", "projection inner hull exceeded the generator cap");
      return true;
    }
    return false;
  };

  for (int j = 0; j < m; ++j) {
    QVector dir(static_cast<std::size_t>(m), Rational(0));
    dir[static_cast<std::size_t>(j)] = 1;
    add_point(support(dir));
    dir[static_cast<std::size_t>(j)] = -1;
    add_point(support(dir));
  }

  // Grow the inner hull until every equality and facet is certified tight by
  // a support LP; then the hull equals the image.
  while (true) {
    VPolytope inner = make_vpolytope(m, points);
    HPolytope F = detail::facet_description(inner);
    bool violated = false;
    for (std::size_t r = 0; r < F.eq_A.size(); ++r) {
      QVector y_max = support(F.eq_A[r]);
      if (dot(F.eq_A[r], y_max) > F.eq_b[r]) violated |= add_point(std::move(y_max));
      QVector neg(F.eq_A[r].size());
      for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -F.eq_A[r][j];
      QVector y_min = support(neg);
      if (dot(F.eq_A[r], y_min) < F.eq_b[r]) violated |= add_point(std::move(y_min));
    }
    for (std::size_t r = 0; r < F.in_A.size(); ++r) {
      QVector y = support(F.in_A[r]);
      if (dot(F.in_A[r], y) > F.in_b[r]) violated |= add_point(std::move(y));
    }
    if (!violated) return inner;
  }
}

}  // namespace shiftpoly
