#include <algorithm>
#include <random>

#include "doctest.h"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/geometry.hpp"

using namespace shiftpoly;

namespace {

QVector qv(std::initializer_list<int> xs) {
  QVector v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

HPolytope box(int dim) {  // 0 <= x <= 1 per coordinate
  HPolytope H;
  H.dim = dim;
  for (int j = 0; j < dim; ++j) {
    QVector lo(dim, Rational(0)), hi(dim, Rational(0));
    lo[j] = -1;
    hi[j] = 1;
    H.in_A.push_back(lo);
    H.in_b.push_back(Rational(0));
    H.in_A.push_back(hi);
    H.in_b.push_back(Rational(1));
  }
  return H;
}

}  // namespace

TEST_CASE("geometry: canonical V-form") {
  const VPolytope P = make_vpolytope(
      2, {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, 1}),
          {Rational(1) / Rational(2), Rational(1) / Rational(2)}});
  REQUIRE(P.vertices.size() == 4);  // duplicate and center dropped
  CHECK(std::is_sorted(P.vertices.begin(), P.vertices.end(), qvec_less));
  CHECK(contains(P, {Rational(1) / Rational(3), Rational(2) / Rational(3)}));
  CHECK_FALSE(contains(P, qv({2, 0})));
  CHECK(in_hull(P.vertices, {Rational(1) / Rational(2), Rational(1) / Rational(2)}));
  CHECK_FALSE(in_hull(P.vertices, {Rational(3) / Rational(2), Rational(0)}));
  const VPolytope E = extreme_subset(2, {qv({0, 0}), qv({2, 0}), qv({1, 0})});
  CHECK(E.vertices == std::vector<QVector>{qv({0, 0}), qv({2, 0})});
}

TEST_CASE("geometry: vertex enumeration on known bodies") {
  SUBCASE("cube") {
    const VPolytope V = vertex_enumeration(box(3));
    CHECK(V.vertices.size() == 8);
    for (const auto& v : V.vertices)
      for (const auto& c : v) CHECK((c == 0 || c == 1));
  }
  SUBCASE("standard simplex via equality") {
    HPolytope H;
    H.dim = 3;
    H.eq_A = {QVector(3, Rational(1))};
    H.eq_b = {Rational(1)};
    for (int j = 0; j < 3; ++j) {
      QVector row(3, Rational(0));
      row[j] = -1;
      H.in_A.push_back(row);
      H.in_b.push_back(Rational(0));
    }
    const VPolytope V = vertex_enumeration(H);
    REQUIRE(V.vertices.size() == 3);
    CHECK(V.vertices[0] == qv({0, 0, 1}));
    CHECK(V.vertices[2] == qv({1, 0, 0}));
  }
  SUBCASE("cross polytope") {
    HPolytope H;
    H.dim = 2;
    for (int sx : {-1, 1})
      for (int sy : {-1, 1}) {
        H.in_A.push_back({Rational(sx), Rational(sy)});
        H.in_b.push_back(Rational(1));
      }
    const VPolytope V = vertex_enumeration(H);
    REQUIRE(V.vertices.size() == 4);
    CHECK(contains(V, qv({0, 0})));
    CHECK(V.vertices[0] == qv({-1, 0}));
  }
  SUBCASE("empty set") {
    HPolytope H;
    H.dim = 2;
    H.eq_A = {QVector(2, Rational(0))};
    H.eq_b = {Rational(1)};
    CHECK(vertex_enumeration(H).vertices.empty());
  }
  SUBCASE("unbounded throws") {
    HPolytope H;
    H.dim = 2;
    H.in_A = {{Rational(-1), Rational(0)}};
    H.in_b = {Rational(0)};
    CHECK_THROWS_AS(vertex_enumeration(H), Unbounded);
  }
}

TEST_CASE("geometry: affine maps compose and push polytopes") {
  const VPolytope P = make_vpolytope(2, {qv({0, 0}), qv({1, 0}), qv({0, 1})});
  AffineMap T;  // (x,y) -> (2x, x+y) + (1,0)
  T.M = {{Rational(2), Rational(0)}, {Rational(1), Rational(1)}};
  T.t = {Rational(1), Rational(0)};
  const VPolytope image = affine_image(P, T);
  REQUIRE(image.vertices.size() == 3);
  CHECK(contains(image, qv({1, 0})));
  CHECK(contains(image, qv({3, 1})));
  CHECK(contains(image, qv({1, 1})));

  AffineMap S;  // projection to first coordinate
  S.M = {{Rational(1), Rational(0)}};
  S.t = {Rational(0)};
  const AffineMap C = compose_affine(S, T);
  CHECK(apply_affine(C, qv({1, 1})) == apply_affine(S, apply_affine(T, qv({1, 1}))));
}

TEST_CASE("geometry: support-oracle image agrees with vertex images") {
  // Differential between the two projection algorithms on random polytopes.
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const int dim = static_cast<int>(rng() % 3) + 2;
    HPolytope H = box(dim);
    for (int extra = static_cast<int>(rng() % 4); extra > 0; --extra) {
      QVector row(dim);
      for (auto& v : row) v = Rational(static_cast<int>(rng() % 5) - 2);
      H.in_A.push_back(row);
      H.in_b.push_back(Rational(static_cast<int>(rng() % 3) + 1));
    }
    const int out_dim = static_cast<int>(rng() % 2) + 1;
    AffineMap T;
    T.M.assign(out_dim, QVector(dim));
    T.t.assign(out_dim, Rational(0));
    for (auto& row : T.M)
      for (auto& v : row) v = Rational(static_cast<int>(rng() % 5) - 2);
    CAPTURE(t);
    const VPolytope direct = affine_image(vertex_enumeration(H), T);
    const VPolytope oracle = affine_image_of_hpolytope(H, T);
    REQUIRE(polytope_equal(direct, oracle));
  }
}

TEST_CASE("geometry: equality is exact") {
  const VPolytope P = make_vpolytope(1, {qv({0}), qv({2})});
  const VPolytope Q = make_vpolytope(1, {qv({0}), qv({1}), qv({2})});
  CHECK(polytope_equal(P, Q));  // interior point collapses
  const VPolytope R = make_vpolytope(1, {qv({0}), qv({3})});
  CHECK_FALSE(polytope_equal(P, R));
}

TEST_CASE("geometry: ray cap surfaces as CapExceeded") {
  Caps caps;
  caps.max_rays = 2;
  CHECK_THROWS_AS(vertex_enumeration(box(3), caps), CapExceeded);
}
