#include <string>

#include "doctest.h"
#include "shiftpoly/errors.hpp"
#include "shiftpoly/substitution.hpp"

using namespace shiftpoly;

namespace {

QuadraticNumber q(long a_num, long a_den, long b_num, long b_den, long D) {
  return {Rational(a_num) / Rational(a_den), Rational(b_num) / Rational(b_den), Integer(D)};
}

const QuadraticNumber phi = q(1, 2, 1, 2, 5);

}  // namespace

TEST_CASE("quadratic: construction pulls out square factors") {
  const QuadraticNumber x = make_quadratic(Rational(0), Rational(1), Integer(8));
  CHECK(x.a == 0);
  CHECK(x.b == 2);  // sqrt(8) = 2 sqrt(2)
  CHECK(x.D == 2);
  const QuadraticNumber y = make_quadratic(Rational(0), Rational(1), Integer(49));
  CHECK(y.b == 0);
  CHECK(y.a == 7);  // perfect square collapses to a rational
  const QuadraticNumber z = make_quadratic(Rational(1) / 2, Rational(1) / 2, Integer(45));
  CHECK(z.a == Rational(1) / 2);
  CHECK(z.b == Rational(3) / 2);
  CHECK(z.D == 5);
  CHECK_THROWS_AS(make_quadratic(Rational(0), Rational(1), Integer(0)), InvalidInput);
  CHECK_THROWS_AS(make_quadratic(Rational(0), Rational(1), Integer(-3)), InvalidInput);
}

TEST_CASE("quadratic: field arithmetic and exact sign") {
  const QuadraticNumber one = q(1, 1, 0, 1, 5);
  CHECK(phi * phi == phi + one);  // phi^2 = phi + 1
  CHECK(one / phi == phi - one);  // 1/phi = phi - 1

  const QuadraticNumber r2 = q(0, 1, 1, 1, 2);
  const QuadraticNumber m = q(1, 1, 1, 1, 2) * q(1, 1, -1, 1, 2);
  CHECK(m.b == 0);
  CHECK(m.a == -1);  // (1+sqrt2)(1-sqrt2) = -1

  CHECK(sign(r2 - q(1, 1, 0, 1, 2)) > 0);  // sqrt2 > 1
  CHECK(sign(r2 - q(2, 1, 0, 1, 2)) < 0);  // sqrt2 < 2
  CHECK(sign(q(-3, 1, 2, 1, 2)) < 0);      // 2 sqrt2 < 3
  CHECK(sign(q(-2, 1, 2, 1, 2)) > 0);      // 2 sqrt2 > 2
  CHECK(q(1, 1, 0, 1, 2) < r2);
  CHECK(r2 - r2 == q(0, 1, 0, 1, 7));  // rational zero compares across discriminants

  CHECK_THROWS_WITH_AS(phi + r2, doctest::Contains("discriminant mismatch"), InvalidInput);
  CHECK_THROWS_WITH_AS(phi / q(0, 1, 0, 1, 5), doctest::Contains("division by zero"),
                       InvalidInput);
}

TEST_CASE("quadratic: printing and irrationality certificates") {
  CHECK(to_exact_string(phi) == "(1+1*sqrt(5))/2");
  CHECK(to_exact_string(q(3, 7, 0, 1, 5)) == "3/7");
  CHECK(to_exact_string(q(0, 1, -1, 1, 2)) == "(0-1*sqrt(2))");
  CHECK(to_decimal_string(phi, 15) == "1.618033988749895");
  CHECK(to_decimal_string(q(3, 7, 0, 1, 5), 15) == "0.428571428571429");
  CHECK(to_decimal_string(q(-1, 2, -1, 2, 5), 6) == "-1.618034");
  CHECK(certify_irrational(phi));
  CHECK_FALSE(certify_irrational(q(3, 7, 0, 1, 5)));
  CHECK_FALSE(certify_irrational(q(0, 1, 1, 1, 5) - q(0, 1, 1, 1, 5)));
}

TEST_CASE("substitution: primitivity check") {
  CHECK(is_primitive({{Integer(2), Integer(1)}, {Integer(1), Integer(1)}}));
  CHECK_FALSE(is_primitive({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}));
  CHECK_FALSE(is_primitive({{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}));
  CHECK_THROWS_WITH_AS(
      make_substitution({"a", "b"}, {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}),
      doctest::Contains("not primitive"), InvalidInput);
}

TEST_CASE("substitution: rhombus preset has exact golden-ratio Perron data") {
  const SubstitutionSystem S = substitution_preset("penrose-robinson");
  REQUIRE(S.types.size() == 2);
  CHECK(S.types[0] == "fat");
  CHECK(S.types[1] == "thin");

  const PerronResult P = perron_frequencies(S, true);
  REQUIRE(P.exact);
  CHECK(P.root == q(3, 2, 1, 2, 5));      // (3+sqrt5)/2
  CHECK(P.freq[0] == q(-1, 2, 1, 2, 5));  // (sqrt5-1)/2
  CHECK(P.freq[1] == q(3, 2, -1, 2, 5));  // (3-sqrt5)/2

  const RatioResult R = frequency_ratio(S, 0, 1);
  REQUIRE(R.exact);
  CHECK(R.value == phi);
  CHECK(to_exact_string(R.value) == "(1+1*sqrt(5))/2");
  CHECK(certify_irrational(R.value));

  const RatioResult Rsame = frequency_ratio(S, 1, 1);
  CHECK(Rsame.exact);
  CHECK(Rsame.value == q(1, 1, 0, 1, 3));

  CHECK_THROWS_AS(substitution_preset("nope"), InvalidInput);
}

TEST_CASE("substitution: Fibonacci matrix") {
  const SubstitutionSystem S =
      make_substitution({"L", "S"}, {{Integer(1), Integer(1)}, {Integer(1), Integer(0)}});
  const PerronResult P = perron_frequencies(S, true);
  REQUIRE(P.exact);
  CHECK(P.root == phi);
  const RatioResult R = frequency_ratio(S, 0, 1);
  CHECK(R.exact);
  CHECK(R.value == phi);
}

TEST_CASE("substitution: cubic with a quadratic Perron factor") {
  const SubstitutionSystem S = make_substitution(
      {"a", "b", "c"}, {{Integer(1), Integer(1), Integer(0)},
                        {Integer(1), Integer(1), Integer(1)},
                        {Integer(0), Integer(1), Integer(1)}});
  const PerronResult P = perron_frequencies(S, true);
  REQUIRE(P.exact);
  CHECK(P.root == q(1, 1, 1, 1, 2));      // 1 + sqrt2
  CHECK(P.freq[0] == q(1, 1, -1, 2, 2));  // (2-sqrt2)/2
  CHECK(P.freq[1] == q(-1, 1, 1, 1, 2));  // sqrt2-1
  CHECK(P.freq[2] == q(1, 1, -1, 2, 2));
}

TEST_CASE("substitution: one type") {
  const SubstitutionSystem S = make_substitution({"t"}, {{Integer(3)}});
  const PerronResult P = perron_frequencies(S, true);
  REQUIRE(P.exact);
  CHECK(P.root == q(3, 1, 0, 1, 2));
  REQUIRE(P.freq.size() == 1);
  CHECK(P.freq[0] == q(1, 1, 0, 1, 2));
}

TEST_CASE("substitution: irreducible cubic falls back to certified intervals") {
  const SubstitutionSystem S = make_substitution(
      {"x", "y", "z"}, {{Integer(1), Integer(1), Integer(1)},
                        {Integer(1), Integer(0), Integer(0)},
                        {Integer(0), Integer(1), Integer(0)}});
  CHECK_THROWS_WITH_AS(perron_frequencies(S, true),
                       doctest::Contains("too high for exact mode"), InvalidInput);

  const PerronResult P = perron_frequencies(S);
  REQUIRE_FALSE(P.exact);
  REQUIRE(P.bounds.size() == 3);
  const Rational eps = Rational(1) / Rational(Integer("1000000000000"));
  Rational sum_lo = 0, sum_hi = 0;
  for (const auto& [lo, hi] : P.bounds) {
    CHECK(lo < hi);
    CHECK(hi - lo <= eps);
    CHECK(lo > 0);
    sum_lo += lo;
    sum_hi += hi;
  }
  CHECK(sum_lo <= 1);
  CHECK(1 <= sum_hi);

  // f0 = 1/t with t^3 = t^2 + t + 1; t ~ 1.8392867552141612
  const Rational f0 =
      Rational(Integer("5436890126920763")) / Rational(Integer("10000000000000000"));
  CHECK(P.bounds[0].first <= f0);
  CHECK(f0 <= P.bounds[0].second);

  const RatioResult R = frequency_ratio(S, 0, 1);
  REQUIRE_FALSE(R.exact);
  const Rational t =
      Rational(Integer("18392867552141612")) / Rational(Integer("10000000000000000"));
  CHECK(R.bounds.first <= t);
  CHECK(t <= R.bounds.second);
  CHECK(R.bounds.second - R.bounds.first < Rational(1) / Rational(100000000));
}

TEST_CASE("substitution: inflation count iteration") {
  const SubstitutionSystem S = substitution_preset("penrose-robinson");
  const auto seq = iterate_counts(S, {Integer(1), Integer(0)}, 3);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == ZVector{Integer(2), Integer(1)});
  CHECK(seq[1] == ZVector{Integer(5), Integer(3)});
  CHECK(seq[2] == ZVector{Integer(13), Integer(8)});
  const auto one = iterate_counts(S, {Integer(0), Integer(1)}, 1);
  CHECK(one[0] == ZVector{Integer(1), Integer(1)});

  // count ratios approach the frequency ratio: within 1e-9 of phi at depth 25
  const auto deep = iterate_counts(S, {Integer(1), Integer(0)}, 25);
  const Rational approx = Rational(deep[24][0]) / Rational(deep[24][1]);
  QuadraticNumber err = QuadraticNumber{approx, Rational(0), Integer(5)} - phi;
  if (sign(err) < 0) err = q(0, 1, 0, 1, 5) - err;
  CHECK(sign(err - q(1, 1000000000L, 0, 1, 5)) < 0);

  CHECK_THROWS_AS(iterate_counts(S, {Integer(0), Integer(0)}, 1), InvalidInput);
  CHECK_THROWS_AS(iterate_counts(S, {Integer(1)}, 1), InvalidInput);
}
