#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shiftpoly {

using Integer = mpz_class;
using Rational = mpq_class;
using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// num/den reduced to lowest terms with positive denominator.
Rational rational_of(long num, long den = 1);

/// Parses "p" or "p/q" (canonical or not); throws InvalidInput on anything else.
Rational parse_rational(const std::string& s);

/// Canonical form: lowest terms, denominator omitted when it is 1 ("3", "-2/7").
std::string rational_str(const Rational& q);

/// Clears denominators and divides out the content; the zero vector maps to itself.
ZVector primitive_integer(const QVector& v);

/// Divides the vector by the gcd of its entries (no sign change).
void primitive_reduce(ZVector& v);

Rational dot(const QVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);

/// Strict-weak lexicographic order, usable as comparator for sets/sorting.
bool qvec_less(const QVector& a, const QVector& b);

struct QVecLess {
  bool operator()(const QVector& a, const QVector& b) const { return qvec_less(a, b); }
};

}  // namespace shiftpoly
