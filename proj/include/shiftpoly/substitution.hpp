#pragma once

// Tile-frequency certificates for substitution systems: exact Perron
// frequencies in a real quadratic field when the Perron root has degree at
// most 2, certified rational brackets otherwise, and an exact irrationality
// test for frequency ratios.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shiftpoly/rational.hpp"

namespace shiftpoly {

// a + b*sqrt(D) with D a positive squarefree integer (> 1).  Representation
// is unique, so equality and signs are exact.  Rational values keep b = 0
// under whatever D their computation runs in.
struct QuadraticNumber {
  Rational a, b;
  Integer D = 2;

  bool is_rational() const { return b == 0; }
};

/// Builds a + b*sqrt(raw) after pulling square factors out of raw (so
/// sqrt(8) becomes 2*sqrt(2)).  raw must be positive; a perfect square
/// collapses into the rational part with D = 2.
QuadraticNumber make_quadratic(const Rational& a, const Rational& b, const Integer& raw);

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);

/// -1, 0, or 1, decided exactly.
int sign(const QuadraticNumber& x);
bool operator<(const QuadraticNumber& x, const QuadraticNumber& y);

/// "(1+1*sqrt(5))/2" style; plain "p/q" when the value is rational.
std::string to_exact_string(const QuadraticNumber& x);

/// Decimal expansion rounded to `digits` places after the point.
std::string to_decimal_string(const QuadraticNumber& x, int digits = 15);

/// True iff x is irrational, i.e. the sqrt coefficient survives reduction.
bool certify_irrational(const QuadraticNumber& x);

// Count matrix M[i][j] = number of type-i tiles produced by inflating one
// type-j tile.  Primitivity (some power strictly positive) is verified at
// construction.
struct SubstitutionSystem {
  std::vector<std::string> types;
  std::vector<ZVector> M;
};

/// Throws InvalidInput on shape/negativity problems and "not primitive" when
/// no power of M is strictly positive.
SubstitutionSystem make_substitution(std::vector<std::string> types, std::vector<ZVector> M);

/// True iff some power of the nonnegative square matrix is strictly positive
/// (checked up to the Wielandt exponent).
bool is_primitive(const std::vector<ZVector>& M);

/// Shipped presets by name; currently "penrose-robinson" (types fat, thin).
SubstitutionSystem substitution_preset(const std::string& name);

// Normalized right Perron eigenvector.  Exact mode: entries in Q(sqrt(D))
// summing to 1 with M*freq = root*freq verified by substitution.  Interval
// mode: per-type rational brackets of width <= 10^-12 derived from the
// sum-normalized columns of a high power of M, which provably contain the
// eigenvector.
struct PerronResult {
  bool exact = false;
  std::vector<QuadraticNumber> freq;               // exact mode
  QuadraticNumber root;                            // exact mode: Perron eigenvalue
  std::vector<std::pair<Rational, Rational>> bounds;  // interval mode
};

/// require_exact throws "degree too high for exact mode" instead of falling
/// back to intervals.
PerronResult perron_frequencies(const SubstitutionSystem& S, bool require_exact = false);

// freq[i] / freq[j]; exact when the frequencies are, otherwise a certified
// rational bracket.
struct RatioResult {
  bool exact = false;
  QuadraticNumber value;                    // exact mode
  std::pair<Rational, Rational> bounds;     // interval mode
};

RatioResult frequency_ratio(const SubstitutionSystem& S, std::size_t i, std::size_t j);

/// [M seed, M^2 seed, ..., M^k seed], exact.  seed must be nonnegative and
/// nonzero, k >= 1.
std::vector<ZVector> iterate_counts(const SubstitutionSystem& S, const ZVector& seed, int k);

}  // namespace shiftpoly
