#pragma once

#include "shiftpoly/geometry.hpp"
#include "shiftpoly/rational.hpp"

namespace shiftpoly {

enum class LpStatus { optimal, infeasible, unbounded };

// Outcome of an exact LP over an HPolytope.  On infeasibility the multipliers
// form a Farkas witness: farkas_in >= 0 componentwise,
//   farkas_eq^T eq_A + farkas_in^T in_A = 0   and
//   farkas_eq^T eq_b + farkas_in^T in_b < 0,
// which contradicts feasibility by substitution alone.
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  QVector x;
  Rational objective;
  QVector farkas_eq;
  QVector farkas_in;
};

/// Optimizes objective^T x over H exactly; deterministic pivoting (Dantzig
/// entering, lexicographic leaving).  The optimizer is a basic feasible point.
LpResult lp_solve(const HPolytope& H, const QVector& objective, bool maximize);

struct FeasibilityCertificate {
  bool feasible = false;
  QVector point;      // feasible case
  QVector farkas_eq;  // infeasible case, same convention as LpResult
  QVector farkas_in;
};

FeasibilityCertificate lp_feasible(const HPolytope& H);

/// Checks a certificate against H by pure substitution.
bool verify_certificate(const HPolytope& H, const FeasibilityCertificate& cert);

/// Lexicographically least feasible point (sequence of coordinate LPs).
QVector lex_min_point(const HPolytope& H);

/// Feasibility of {z >= 0 : A z = b} with a Farkas witness y on the rows
/// (y^T A <= 0 componentwise and y^T b > 0 when infeasible).
struct ConicResult {
  bool feasible = false;
  QVector z;
  QVector y;
};

ConicResult solve_eq_nonneg(const QMatrix& A, const QVector& b);

}  // namespace shiftpoly
