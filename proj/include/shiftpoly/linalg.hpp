#pragma once

#include <cstddef>
#include <vector>

#include "shiftpoly/rational.hpp"

namespace shiftpoly {

// Incrementally maintained reduced row-echelon basis of a rational row space.
// Rows are normalized to a unit pivot and fully reduced against each other,
// so membership tests reduce to "does the residual vanish".
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols) : cols_(cols) {}

  /// Adds v's residual to the basis; returns true if the rank grew.
  bool add(QVector v);

  /// True iff v lies in the current row space.
  bool in_span(const QVector& v) const;

  /// Reduces v in place against the basis (v becomes the residual).
  void reduce(QVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;  // ascending pivot column per basis row
};

std::size_t rank_of(const QMatrix& rows, std::size_t cols);

/// Basis of the right kernel {x : A x = 0}, deterministic (free columns ascending).
QMatrix kernel_basis(const QMatrix& A, std::size_t cols);

/// Exact inverse; returns false iff A is singular.
bool invert_matrix(const QMatrix& A, QMatrix& inv);

QVector mat_vec(const QMatrix& M, const QVector& x);
QMatrix mat_mul(const QMatrix& A, const QMatrix& B);

}  // namespace shiftpoly
