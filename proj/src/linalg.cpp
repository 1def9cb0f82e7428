#include "shiftpoly/linalg.hpp"

#include "shiftpoly/errors.hpp"

namespace shiftpoly {

bool RowBasis::add(QVector v) {
  if (v.size() != cols_) throw InvalidInput("RowBasis: row width mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Rational inv = v[p];
  for (auto& x : v) x /= inv;
  // Keep existing rows reduced against the new pivot.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][p] != 0) {
      Rational f = rows_[r][p];
      for (std::size_t c = 0; c < cols_; ++c) rows_[r][c] -= f * v[c];
    }
  }
  // Insert keeping pivot columns ascending.
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

void RowBasis::reduce(QVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& f = v[pivots_[r]];
    if (f != 0) {
      Rational coef = f;  // copy: v[pivot] changes during the loop
      for (std::size_t c = 0; c < cols_; ++c) v[c] -= coef * rows_[r][c];
    }
  }
}

bool RowBasis::in_span(const QVector& v) const {
  QVector w = v;
  reduce(w);
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

std::size_t rank_of(const QMatrix& rows, std::size_t cols) {
  RowBasis b(cols);
  for (const auto& r : rows) b.add(r);
  return b.rank();
}

QMatrix kernel_basis(const QMatrix& A, std::size_t cols) {
  RowBasis b(cols);
  for (const auto& r : A) b.add(r);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : b.pivots()) is_pivot[p] = true;
  QMatrix out;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    QVector x(cols, Rational(0));
    x[fc] = 1;
    for (std::size_t r = 0; r < b.rank(); ++r) x[b.pivots()[r]] = -b.rows()[r][fc];
    out.push_back(std::move(x));
  }
  return out;
}

bool invert_matrix(const QMatrix& A, QMatrix& inv) {
  const std::size_t n = A.size();
  QMatrix work = A;
  inv.assign(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (work[i].size() != n) throw InvalidInput("invert_matrix: not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = work[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      work[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rational f = work[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        work[r][c] -= f * work[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return true;
}

QVector mat_vec(const QMatrix& M, const QVector& x) {
  QVector y(M.size(), Rational(0));
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (M[r].size() != x.size()) throw InvalidInput("mat_vec: width mismatch");
    y[r] = dot(M[r], x);
  }
  return y;
}

QMatrix mat_mul(const QMatrix& A, const QMatrix& B) {
  if (A.empty() || B.empty()) return {};
  const std::size_t n = A.size(), k = B.size(), m = B[0].size();
  QMatrix C(n, QVector(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (A[i].size() != k) throw InvalidInput("mat_mul: shape mismatch");
    for (std::size_t j = 0; j < k; ++j) {
      if (A[i][j] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) C[i][c] += A[i][j] * B[j][c];
    }
  }
  return C;
}

}  // namespace shiftpoly
