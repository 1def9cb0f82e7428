/*
 * Exact rational simplex.  Dense two-phase tableau kept fraction-free: an
 * integer matrix over one positive denominator, updated by Bareiss-style
 * pivots whose divisions are exact, so no per-entry gcd work ever happens.
 * Dantzig's entering rule plus a lexicographic ratio test keeps every run
 * deterministic and free of cycling.  Infeasibility is returned as an
 * explicit Farkas witness verifiable by substitution.
 */
#include "shiftpoly/lp.hpp"

#include <cstddef>

#include "shiftpoly/errors.hpp"

namespace shiftpoly {

namespace {

using ZMatrix = std::vector<ZVector>;

// min c z  s.t.  A z = b, z >= 0 (dense).  Artificial columns live at
// [n, n+m); column n+m is the right-hand side.  Entry (i,j) of the running
// tableau is D[i][j] / den with den > 0; zrow carries its own constant extra
// factor (the objective's integer scaling), which affects no sign test.
struct Core {
  std::size_t m = 0, n = 0;
  ZMatrix D;                       // m x (n + m + 1)
  Integer den = 1;
  ZVector zrow;                    // scaled reduced costs, last entry ~ -objective
  std::vector<std::size_t> basis;  // column basic in each row

  std::size_t rhs() const { return n + m; }

  // Fraction-free Gauss-Jordan step: new denominator is the pivot entry, and
  // the division by the old denominator is exact (tableau entries stay the
  // integer minors of the input system).
  void pivot(std::size_t r, std::size_t e) {
    const Integer piv = D[r][e];
    for (std::size_t i = 0; i < D.size(); ++i) {
      if (i == r) continue;
      const Integer f = D[i][e];
      for (std::size_t c = 0; c <= rhs(); ++c) {
        Integer v = D[i][c] * piv - f * D[r][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
        D[i][c] = std::move(v);
      }
    }
    {
      const Integer f = zrow[e];
      for (std::size_t c = 0; c <= rhs(); ++c) {
        Integer v = zrow[c] * piv - f * D[r][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
        zrow[c] = std::move(v);
      }
    }
    den = piv;
    basis[r] = e;
  }

  // Entering rule: most negative scaled reduced cost, smallest index on ties.
  // Leaving rule: minimum ratio with lexicographic tie-breaking over the full
  // row, which makes the objective strictly lex-decrease every pivot, so no
  // basis repeats and no anti-cycling fallback is needed.  Returns false when
  // no entering column exists (optimal).
  bool step(std::size_t max_col, bool& unbounded) {
    std::size_t enter = max_col;
    for (std::size_t j = 0; j < max_col; ++j)
      if (zrow[j] < 0 && (enter == max_col || zrow[j] < zrow[enter])) enter = j;
    if (enter == max_col) return false;
    std::size_t leave = D.size();
    for (std::size_t i = 0; i < D.size(); ++i) {
      if (D[i][enter] <= 0) continue;
      if (leave == D.size() || lex_row_less(i, leave, enter)) leave = i;
    }
    if (leave == D.size()) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  // Compares rows a and b by their ratio vectors (rhs first, then the
  // artificial block, then structural columns), each divided by the row's
  // positive entry in column e.  Starting from the artificial identity basis
  // every row is lexicographically positive under this column order, and the
  // rule keeps it that way, which is what rules out cycling.  Rows are never
  // proportional (the artificial block stays nonsingular), so this is a
  // strict total order on candidate rows.
  bool lex_row_less(std::size_t a, std::size_t b, std::size_t e) const {
    int c = cmp_product(D[a][rhs()], D[b][e], D[b][rhs()], D[a][e]);
    if (c != 0) return c < 0;
    for (std::size_t col = n; col < rhs(); ++col) {
      c = cmp_product(D[a][col], D[b][e], D[b][col], D[a][e]);
      if (c != 0) return c < 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
      c = cmp_product(D[a][col], D[b][e], D[b][col], D[a][e]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  static int cmp_product(const Integer& a, const Integer& b, const Integer& c,
                         const Integer& d) {
    Integer lhs = a * b, rhs_ = c * d;
    return mpz_cmp(lhs.get_mpz_t(), rhs_.get_mpz_t());
  }
};

struct CoreOut {
  LpStatus status = LpStatus::infeasible;
  QVector z;       // structural values (optimal)
  QVector y;       // Farkas row multipliers (infeasible): y.A <= 0, y.b > 0
  Rational objective;
};

CoreOut simplex_standard(const QMatrix& A, const QVector& b, const QVector& c) {
  const std::size_t m = A.size(), n = m ? A[0].size() : (c.size());
  Core cr;
  cr.m = m;
  cr.n = n;
  cr.basis.resize(m);
  cr.D.assign(m, ZVector(n + m + 1, Integer(0)));
  std::vector<int> sigma(m, 1);    // input row sign applied to make rhs >= 0
  QVector row_scale(m);            // positive; scaled row = sigma * scale * input row
  for (std::size_t i = 0; i < m; ++i) {
    sigma[i] = (b[i] < 0) ? -1 : 1;
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (A[i][j] != 0) l = lcm(l, A[i][j].get_den());
    if (b[i] != 0) l = lcm(l, b[i].get_den());
    row_scale[i] = Rational(l);
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = A[i][j] * l;
      cr.D[i][j] = sigma[i] * v.get_num();
    }
    cr.D[i][n + i] = 1;
    Rational rv = b[i] * l;
    cr.D[i][cr.rhs()] = sigma[i] * rv.get_num();
    cr.basis[i] = n + i;
  }

  // Phase 1: minimize the artificial sum.  All artificials are basic, so the
  // scaled reduced cost of column j is cost(j) minus its column sum.
  cr.zrow.assign(n + m + 1, Integer(0));
  for (std::size_t j = 0; j <= cr.rhs(); ++j) {
    Integer colsum = 0;
    for (std::size_t i = 0; i < m; ++i) colsum += cr.D[i][j];
    cr.zrow[j] = (j >= n && j < n + m ? Integer(1) : Integer(0)) - colsum;
  }
  bool unbounded = false;
  while (cr.step(n + m, unbounded)) {
  }
  // Phase 1 is bounded below by 0, so unbounded cannot trigger here.
  CoreOut out;
  if (cr.zrow[cr.rhs()] != 0) {  // artificial sum stayed positive
    out.status = LpStatus::infeasible;
    out.y.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      // Multiplier on the scaled row i is 1 - zrow_value(n + i).
      Rational yi = Rational(1) - Rational(cr.zrow[n + i]) / Rational(cr.den);
      out.y[i] = sigma[i] * yi * row_scale[i];  // back to the *input* row
    }
    return out;
  }

  // Drive leftover zero-valued artificials out of the basis; a row whose
  // structural part vanished is redundant and gets dropped.
  std::vector<bool> dead(m, false);
  for (std::size_t r = 0; r < cr.D.size(); ++r) {
    if (cr.basis[r] < n) continue;
    std::size_t e = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (cr.D[r][j] != 0) {
        e = j;
        break;
      }
    }
    if (e < n) {
      // The entry may be negative; fraction-free pivoting needs den > 0, so
      // flip the row first (legal for an equality row with zero rhs).
      if (cr.D[r][e] < 0)
        for (std::size_t c2 = 0; c2 <= cr.rhs(); ++c2) cr.D[r][c2] = -cr.D[r][c2];
      cr.pivot(r, e);
    } else {
      dead[r] = true;
    }
  }
  {
    ZMatrix keptD;
    std::vector<std::size_t> keptB;
    for (std::size_t r = 0; r < cr.D.size(); ++r) {
      if (dead[r]) continue;
      keptD.push_back(std::move(cr.D[r]));
      keptB.push_back(cr.basis[r]);
    }
    cr.D = std::move(keptD);
    cr.basis = std::move(keptB);
  }

  // Phase 2 with the real objective; artificial columns are barred.  The
  // zrow carries the extra factor s (the objective's integer scaling): its
  // value at column j is s * den * c_j  -  sum over basic rows of
  // s * c_basis(i) * D[i][j], i.e. (s * den) times the true reduced cost.
  Integer s = 1;
  for (std::size_t j = 0; j < n; ++j)
    if (c[j] != 0) s = lcm(s, c[j].get_den());
  ZVector ci(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = c[j] * s;
    ci[j] = v.get_num();
  }
  cr.zrow.assign(n + m + 1, Integer(0));
  for (std::size_t j = 0; j <= cr.rhs(); ++j) {
    Integer acc = (j < n) ? Integer(ci[j] * cr.den) : Integer(0);
    for (std::size_t i = 0; i < cr.D.size(); ++i)
      if (cr.basis[i] < n) acc -= ci[cr.basis[i]] * cr.D[i][j];
    cr.zrow[j] = acc;
  }
  unbounded = false;
  while (cr.step(n, unbounded)) {
  }
  if (unbounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.z.assign(n, Rational(0));
  for (std::size_t i = 0; i < cr.D.size(); ++i)
    if (cr.basis[i] < n)
      out.z[cr.basis[i]] = Rational(cr.D[i][cr.rhs()]) / Rational(cr.den);
  out.objective = -Rational(cr.zrow[cr.rhs()]) / (Rational(s) * Rational(cr.den));
  return out;
}

// How an HPolytope was rewritten into standard form.
struct Xlat {
  std::size_t dim = 0;
  std::vector<long> bound_row;  // per variable: folded "-x <= 0" row or -1
  std::vector<long> pos_col, neg_col;
  std::vector<std::size_t> kept_ineq;  // original inequality rows kept
  std::size_t cols = 0;
  QMatrix A;
  QVector b;
};

Xlat translate(const HPolytope& H) {
  const std::size_t dim = static_cast<std::size_t>(H.dim);
  Xlat x;
  x.dim = dim;
  x.bound_row.assign(dim, -1);
  // A row "beta * x_i <= 0" with beta < 0 is the bound x_i >= 0: fold it into
  // the variable instead of splitting the variable and adding a slack.
  std::vector<bool> folded(H.in_A.size(), false);
  for (std::size_t r = 0; r < H.in_A.size(); ++r) {
    if (H.in_b[r] != 0) continue;
    long nz = -1;
    bool single = true;
    for (std::size_t j = 0; j < dim; ++j) {
      if (H.in_A[r][j] != 0) {
        if (nz >= 0) {
          single = false;
          break;
        }
        nz = static_cast<long>(j);
      }
    }
    if (single && nz >= 0 && H.in_A[r][static_cast<std::size_t>(nz)] < 0 &&
        x.bound_row[static_cast<std::size_t>(nz)] < 0) {
      x.bound_row[static_cast<std::size_t>(nz)] = static_cast<long>(r);
      folded[r] = true;
    }
  }
  x.pos_col.assign(dim, -1);
  x.neg_col.assign(dim, -1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    x.pos_col[j] = static_cast<long>(col++);
    if (x.bound_row[j] < 0) x.neg_col[j] = static_cast<long>(col++);
  }
  for (std::size_t r = 0; r < H.in_A.size(); ++r)
    if (!folded[r]) x.kept_ineq.push_back(r);
  const std::size_t m = H.eq_A.size() + x.kept_ineq.size();
  x.cols = col + x.kept_ineq.size();
  x.A.assign(m, QVector(x.cols, Rational(0)));
  x.b.assign(m, Rational(0));
  auto fill_row = [&](std::size_t out_r, const QVector& row, const Rational& rhs) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (row[j] == 0) continue;
      x.A[out_r][static_cast<std::size_t>(x.pos_col[j])] = row[j];
      if (x.neg_col[j] >= 0) x.A[out_r][static_cast<std::size_t>(x.neg_col[j])] = -row[j];
    }
    x.b[out_r] = rhs;
  };
  for (std::size_t r = 0; r < H.eq_A.size(); ++r) fill_row(r, H.eq_A[r], H.eq_b[r]);
  for (std::size_t k = 0; k < x.kept_ineq.size(); ++k) {
    std::size_t r = x.kept_ineq[k];
    fill_row(H.eq_A.size() + k, H.in_A[r], H.in_b[r]);
    x.A[H.eq_A.size() + k][col + k] = 1;  // slack
  }
  return x;
}

void check_dims(const HPolytope& H) {
  if (H.dim < 0) throw InvalidInput("HPolytope: negative dimension");
  if (H.eq_A.size() != H.eq_b.size() || H.in_A.size() != H.in_b.size())
    throw InvalidInput("HPolytope: row/rhs count mismatch");
  for (const auto& r : H.eq_A)
    if (r.size() != static_cast<std::size_t>(H.dim))
      throw InvalidInput("HPolytope: equality row width mismatch");
  for (const auto& r : H.in_A)
    if (r.size() != static_cast<std::size_t>(H.dim))
      throw InvalidInput("HPolytope: inequality row width mismatch");
}

// Variable elimination through singleton equality rows, applied to fixpoint.
// Fixing rows are triangular in fixing order (each touches its own variable
// and earlier-fixed ones only), which lets an infeasibility certificate of the
// reduced system be lifted back over the original rows exactly.
struct Presolve {
  bool decided_infeasible = false;
  QVector farkas_eq, farkas_in;  // set when decided_infeasible

  std::vector<Rational> fix_val;       // per original variable (meaningful when fixed)
  std::vector<long> fix_row;           // eq row that fixed the variable, -1 if free
  std::vector<std::size_t> fix_order;  // variables in the order they were fixed
  std::vector<std::size_t> free_vars;  // original indices of the surviving variables
  std::vector<std::size_t> kept_eq, kept_in;
  HPolytope reduced;
};

// Adds to fe (in place) the fixing-row multipliers cancelling every fixed
// variable's residual coefficient; free-variable coefficients are untouched
// because fixing rows vanish there.
void cancel_via_fixings(const HPolytope& H, const Presolve& P, QVector& fe,
                        const QVector& fi) {
  for (std::size_t k = P.fix_order.size(); k-- > 0;) {
    const std::size_t j = P.fix_order[k];
    Rational cj = 0;
    for (std::size_t r = 0; r < H.eq_A.size(); ++r) cj += fe[r] * H.eq_A[r][j];
    for (std::size_t r = 0; r < H.in_A.size(); ++r) cj += fi[r] * H.in_A[r][j];
    if (cj == 0) continue;
    const std::size_t row = static_cast<std::size_t>(P.fix_row[j]);
    fe[row] -= cj / H.eq_A[row][j];
  }
}

Presolve presolve(const HPolytope& H) {
  const std::size_t dim = static_cast<std::size_t>(H.dim);
  Presolve P;
  P.fix_val.assign(dim, Rational(0));
  P.fix_row.assign(dim, -1);
  std::vector<char> row_used(H.eq_A.size(), 0);  // 1 fixing, 2 redundant

  auto infeasible_with = [&](bool eq_row, std::size_t r, const Rational& residual) {
    P.decided_infeasible = true;
    P.farkas_eq.assign(H.eq_A.size(), Rational(0));
    P.farkas_in.assign(H.in_A.size(), Rational(0));
    if (eq_row)
      P.farkas_eq[r] = residual > 0 ? Rational(-1) : Rational(1);
    else
      P.farkas_in[r] = 1;  // residual < 0 here
    cancel_via_fixings(H, P, P.farkas_eq, P.farkas_in);
  };

  bool progress = true;
  while (progress && !P.decided_infeasible) {
    progress = false;
    for (std::size_t r = 0; r < H.eq_A.size() && !P.decided_infeasible; ++r) {
      if (row_used[r]) continue;
      long nz = -1;
      int count = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        if (P.fix_row[j] >= 0 || H.eq_A[r][j] == 0) continue;
        nz = static_cast<long>(j);
        if (++count > 1) break;
      }
      if (count > 1) continue;
      Rational residual = H.eq_b[r];
      for (std::size_t j = 0; j < dim; ++j)
        if (P.fix_row[j] >= 0 && H.eq_A[r][j] != 0) residual -= H.eq_A[r][j] * P.fix_val[j];
      if (count == 0) {
        if (residual == 0) {
          row_used[r] = 2;
          progress = true;
        } else {
          infeasible_with(true, r, residual);
        }
        continue;
      }
      const std::size_t j = static_cast<std::size_t>(nz);
      P.fix_val[j] = residual / H.eq_A[r][j];
      P.fix_row[j] = static_cast<long>(r);
      P.fix_order.push_back(j);
      row_used[r] = 1;
      progress = true;
    }
  }
  if (P.decided_infeasible) return P;

  std::vector<long> new_col(dim, -1);
  for (std::size_t j = 0; j < dim; ++j)
    if (P.fix_row[j] < 0) {
      new_col[j] = static_cast<long>(P.free_vars.size());
      P.free_vars.push_back(j);
    }
  P.reduced.dim = static_cast<int>(P.free_vars.size());

  auto reduce_row = [&](const QVector& row, const Rational& rhs, QVector& out,
                        Rational& out_rhs) {
    out.assign(P.free_vars.size(), Rational(0));
    out_rhs = rhs;
    bool nonzero = false;
    for (std::size_t j = 0; j < dim; ++j) {
      if (row[j] == 0) continue;
      if (P.fix_row[j] >= 0) {
        out_rhs -= row[j] * P.fix_val[j];
      } else {
        out[static_cast<std::size_t>(new_col[j])] = row[j];
        nonzero = true;
      }
    }
    return nonzero;
  };

  for (std::size_t r = 0; r < H.eq_A.size(); ++r) {
    if (row_used[r]) continue;
    QVector row;
    Rational rhs;
    reduce_row(H.eq_A[r], H.eq_b[r], row, rhs);  // >= 2 free coefficients by the loop above
    P.kept_eq.push_back(r);
    P.reduced.eq_A.push_back(std::move(row));
    P.reduced.eq_b.push_back(std::move(rhs));
  }
  for (std::size_t r = 0; r < H.in_A.size(); ++r) {
    QVector row;
    Rational rhs;
    if (!reduce_row(H.in_A[r], H.in_b[r], row, rhs)) {
      if (rhs < 0) {
        infeasible_with(false, r, rhs);
        return P;
      }
      continue;  // implied constant inequality
    }
    P.kept_in.push_back(r);
    P.reduced.in_A.push_back(std::move(row));
    P.reduced.in_b.push_back(std::move(rhs));
  }
  return P;
}

// lp_solve on a system presolve has already reduced (no singleton equalities).
LpResult lp_solve_reduced(const HPolytope& H, const QVector& objective, bool maximize) {
  Xlat x = translate(H);
  QVector c(x.cols, Rational(0));
  for (std::size_t j = 0; j < x.dim; ++j) {
    Rational cj = maximize ? -objective[j] : objective[j];
    c[static_cast<std::size_t>(x.pos_col[j])] = cj;
    if (x.neg_col[j] >= 0) c[static_cast<std::size_t>(x.neg_col[j])] = -cj;
  }
  CoreOut co = simplex_standard(x.A, x.b, c);
  LpResult res;
  res.status = co.status;
  if (co.status == LpStatus::optimal) {
    res.x.assign(x.dim, Rational(0));
    for (std::size_t j = 0; j < x.dim; ++j) {
      res.x[j] = co.z[static_cast<std::size_t>(x.pos_col[j])];
      if (x.neg_col[j] >= 0) res.x[j] -= co.z[static_cast<std::size_t>(x.neg_col[j])];
    }
    res.objective = maximize ? -co.objective : co.objective;
  } else if (co.status == LpStatus::infeasible) {
    // Rebuild multipliers over this system's rows.  Core guarantees
    // y.col <= 0 for every structural column and y.b > 0; negating gives the
    // documented convention, and folded bound rows absorb what is left on
    // their variables' columns.
    const std::size_t me = H.eq_A.size();
    res.farkas_eq.assign(me, Rational(0));
    res.farkas_in.assign(H.in_A.size(), Rational(0));
    for (std::size_t r = 0; r < me; ++r) res.farkas_eq[r] = -co.y[r];
    for (std::size_t k = 0; k < x.kept_ineq.size(); ++k)
      res.farkas_in[x.kept_ineq[k]] = -co.y[me + k];
    for (std::size_t j = 0; j < x.dim; ++j) {
      if (x.bound_row[j] < 0) continue;
      Rational combo = 0;
      for (std::size_t r = 0; r < me; ++r) combo += res.farkas_eq[r] * H.eq_A[r][j];
      for (std::size_t r = 0; r < H.in_A.size(); ++r)
        combo += res.farkas_in[r] * H.in_A[r][j];
      if (combo == 0) continue;
      std::size_t br = static_cast<std::size_t>(x.bound_row[j]);
      res.farkas_in[br] = -combo / H.in_A[br][j];  // in_A[br][j] < 0, combo >= 0
    }
  }
  return res;
}

}  // namespace

LpResult lp_solve(const HPolytope& H, const QVector& objective, bool maximize) {
  check_dims(H);
  if (objective.size() != static_cast<std::size_t>(H.dim))
    throw InvalidInput("lp_solve: objective width mismatch");
  Presolve P = presolve(H);
  LpResult res;
  if (P.decided_infeasible) {
    res.status = LpStatus::infeasible;
    res.farkas_eq = std::move(P.farkas_eq);
    res.farkas_in = std::move(P.farkas_in);
    return res;
  }
  QVector obj_red(P.free_vars.size());
  Rational offset = 0;
  for (std::size_t jj = 0; jj < P.free_vars.size(); ++jj)
    obj_red[jj] = objective[P.free_vars[jj]];
  for (std::size_t j = 0; j < static_cast<std::size_t>(H.dim); ++j)
    if (P.fix_row[j] >= 0) offset += objective[j] * P.fix_val[j];

  LpResult inner = lp_solve_reduced(P.reduced, obj_red, maximize);
  res.status = inner.status;
  if (inner.status == LpStatus::optimal) {
    res.x = P.fix_val;
    for (std::size_t jj = 0; jj < P.free_vars.size(); ++jj)
      res.x[P.free_vars[jj]] = inner.x[jj];
    res.objective = inner.objective + offset;
  } else if (inner.status == LpStatus::infeasible) {
    res.farkas_eq.assign(H.eq_A.size(), Rational(0));
    res.farkas_in.assign(H.in_A.size(), Rational(0));
    for (std::size_t r = 0; r < P.kept_eq.size(); ++r)
      res.farkas_eq[P.kept_eq[r]] = inner.farkas_eq[r];
    for (std::size_t r = 0; r < P.kept_in.size(); ++r)
      res.farkas_in[P.kept_in[r]] = inner.farkas_in[r];
    cancel_via_fixings(H, P, res.farkas_eq, res.farkas_in);
  }
  return res;
}

FeasibilityCertificate lp_feasible(const HPolytope& H) {
  QVector zero(static_cast<std::size_t>(H.dim), Rational(0));
  LpResult r = lp_solve(H, zero, false);
  FeasibilityCertificate cert;
  if (r.status == LpStatus::optimal) {
    cert.feasible = true;
    cert.point = std::move(r.x);
  } else if (r.status == LpStatus::infeasible) {
    cert.feasible = false;
    cert.farkas_eq = std::move(r.farkas_eq);
    cert.farkas_in = std::move(r.farkas_in);
  } else {
    throw VerificationFailure("feasibility LP reported unbounded");
  }
  return cert;
}

bool verify_certificate(const HPolytope& H, const FeasibilityCertificate& cert) {
  check_dims(H);
  const std::size_t dim = static_cast<std::size_t>(H.dim);
  if (cert.feasible) {
    if (cert.point.size() != dim) return false;
    for (std::size_t r = 0; r < H.eq_A.size(); ++r)
      if (dot(H.eq_A[r], cert.point) != H.eq_b[r]) return false;
    for (std::size_t r = 0; r < H.in_A.size(); ++r)
      if (dot(H.in_A[r], cert.point) > H.in_b[r]) return false;
    return true;
  }
  if (cert.farkas_eq.size() != H.eq_A.size() || cert.farkas_in.size() != H.in_A.size())
    return false;
  for (const auto& y : cert.farkas_in)
    if (y < 0) return false;
  for (std::size_t j = 0; j < dim; ++j) {
    Rational combo = 0;
    for (std::size_t r = 0; r < H.eq_A.size(); ++r) combo += cert.farkas_eq[r] * H.eq_A[r][j];
    for (std::size_t r = 0; r < H.in_A.size(); ++r) combo += cert.farkas_in[r] * H.in_A[r][j];
    if (combo != 0) return false;
  }
  Rational rhs = 0;
  for (std::size_t r = 0; r < H.eq_A.size(); ++r) rhs += cert.farkas_eq[r] * H.eq_b[r];
  for (std::size_t r = 0; r < H.in_A.size(); ++r) rhs += cert.farkas_in[r] * H.in_b[r];
  return rhs < 0;
}

QVector lex_min_point(const HPolytope& H) {
  HPolytope work = H;
  QVector point;
  for (int j = 0; j < H.dim; ++j) {
    QVector c(static_cast<std::size_t>(H.dim), Rational(0));
    c[static_cast<std::size_t>(j)] = 1;
    LpResult r = lp_solve(work, c, false);
    if (r.status == LpStatus::infeasible) throw InvalidInput("lex_min_point: infeasible system");
    if (r.status == LpStatus::unbounded) throw Unbounded("lex_min_point: unbounded coordinate");
    point = r.x;
    work.eq_A.push_back(std::move(c));
    work.eq_b.push_back(r.objective);
  }
  return point;
}

ConicResult solve_eq_nonneg(const QMatrix& A, const QVector& b) {
  if (A.size() != b.size()) throw InvalidInput("solve_eq_nonneg: row/rhs mismatch");
  const std::size_t n = A.empty() ? 0 : A[0].size();
  QVector c(n, Rational(0));
  CoreOut co = simplex_standard(A, b, c);
  ConicResult r;
  if (co.status == LpStatus::optimal) {
    r.feasible = true;
    r.z = std::move(co.z);
  } else {
    r.feasible = false;
    r.y = std::move(co.y);
  }
  return r;
}

}  // namespace shiftpoly
