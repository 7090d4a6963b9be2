#include "permlp/simplex.hpp"

#include <cstddef>

#include "permlp/errors.hpp"

namespace permlp {

namespace {

// Dense tableau in standard form: minimize cost over {Ax = b, x >= 0},
// b >= 0, with an artificial variable per row as the starting basis.
// Rows 0..m-1 hold the dictionary, row m the phase-1 cost, row m+1 the
// phase-2 cost; the last column is the right-hand side.
struct Tableau {
  int m, n;  // constraint rows, structural+artificial columns
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;

  void pivot(int row, int col) {
    Rational piv = t[row][col];
    for (auto& v : t[row]) v /= piv;
    for (int r = 0; r < static_cast<int>(t.size()); ++r) {
      if (r == row) continue;
      Rational f = t[r][col];
      if (f == 0) continue;
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
    }
    basis[row] = col;
  }

  // Bland's rule on the given cost row; `allowed(j)` gates entering columns.
  // Returns Optimal when no improving column exists.
  template <typename Allowed>
  LPStatus run(int cost_row, Allowed allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed(j) && t[cost_row][j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LPStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPRawSolution simplex_solve(const LPProblem& p) {
  const int n0 = p.nvars;
  if (static_cast<int>(p.objective.size()) != n0)
    throw dimension_error("objective length does not match variable count");
  for (const auto& row : p.eqA)
    if (static_cast<int>(row.size()) != n0)
      throw dimension_error("equality row length mismatch");
  for (const auto& row : p.inA)
    if (static_cast<int>(row.size()) != n0)
      throw dimension_error("inequality row length mismatch");

  const int m_eq = static_cast<int>(p.eqA.size());
  const int m_in = static_cast<int>(p.inA.size());
  const int m = m_eq + m_in;
  // Column layout: u_0..u_{n0-1}, w_0..w_{n0-1} (x = u - w), then one
  // surplus per inequality, then one artificial per row.
  const int n_struct = 2 * n0 + m_in;
  const int n_total = n_struct + m;

  Tableau tb;
  tb.m = m;
  tb.n = n_total;
  tb.t.assign(m + 2, std::vector<Rational>(n_total + 1, Rational(0)));
  tb.basis.assign(m, 0);

  auto fill_row = [&](int r, const std::vector<Rational>& a, const Rational& b,
                      int surplus_col) {
    bool flip = b < 0;
    Rational s = flip ? Rational(-1) : Rational(1);
    for (int j = 0; j < n0; ++j) {
      tb.t[r][j] = s * a[j];
      tb.t[r][n0 + j] = -s * a[j];
    }
    if (surplus_col >= 0) tb.t[r][surplus_col] = -s;
    tb.t[r][n_total] = s * b;
  };
  for (int r = 0; r < m_eq; ++r) fill_row(r, p.eqA[r], p.eqb[r], -1);
  for (int r = 0; r < m_in; ++r)
    fill_row(m_eq + r, p.inA[r], p.inb[r], 2 * n0 + r);
  for (int r = 0; r < m; ++r) {
    tb.t[r][n_struct + r] = 1;
    tb.basis[r] = n_struct + r;
  }

  // Phase-1 cost: sum of artificials, expressed in terms of the nonbasic
  // columns by subtracting each constraint row.
  const int p1 = m, p2 = m + 1;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= n_total; ++c) tb.t[p1][c] -= tb.t[r][c];
  for (int r = 0; r < m; ++r) tb.t[p1][n_struct + r] = 0;

  // Phase-2 cost: minimize -objective over x = u - w.
  for (int j = 0; j < n0; ++j) {
    tb.t[p2][j] = -p.objective[j];
    tb.t[p2][n0 + j] = p.objective[j];
  }

  LPRawSolution out;
  LPStatus s1 = tb.run(p1, [](int) { return true; });
  (void)s1;  // phase 1 is bounded below by 0, never Unbounded
  if (tb.t[p1][n_total] < 0) {  // minimized sum of artificials, negated form
    out.status = LPStatus::Infeasible;
    return out;
  }
  // Drive remaining zero-valued artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (tb.basis[r] < n_struct) continue;
    int col = -1;
    for (int j = 0; j < n_struct; ++j)
      if (tb.t[r][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) tb.pivot(r, col);
    // Else the row is redundant; its artificial stays basic at value 0 and
    // the phase-2 gate below keeps artificials from re-entering.
  }

  LPStatus s2 =
      tb.run(p2, [&](int j) { return j < n_struct; });
  if (s2 == LPStatus::Unbounded) {
    out.status = LPStatus::Unbounded;
    return out;
  }
  out.status = LPStatus::Optimal;
  out.x.assign(n0, Rational(0));
  for (int r = 0; r < m; ++r) {
    int b = tb.basis[r];
    if (b < n0)
      out.x[b] += tb.t[r][n_total];
    else if (b < 2 * n0)
      out.x[b - n0] -= tb.t[r][n_total];
  }
  Rational obj = 0;
  for (int j = 0; j < n0; ++j) obj += p.objective[j] * out.x[j];
  out.objective_value = obj;
  return out;
}

}  // namespace permlp
