#include "permlp/linalg.hpp"

namespace permlp {

std::vector<int> rref(RationalRows& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RationalRows m) { return static_cast<int>(rref(m).size()); }

std::optional<RationalRow> solve_square(RationalRows a, RationalRow b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // A pivot in the appended column means the coefficient matrix is singular
  // (rank rose only through the right-hand side).
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] >= n))
    return std::nullopt;
  RationalRow x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::optional<RationalRows> invert(RationalRows a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rational(0));
    a[i][n + i] = 1;
  }
  auto pivots = rref(a);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RationalRows inv(n, RationalRow(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace permlp
