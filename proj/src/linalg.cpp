#include "linalg.hpp"

#include <stdexcept>

namespace su2curv {

std::optional<std::vector<Rational>> solve(Mat a, std::vector<Rational> b) {
  int n = a.rows(), m = a.cols();
  if (int(b.size()) != n) throw std::invalid_argument("solve: rhs size mismatch");

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (!a(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m; ++j) std::swap(a(p, j), a(row, j));
      std::swap(b[p], b[row]);
    }
    Rational inv = Rational(1) / a(row, col);
    for (int j = col; j < m; ++j) a(row, j) *= inv;
    b[row] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Rational f = a(i, col);
      for (int j = col; j < m; ++j) a(i, j) -= f * a(row, j);
      b[i] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Inconsistent?
  for (int i = row; i < n; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  // Underdetermined?
  if (int(pivot_col_of_row.size()) != m) return std::nullopt;

  std::vector<Rational> x(m);
  for (int i = 0; i < int(pivot_col_of_row.size()); ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace su2curv
