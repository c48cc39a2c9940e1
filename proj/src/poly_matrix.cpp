#include "tanaka_lab/poly_matrix.hpp"

#include <stdexcept>

namespace tanaka_lab {

std::size_t generic_rank(const PolyMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged polynomial matrix");
  PolyMatrix a = m;
  const int n = a.empty() ? 0 : a[0][0].nvars();
  Poly prev = Poly::constant(n, Rational(1));
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    if (p != pivot_row) std::swap(a[p], a[pivot_row]);
    // Fraction-free update: rows below the pivot, columns to the right.
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[pivot_row][col] * a[r][c] - a[r][col] * a[pivot_row][c]).exact_div(prev);
      a[r][col] = Poly(n);
    }
    prev = a[pivot_row][col];
    ++pivot_row;
  }
  return pivot_row;
}

MatrixQ eval_matrix(const PolyMatrix& m, const VecQ& point) {
  MatrixQ out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out.at(r, c) = m[r][c].eval(point);
  return out;
}

}  // namespace tanaka_lab
