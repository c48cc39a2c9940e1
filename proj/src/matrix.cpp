#include "tanaka_lab/matrix.hpp"

#include <stdexcept>

namespace tanaka_lab {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VecQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

VecQ MatrixQ::row(std::size_t r) const {
  VecQ v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

VecQ MatrixQ::col(std::size_t c) const {
  VecQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void MatrixQ::set_row(std::size_t r, const VecQ& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  MatrixQ c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  MatrixQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  MatrixQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

VecQ operator*(const MatrixQ& a, const VecQ& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  VecQ r(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && v[j] != 0) r[i] += a.at(i, j) * v[j];
  return r;
}

VecQ operator+(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum length mismatch");
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecQ operator-(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference length mismatch");
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecQ operator*(const Rational& s, const VecQ& a) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RrefResult rref(const MatrixQ& m) {
  RrefResult res{m, 0, {}};
  MatrixQ& a = res.matrix;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    const Rational inv = Rational(1) / a.at(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const MatrixQ& m) {
  return rref(m).rank;
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  MatrixQ a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational inv = Rational(1) / a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return det;
}

std::vector<VecQ> kernel_basis(const MatrixQ& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VecQ v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.matrix.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank != n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

SolveResult solve(const MatrixQ& m, const VecQ& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
  MatrixQ aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const RrefResult r = rref(aug);
  SolveResult out;
  for (std::size_t c : r.pivot_cols)
    if (c == m.cols()) return out;  // pivot in the rhs column: inconsistent
  out.consistent = true;
  out.particular.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    out.particular[r.pivot_cols[i]] = r.matrix.at(i, m.cols());
  out.kernel = kernel_basis(m);
  return out;
}

}  // namespace tanaka_lab
