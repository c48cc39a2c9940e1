#ifndef TANAKA_LAB_MATRIX_HPP
#define TANAKA_LAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tanaka_lab/rational.hpp"

namespace tanaka_lab {

// Dense rational matrix, row-major.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> init);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<VecQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  VecQ row(std::size_t r) const;
  VecQ col(std::size_t c) const;
  void set_row(std::size_t r, const VecQ& v);

  MatrixQ transpose() const;
  bool is_zero() const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const Rational& s, const MatrixQ& a);
VecQ operator*(const MatrixQ& a, const VecQ& v);

VecQ operator+(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a, const VecQ& b);
VecQ operator*(const Rational& s, const VecQ& a);
bool is_zero(const VecQ& v);

struct RrefResult {
  MatrixQ matrix;            // the unique reduced row echelon form
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;  // ascending
};

// Gauss-Jordan over the rationals. The reduced form is unique, so it
// doubles as a canonical representative for row spaces.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

Rational determinant(const MatrixQ& m);

// Basis of the right null space {x : m x = 0}, one basis vector per free
// column in ascending column order. Canonical given the RREF.
std::vector<VecQ> kernel_basis(const MatrixQ& m);

std::optional<MatrixQ> inverse(const MatrixQ& m);

struct SolveResult {
  bool consistent = false;
  VecQ particular;            // defined when consistent
  std::vector<VecQ> kernel;   // basis of the homogeneous solutions
};

// Solve m x = rhs exactly, reporting inconsistency instead of guessing.
SolveResult solve(const MatrixQ& m, const VecQ& rhs);

}  // namespace tanaka_lab

#endif
