#ifndef TANAKA_LAB_POLY_MATRIX_HPP
#define TANAKA_LAB_POLY_MATRIX_HPP

#include <vector>

#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/poly.hpp"

namespace tanaka_lab {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Rank of a matrix over the rational function field, i.e. the rank at a
// generic point. Fraction-free (Bareiss) elimination with exact division,
// so the result is exact.
std::size_t generic_rank(const PolyMatrix& m);

// Evaluate entrywise at a rational point.
MatrixQ eval_matrix(const PolyMatrix& m, const VecQ& point);

}  // namespace tanaka_lab

#endif
