#ifndef TANAKA_LAB_CATALOG_HPP
#define TANAKA_LAB_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "tanaka_lab/lie_algebra.hpp"

namespace tanaka_lab {

// Built-in algebras, constructed exactly:
//   n_368       (3,6,8) nilpotent model, dims (3,3,2)
//   s_jacobi    depth-7 nilpotent model, dims (2,2,2,2,1,1,1)
//   g2_split    split exceptional 14-dimensional simple algebra
//   g_29        (g2_split + scaling element) acting on a 14-dim abelian ideal
//   cartan_235  (2,3,5) nilpotent model
//   free_36     free nilpotent, step 2, three generators
//   model_367   free_36 extended by one element in degree -3
//   heis_3      Heisenberg algebra
//   pi1_symbol, pi2_symbol   plane-built (3,3,2) symbols
//   a1_symbol, a2_symbol     pair-built (3,3,1,1) symbols
GradedLieAlgebra catalog(const std::string& name);

std::vector<std::string> catalog_names();

// Diagonalizable elements of g_29 whose adjoint action defines the two
// distinguished regradings (index 1 or 2).
VecQ g29_grading_element(int which);

// Subalgebra certificate: the semisimple factor of g_29, for Levi checks.
SubspaceQ g29_levi_subspace();

// Searches for an isomorphism certificate from n_368 onto the given algebra.
// Columns are the images of (x, e0, f0, em1, fm1, eta, fm2, nu) in the target
// basis; nullopt when the construction degenerates (wrong graded dimensions,
// no preferred direction in degree -1, or collapsing brackets). A returned
// matrix is a candidate only; check_iso_certificate is the final authority.
std::optional<MatrixQ> n368_certificate(const GradedLieAlgebra& target);

}  // namespace tanaka_lab

#endif
