#ifndef TANAKA_LAB_SYMBOL_ATLAS_HPP
#define TANAKA_LAB_SYMBOL_ATLAS_HPP

#include <string>
#include <vector>

#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/subspace.hpp"

namespace tanaka_lab {

// Two-dimensional plane of traceless 3x3 matrices, given by a basis.
struct MatrixPlane {
  MatrixQ p1, p2;
};

// The two distinguished planes: rank-one nilpotents with a common image
// line, and their transposes (common kernel).
MatrixPlane plane_pi1();
MatrixPlane plane_pi2();

// Fundamental graded nilpotent algebra of type (3,3,2) attached to a plane:
// degree -1 is V = Q^3, degree -2 its dual, degree -3 the plane coordinates.
//   [x, y]       = det[x y .] in V*,
//   [x, xi]      = sum_s xi(P_s x) w_s,
//   all brackets of total degree below -3 vanish.
// Throws std::domain_error when the plane is not 2-dimensional, not
// traceless, or the degree -3 level is not surjectively generated.
GradedLieAlgebra symbol_from_plane(const MatrixPlane& plane, const std::string& name);

// Read a plane back off any graded algebra of type (3,3,2) whose bracket
// Lambda^2 g_{-1} -> g_{-2} is onto. Applied after symbol_from_plane this
// is the identity on the plane.
MatrixPlane plane_from_symbol(const GradedLieAlgebra& alg);

// Certificate from symbol_from_plane(plane_from_symbol(alg)) onto alg
// itself, valid for any algebra accepted by plane_from_symbol.
MatrixQ plane_roundtrip_certificate(const GradedLieAlgebra& alg);

MatrixPlane conjugate_plane(const MatrixPlane& plane, const MatrixQ& g);

// Certificate from symbol_from_plane(a) onto symbol_from_plane(b) induced
// by an invertible g with g a g^-1 = b as subspaces; throws when g does not
// map the planes onto each other.
MatrixQ plane_conjugation_certificate(const MatrixPlane& a, const MatrixPlane& b,
                                      const MatrixQ& g);

// Graded nilpotent algebra of type (3,3,1,1) (growth 3,6,7,8) attached to a
// matrix A acting on W by the stated scalar:
//   [x, y] = det[x y .],  [x, xi] = xi(A^T... ) recorded via a = A^T,
//   [x, w] = psi(x) z with psi spanning the annihilator of W,
//   [xi, eta] forced by the Jacobi identity.
// Throws std::domain_error when A does not act on W by `scaling` or the
// forced degree -4 pairing is not antisymmetric.
GradedLieAlgebra symbol_from_pair(const MatrixQ& a_matrix, const SubspaceQ& w,
                                  const Rational& scaling, const std::string& name);

// The two distinguished pairs.
MatrixQ pair_a1_matrix();     // E_13
MatrixQ pair_a2_matrix();     // diag(1, 1, -2)
SubspaceQ pair_w_space();     // span{e1, e2}

// Traces of all words in the plane basis up to the given length, keyed by
// the word over {1,2} in length-then-lexicographic order.
std::vector<std::pair<std::string, Rational>> trace_word_invariants(const MatrixPlane& plane,
                                                                    int max_len = 6);

}  // namespace tanaka_lab

#endif
