#ifndef TANAKA_LAB_SYMPLECTIFY_HPP
#define TANAKA_LAB_SYMPLECTIFY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/poly.hpp"
#include "tanaka_lab/subspace.hpp"

namespace tanaka_lab {

// Cotangent bundle of the simply connected group of a Lie algebra, in the
// left-invariant trivialization. Functions on the bundle are polynomials in
// the fiber coordinates u_0..u_{n-1} (the quasi-impulses of the basis
// fields), and vector fields are written in the frame
//   (ubar_0, ..., ubar_{n-1}, d_0, ..., d_{n-1}),
// where ubar_a is the Hamiltonian field of u_a and d_b is the fiber
// coordinate field. The calculus is fixed by
//   ubar_a(u_b) = u_{[a,b]},   [ubar_a, ubar_b] = ubar_{[a,b]},
//   [d_b, ubar_a] = sum_c c_{ac}^b d_c,   [d, d] = 0,
// and the symplectic form satisfies sigma(ubar_a, ubar_b) = u_{[a,b]},
// sigma(ubar_a, d_b) = -delta_{ab}, sigma(d, d) = 0.
struct CotangentModel {
  GradedLieAlgebra algebra;
  std::size_t n() const { return algebra.dim(); }
};

// Checks the frame calculus on construction: the commutator rule applied to
// every fiber coordinate must reproduce the derivation rule. Throws
// std::logic_error if the algebra fails this consistency test.
CotangentModel build_model(const GradedLieAlgebra& alg);

// Vector field with polynomial coefficients: coef[a] multiplies ubar_a for
// a < n, and coef[n+b] multiplies d_b.
struct PolyVectorField {
  std::vector<Poly> coef;
};

PolyVectorField zero_field(const CotangentModel& model);
PolyVectorField frame_field(const CotangentModel& model, std::size_t idx);

// Quasi-impulse u_v of an algebra element, a linear fiber polynomial.
Poly quasi_impulse(const CotangentModel& model, const VecQ& v);
// u_{[e_i, e_j]} for basis elements.
Poly bracket_impulse(const CotangentModel& model, std::size_t i, std::size_t j);

Poly apply_field(const CotangentModel& model, const PolyVectorField& x, const Poly& f);
PolyVectorField field_bracket(const CotangentModel& model, const PolyVectorField& x,
                              const PolyVectorField& y);
Poly sigma_pair(const CotangentModel& model, const PolyVectorField& x,
                const PolyVectorField& y);
// Value of the tautological one-form on the field.
Poly tautological_value(const CotangentModel& model, const PolyVectorField& x);

// The covector is given by its n fiber coordinates.
VecQ eval_field(const PolyVectorField& x, const VecQ& lambda);
MatrixQ sigma_matrix_at(const CotangentModel& model, const VecQ& lambda);

// The characteristic field of the rank-3 distribution spanned by the three
// generators: u_{[d2,d3]} ubar_{d1} + u_{[d3,d1]} ubar_{d2} +
// u_{[d1,d2]} ubar_{d3}. Throws std::invalid_argument unless the generators
// and their pairwise brackets span a 6-dimensional subspace
// ("square not 6-dimensional").
PolyVectorField characteristic_field(const CotangentModel& model,
                                     const std::vector<int>& gens);

// Deterministic small-integer covector annihilating the generators but not
// the square of the distribution. Throws std::runtime_error on exhaustion.
VecQ sample_covector(const CotangentModel& model, const std::vector<int>& gens,
                     unsigned seed);

// Tangent space of the annihilator submanifold at the covector, as a
// subspace of the 2n-dimensional frame.
SubspaceQ annihilator_tangent_at(const CotangentModel& model, const std::vector<int>& gens,
                                 const VecQ& lambda);
// The even-contact hyperplane: kernel of the tautological form inside the
// annihilator tangent space.
SubspaceQ xi_at(const CotangentModel& model, const std::vector<int>& gens,
                const VecQ& lambda);
// Skew-orthogonal complement of a subspace taken inside the hyperplane.
SubspaceQ skew_complement_at(const CotangentModel& model, const std::vector<int>& gens,
                             const VecQ& lambda, const SubspaceQ& s);

// All dimensions of flag members are at the cone level (inside the
// cotangent bundle, not its projectivization), so each contains the Euler
// direction; vertical_dims are projectivized (cone dimension minus one).
struct JacobiFlagReport {
  VecQ lambda;
  int k = 0;
  int l = 0;
  int m = 0;
  bool maximal_class = false;
  std::size_t xi_dim = 0;
  // J^(i) for -m <= i <= m+1.
  std::map<int, std::size_t> flag_dims;
  // t_{-m}, ..., t_m with t_i = dim J^(i) - dim J^(i+1).
  std::vector<std::size_t> t;
  // dim of J^(i) cap vertical, projectivized, for 0 <= i <= m+1.
  std::map<int, std::size_t> vertical_dims;
};

// Throws std::invalid_argument when the covector does not annihilate the
// generators, and std::domain_error either when it annihilates the whole
// square or when the flag shape is degenerate ("irregular point, resample").
JacobiFlagReport jacobi_flag_at(const CotangentModel& model, const std::vector<int>& gens,
                                const VecQ& lambda);

struct FlagSurvey {
  int k = 0;
  int l = 0;
  bool maximal_class = false;
  std::size_t outliers = 0;   // samples disagreeing with the modal shape
  std::size_t rejected = 0;   // draws discarded as irregular
  std::vector<JacobiFlagReport> samples;
};
FlagSurvey survey_flags(const CotangentModel& model, const std::vector<int>& gens,
                        int samples, unsigned seed);

// Polynomial vertical fields whose values at the covector span
// J^(level) cap vertical, for level >= 1. Used for bracket computations on
// the nonnegative part of the flag.
std::vector<PolyVectorField> vertical_flag_reps(const CotangentModel& model,
                                                const std::vector<int>& gens,
                                                const VecQ& lambda, int level);

struct JTExtract {
  // Cone-level dimensions of the bracket-respecting filtration, deepest
  // member last (it spans the whole annihilator tangent space).
  std::vector<std::size_t> filtration_dims;
  // Dimensions of the graded quotients modulo the vertical Cauchy
  // characteristic, from degree -1 downward.
  std::vector<std::size_t> graded_dims;
  GradedLieAlgebra algebra;
};
JTExtract jacobi_tanaka_at(const CotangentModel& model, const std::vector<int>& gens,
                           const VecQ& lambda);

// For an extracted algebra with graded dimensions (2,2,2,2,1,1,1): builds an
// adapted frame (kernel lines of the pairings into the two deepest layers,
// chains under the distinguished degree -1 element, and a complement) and
// returns the certificate matrix whose columns are the images of the
// catalog "s_jacobi" basis. Throws std::domain_error when the construction
// degenerates.
MatrixQ adapted_frame_certificate(const GradedLieAlgebra& extracted);

struct AbnormalSample {
  VecQ lambda;
  Rational alpha1, alpha2;
  std::vector<std::size_t> z_dims;  // cone dims of Z^(0), Z^(-1), Z^(-2), Z^(-3)
  bool z_stable = false;            // Z^(-3) equals Z^(-2) as subspaces
  std::size_t base_dim = 0;         // dim of the base projection of Z^(-2)
  bool a1_rank2 = false;
};

struct AbnormalReport {
  // The three derivative identities of the characteristic field on the
  // pairwise quasi-impulses, as polynomial statements.
  bool du12_zero = false;
  bool du31_zero = false;
  bool du23_identity = false;
  // The 2x2 quadratic-form matrix has identically vanishing determinant but
  // is not identically zero.
  bool legendre_det_zero = false;
  bool legendre_nonzero_entry = false;
  std::size_t base_dim_six_count = 0;
  std::vector<AbnormalSample> samples;
};

// Requires a model whose algebra has basis elements named "e0", "f0", "x"
// (the flat (3,6,8) model in its catalog form), taken as the generator
// triple in that order.
AbnormalReport abnormal_report(const CotangentModel& model, int samples, unsigned seed);

}  // namespace tanaka_lab

#endif
