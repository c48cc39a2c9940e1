#ifndef TANAKA_LAB_OCTONION_HPP
#define TANAKA_LAB_OCTONION_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tanaka_lab/forms.hpp"
#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/subspace.hpp"

namespace tanaka_lab {

// Split octonion with coordinates over the ordered basis
// (1, i, j, k, l, li, lj, lk), realized as a pair of quaternions a + l b
// with the product (a + l b)(c + l d) = (a c + d conj(b)) + l (conj(a) d + c b).
struct SplitOctonion {
  VecQ c = VecQ(8, Rational(0));

  SplitOctonion() = default;
  explicit SplitOctonion(VecQ coords);  // throws unless coords.size() == 8

  static SplitOctonion unit(int index);
  // Imaginary element from 7 coordinates over (i, j, k, l, li, lj, lk).
  static SplitOctonion imaginary(const VecQ& v);

  bool is_zero() const;
  bool is_imaginary() const;
  VecQ imaginary_part() const;  // the 7 coordinates after the real one

  friend bool operator==(const SplitOctonion& a, const SplitOctonion& b) = default;
};

SplitOctonion operator+(const SplitOctonion& a, const SplitOctonion& b);
SplitOctonion operator-(const SplitOctonion& a, const SplitOctonion& b);
SplitOctonion operator*(const Rational& s, const SplitOctonion& a);
SplitOctonion operator*(const SplitOctonion& a, const SplitOctonion& b);

SplitOctonion conjugate(const SplitOctonion& x);

// Split quadratic form conj(x) x (signature (4,4)) and its polarization;
// split_q(x, x) == split_q(x).
Rational split_q(const SplitOctonion& x);
Rational split_q(const SplitOctonion& x, const SplitOctonion& y);

// Cross product Im(x y) = (x y - y x) / 2 of imaginary elements; throws
// std::invalid_argument when either argument has a real part.
SplitOctonion cross(const SplitOctonion& x, const SplitOctonion& y);

// Tangent algebra element (base, fiber) with the first order product
// (x0, x1)(y0, y1) = (x0 y0, x0 y1 + x1 y0).
struct TangentOctonion {
  SplitOctonion base, fiber;
  friend bool operator==(const TangentOctonion& a, const TangentOctonion& b) = default;
};

TangentOctonion operator*(const TangentOctonion& a, const TangentOctonion& b);
TangentOctonion operator*(const Rational& s, const TangentOctonion& a);

// Structure tables: table[i][j] holds the coordinates of e_i e_j.
std::vector<std::vector<VecQ>> octonion_table();
std::vector<std::vector<VecQ>> quaternion_table();
std::vector<std::vector<VecQ>> componentwise_r2_table();

// Derivations of the algebra with the given table: all matrices D with
// D(e_i e_j) = D(e_i) e_j + e_i D(e_j). Split octonions give the 14-dim
// exceptional algebra, quaternions 3, the componentwise plane 0.
std::vector<MatrixQ> derivation_algebra(const std::vector<std::vector<VecQ>>& table);

// Basis of the skew algebra of the split form on imaginaries: the 21
// matrices G (E_rs - E_sr) over r < s, G the diagonal of the form.
std::vector<MatrixQ> so_q_basis();

// Null cone membership: imaginary, nonzero, split_q == 0. The tangent
// variant also needs an imaginary fiber with split_q(base, fiber) == 0.
bool in_k(const SplitOctonion& x);
bool in_tk(const TangentOctonion& p);

// Defining equations: split_q(x) on the 7 imaginary coordinates, and the
// pair (split_q(x0), split_q(x0, x1)) on 14.
Poly k_quadric();
std::pair<Poly, Poly> tk_quadrics();

// Deterministic rational samplers. Null points take the shape a + l b
// with a, b nonzero integer imaginary quaternions of equal Euclidean
// length (b a signed permutation of a); tangent samples solve the
// polarization constraint for an integer candidate fiber.
SplitOctonion sample_k_point(std::mt19937_64& rng);
SplitOctonion sample_k_point(std::uint64_t seed);
TangentOctonion sample_tk_point(std::mt19937_64& rng);
TangentOctonion sample_tk_point(std::uint64_t seed);

// Vector valued 1-forms, one component per imaginary coordinate:
// omega0 = x cross dx on Q^7, omega1 = x0 cross dx1 + x1 cross dx0 on
// Q^14, and omega0 pulled back along the base projection.
std::vector<PolyForm> omega0();
std::vector<PolyForm> omega1();
std::vector<PolyForm> pullback_omega0();

// Pfaffian generators: split_q(u, omega0) over basis u for the cone
// system, and the pullbacks plus split_q(A x0, omega1) over the skew
// basis for the prolonged system on the tangent variety.
std::vector<PolyForm> i_delta_generators();
std::vector<PolyForm> i_delta_prime_generators();

// Covectors cutting a plane at one point together with their joint
// kernel; rank(forms) + annihilator.dim() == annihilator.ambient_dim().
struct PointFrameReport {
  VecQ point;
  MatrixQ forms;
  SubspaceQ annihilator;
};

// Rank 3 plane of the cone system at a null point (7 coordinates);
// throws std::invalid_argument off the cone.
PointFrameReport delta_at(const SplitOctonion& x0);

// Rank 7 plane of the prolonged system at a tangent point (14
// coordinates); throws off the tangent variety.
PointFrameReport delta_prime_at(const TangentOctonion& p);

// Derived systems of the prolonged plane: level 1 keeps the generator
// combinations whose differentials vanish on the plane (rank 10), level
// 2 repeats against the enlarged plane and exhausts the tangent space
// (rank 12). Levels other than 1 and 2 throw std::invalid_argument.
PointFrameReport derived_system(const TangentOctonion& p, int level);

// Rank 4 characteristic space: the Euler direction plus vertical shifts
// along the base plane. Verification inserts every characteristic vector
// into every generator differential and confirms the result stays in the
// pointwise span of the system.
struct CauchyReport {
  PointFrameReport frame;
  bool characteristic_verified = false;
};
CauchyReport cauchy_characteristic_at(const TangentOctonion& p);

// The fibration (n(x0) x0, x0 cross x1) with n the sum of squares of the
// eight coordinates. Exact scaling law: psi(t p) = (t^3 base, t^2 fiber),
// the fiber carrying the quadratic homogeneity and the base one extra
// power of t because the norm enters squared to stay rational.
TangentOctonion psi(const TangentOctonion& p);

// Image lies on the cone system (base null, fiber in the base plane,
// x0 cross (x0 cross x1) = 0) and the scaling law holds at t = 2, -3, 1/2.
bool psi_certificate_at(const TangentOctonion& p);

// Symmetry candidates as polynomial fields on Q^14: a derivation acting
// on both slots, a derivation shifted into the fiber, the fiber scaling
// field (0, x1), and the Euler field (x0, x1).
PolyField derivation_lift(const MatrixQ& d);
PolyField vertical_lift(const MatrixQ& d);
PolyField fiber_scaling_field();
PolyField euler_field();

// Pointwise test that the Lie derivative of every prolonged generator
// along the field stays in the pointwise span of the system at sampled
// tangent points. On failure the witness records the point and the
// index of the offending generator.
struct InvarianceReport {
  bool invariant = false;
  VecQ witness_point;
  std::size_t witness_generator = 0;
};
InvarianceReport infinitesimal_invariance(const PolyField& x, std::size_t samples,
                                          std::uint64_t seed);

// Exact form identities of the fiber scaling field: it fixes omega1 and
// kills the pulled back cone form.
bool fiber_scaling_certificate();

// Graded symbol of the prolonged plane modulo its characteristic space
// at one tangent point, extracted from a polynomial frame: weights
// (-1 x3, -2 x3, -3 x2), compared against the (3, 6, 8) flat model by
// fingerprint and by an explicit certificate.
struct QuotientSymbol {
  GradedLieAlgebra symbol;
  bool fingerprint_matches = false;
  MatrixQ certificate;
  bool certificate_verified = false;
};
QuotientSymbol symbol_of_quotient_at(const TangentOctonion& p);

}  // namespace tanaka_lab

#endif
