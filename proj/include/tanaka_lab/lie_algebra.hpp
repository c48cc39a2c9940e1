#ifndef TANAKA_LAB_LIE_ALGEBRA_HPP
#define TANAKA_LAB_LIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/subspace.hpp"

namespace tanaka_lab {

// Sparse bracket value: basis index -> coefficient.
using SparseVec = std::map<int, Rational>;

// Finite-dimensional Z-graded Lie algebra given by structure constants on
// a fixed basis. Brackets are stored for index pairs i < j only;
// antisymmetry fills in the rest.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(std::string name, std::vector<std::string> basis, std::vector<int> weights);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::map<std::pair<int, int>, SparseVec>& table() const { return table_; }

  int index_of(const std::string& basis_name) const;  // throws when absent

  // Define [e_i, e_j] for i < j. Coefficients equal to zero are dropped.
  void set_bracket(int i, int j, const SparseVec& value);

  // [e_i, e_j] for any order of i, j.
  VecQ bracket_basis(int i, int j) const;
  VecQ bracket(const VecQ& x, const VecQ& y) const;
  MatrixQ ad(const VecQ& x) const;  // y -> [x, y]

  std::vector<int> degrees() const;  // sorted distinct weights
  SubspaceQ graded_component(int degree) const;
  std::size_t graded_dim(int degree) const;
  int depth() const;  // largest i with a nonzero component in degree -i

  VecQ basis_vector(std::size_t i) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<int> weights_;
  std::map<std::pair<int, int>, SparseVec> table_;
};

struct JacobiViolation {
  int i, j, k;
  VecQ defect;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

struct GradingViolation {
  int i, j, target;  // bracket [ei,ej] has a component of the wrong weight
};

struct VerifyReport {
  bool ok = false;
  std::vector<JacobiViolation> jacobi;
  std::vector<GradingViolation> grading;
  std::string to_text(const GradedLieAlgebra& alg) const;
};

// Check the Jacobi identity on every basis triple and weight additivity on
// every stored bracket. Reports every violation rather than the first.
VerifyReport verify(const GradedLieAlgebra& alg);

// Per-level surjectivity of bracketing with the degree -1 component:
// level j holds when [g_{-1}, g_{-j}] spans g_{-j-1}. An algebra generated
// in degree -1 passes every level; a symbol with extra generators in lower
// degree fails some level. Diagnostic, not part of validity.
struct SurjectivityReport {
  bool all = true;
  std::vector<std::pair<int, bool>> levels;  // (j, surjective onto degree -j-1)
};
SurjectivityReport bracket_surjectivity(const GradedLieAlgebra& alg);

// Dimensions of the weak derived flag of the distribution spanned by the
// given generators: D^{-1} = span, D^{-i} = D^{1-i} + [D^{-1}, D^{1-i}],
// recorded until stationary.
std::vector<std::size_t> growth_vector(const GradedLieAlgebra& alg,
                                       const std::vector<VecQ>& generators);
// Same, generated by the degree -1 component.
std::vector<std::size_t> growth_vector(const GradedLieAlgebra& alg);

// {x in V : [x, V] is contained in V}.
SubspaceQ cauchy_characteristic(const GradedLieAlgebra& alg, const SubspaceQ& v);

// Smallest bracket-closed subspace containing the seeds.
SubspaceQ subalgebra_generated(const GradedLieAlgebra& alg, const std::vector<VecQ>& seeds);

// Lie algebra structure induced on a bracket-closed graded subspace. Each
// canonical basis row must be homogeneous; throws std::domain_error
// otherwise or when the subspace is not closed.
GradedLieAlgebra subalgebra_structure(const GradedLieAlgebra& alg, const SubspaceQ& sub,
                                      const std::string& name);

// New weights from a diagonal adjoint action: requires [h, e_i] to be an
// integer multiple of e_i for every basis vector; throws std::domain_error
// ("not a grading element") otherwise.
std::vector<int> regrade_by_element(const GradedLieAlgebra& alg, const VecQ& h);

// Restriction to the strictly negative part of the given weight vector.
// Throws std::domain_error when that span is not bracket-closed.
GradedLieAlgebra negative_part(const GradedLieAlgebra& alg, const std::vector<int>& new_weights,
                               const std::string& name);

// Isomorphism-invariant summary used to distinguish symbols. All fields
// are preserved by graded isomorphisms.
struct Fingerprint {
  std::vector<std::pair<int, std::size_t>> graded_dims;  // degree -> dim, ascending
  std::vector<std::size_t> growth;
  std::size_t pair_rank_12 = 0;  // rank of Lambda^2 g_{-1} -> g_{-2}
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  std::size_t generic_ad_rank = 0;  // of ad at a generic point of the algebra
  // For j = 1..depth: dim of {v in g_{-1} : [v, g_{-j}] = 0} and the
  // generic rank of ad restricted to that stratum.
  std::vector<std::size_t> annihilator_strata;
  std::vector<std::size_t> strata_generic_ranks;
  // For j = 1..depth-1: rank of the pairing g_{-1} x g_{-j} -> g_{-j-1}.
  std::vector<std::size_t> pairing_ranks;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;
  std::string to_text() const;
};

Fingerprint fingerprint(const GradedLieAlgebra& alg);

// True when cert (columns = images of a's basis vectors in b's coordinates)
// is an invertible weight-preserving linear map with
// cert([x,y]_a) = [cert x, cert y]_b on all basis pairs.
bool check_iso_certificate(const GradedLieAlgebra& a, const GradedLieAlgebra& b,
                           const MatrixQ& cert);

// Kernel of ad restricted to the full algebra.
SubspaceQ center(const GradedLieAlgebra& alg);

std::vector<SubspaceQ> derived_series(const GradedLieAlgebra& alg);
std::vector<SubspaceQ> lower_central_series(const GradedLieAlgebra& alg);

// Subspace spanned by brackets of two subspaces.
SubspaceQ bracket_span(const GradedLieAlgebra& alg, const SubspaceQ& a, const SubspaceQ& b);

}  // namespace tanaka_lab

#endif
