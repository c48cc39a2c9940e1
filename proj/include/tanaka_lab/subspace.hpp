#ifndef TANAKA_LAB_SUBSPACE_HPP
#define TANAKA_LAB_SUBSPACE_HPP

#include <vector>

#include "tanaka_lab/matrix.hpp"

namespace tanaka_lab {

// Linear subspace of Q^n stored as the reduced row echelon basis of its
// row space. Two SubspaceQ values describe the same subspace exactly when
// they compare equal member by member.
class SubspaceQ {
 public:
  explicit SubspaceQ(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static SubspaceQ span(const std::vector<VecQ>& vectors, std::size_t ambient_dim);
  static SubspaceQ full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<VecQ>& basis() const { return basis_; }
  MatrixQ basis_matrix() const { return MatrixQ::from_rows(basis_, ambient_); }

  bool contains(const VecQ& v) const;
  bool contains(const SubspaceQ& other) const;

  // Coordinates of v in the canonical basis; empty optional when v is
  // outside the subspace.
  std::optional<VecQ> coordinates(const VecQ& v) const;

  friend bool operator==(const SubspaceQ& a, const SubspaceQ& b) = default;

 private:
  std::size_t ambient_;
  std::vector<VecQ> basis_;  // rows of the unique RREF, zero rows dropped
};

SubspaceQ subspace_sum(const SubspaceQ& a, const SubspaceQ& b);
SubspaceQ subspace_intersect(const SubspaceQ& a, const SubspaceQ& b);

// Kernel of a matrix as a subspace.
SubspaceQ kernel_subspace(const MatrixQ& m);

// Linear map Q^n -> Q^(n-k) whose kernel is exactly `sub`, expressing the
// quotient by `sub` in the coordinates of a fixed complement: the non-pivot
// coordinates of the subspace's RREF basis, taken in ascending order.
MatrixQ quotient_coords(const SubspaceQ& sub);

}  // namespace tanaka_lab

#endif
