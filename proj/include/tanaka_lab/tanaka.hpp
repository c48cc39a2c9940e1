#ifndef TANAKA_LAB_TANAKA_HPP
#define TANAKA_LAB_TANAKA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/subspace.hpp"

namespace tanaka_lab {

// One basis element of a nonnegative prolongation level: a degree-k map
// given by one matrix per populated negative degree d of the symbol. The
// matrix sends coordinates of the degree-d component (basis vectors of
// weight d, in index order) to coordinates of the target in degree d+k:
// the symbol component when d+k < 0, the degree-(d+k) level otherwise.
struct LevelMap {
  std::map<int, MatrixQ> comp;
};

struct ProlongationLevel {
  int degree = 0;
  std::vector<LevelMap> maps;
  std::size_t dim() const { return maps.size(); }
};

struct ProlongationResult {
  GradedLieAlgebra symbol;
  // Levels for degrees 0, 1, ..., with trailing zero levels trimmed.
  std::vector<ProlongationLevel> levels;
  // Dimension per degree, symbol components included, zero entries omitted.
  std::map<int, std::size_t> graded_dims;
  std::size_t total_dim = 0;
  // true when the termination rule (depth-many consecutive zero levels)
  // certified that all higher levels vanish; empty when the degree cap was
  // reached first, leaving finiteness undecided.
  std::optional<bool> finite;
  int max_degree = 0;
};

// Basis of the degree-k component of the universal prolongation: the
// solution space of the derivation identity
//   phi([X,Y]) = [phi(X), Y] + [X, phi(Y)]
// over all pairs of symbol basis vectors, for unknown maps of degree k.
// Levels for degrees 0..k-1 must already be computed.
ProlongationLevel prolong_step(const GradedLieAlgebra& symbol,
                               const std::vector<ProlongationLevel>& levels, int k);

// Iterate prolong_step until depth-many consecutive zero levels certify
// termination, or until max_degree. Throws std::invalid_argument unless
// every symbol weight is negative.
ProlongationResult prolong(const GradedLieAlgebra& symbol, int max_degree = 20);

// Structure constants on the direct sum of the symbol and all levels:
// negative-negative brackets from the symbol, level-symbol brackets by
// evaluating the maps, level-level brackets as the unique element of the
// appropriate level acting as the commutator. Throws std::domain_error
// ("no solution" / "non-unique") if that element fails to exist or to be
// unique; either would falsify the level computation.
GradedLieAlgebra assemble(const ProlongationResult& result);

struct StructureReport {
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_dims;
  std::size_t radical_dim = 0;
  std::size_t nilradical_dim = 0;
  std::size_t quotient_dim = 0;  // dimension of the quotient by the radical
  bool levi_checked = false;
  std::string to_text() const;
};

// Killing-form structure summary: the radical as the orthogonal complement
// of the derived algebra, the maximal nilpotent ideal by saturating the
// verified nilpotent ideal [g, radical] + center with radical directions.
StructureReport structure_report(const GradedLieAlgebra& alg);

// Additionally verifies that the given subspace is a bracket-closed
// complement to the radical; throws std::domain_error when it is not.
StructureReport structure_report(const GradedLieAlgebra& alg, const SubspaceQ& levi_certificate);

MatrixQ killing_form(const GradedLieAlgebra& alg);

}  // namespace tanaka_lab

#endif
