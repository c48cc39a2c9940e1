#include "tanaka_lab/subspace.hpp"

#include <stdexcept>

namespace tanaka_lab {

namespace {

// Pivot column of each RREF basis row (the leading 1).
std::vector<std::size_t> pivot_columns(const std::vector<VecQ>& basis) {
  std::vector<std::size_t> pivots;
  pivots.reserve(basis.size());
  for (const VecQ& row : basis) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

}  // namespace

SubspaceQ SubspaceQ::span(const std::vector<VecQ>& vectors, std::size_t ambient_dim) {
  SubspaceQ s(ambient_dim);
  if (vectors.empty()) return s;
  const RrefResult r = rref(MatrixQ::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.matrix.row(i));
  return s;
}

SubspaceQ SubspaceQ::full(std::size_t ambient_dim) {
  SubspaceQ s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    VecQ e(ambient_dim, Rational(0));
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

std::optional<VecQ> SubspaceQ::coordinates(const VecQ& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  const auto pivots = pivot_columns(basis_);
  VecQ coords(basis_.size());
  VecQ residual = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = residual[pivots[i]];
    if (coords[i] != 0) residual = residual - coords[i] * basis_[i];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool SubspaceQ::contains(const VecQ& v) const {
  return coordinates(v).has_value();
}

bool SubspaceQ::contains(const SubspaceQ& other) const {
  for (const VecQ& row : other.basis_)
    if (!contains(row)) return false;
  return true;
}

SubspaceQ subspace_sum(const SubspaceQ& a, const SubspaceQ& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<VecQ> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return SubspaceQ::span(all, a.ambient_dim());
}

SubspaceQ subspace_intersect(const SubspaceQ& a, const SubspaceQ& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return SubspaceQ(n);
  // x in both spans means x = sum s_i a_i = sum t_j b_j; solve for (s, t).
  MatrixQ m(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m.at(r, da + j) = -b.basis()[j][r];
  std::vector<VecQ> vectors;
  for (const VecQ& k : kernel_basis(m)) {
    VecQ x(n, Rational(0));
    for (std::size_t i = 0; i < da; ++i)
      if (k[i] != 0) x = x + k[i] * a.basis()[i];
    vectors.push_back(std::move(x));
  }
  return SubspaceQ::span(vectors, n);
}

SubspaceQ kernel_subspace(const MatrixQ& m) {
  return SubspaceQ::span(kernel_basis(m), m.cols());
}

MatrixQ quotient_coords(const SubspaceQ& sub) {
  const std::size_t n = sub.ambient_dim();
  const auto pivots = pivot_columns(sub.basis());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  MatrixQ m(n - sub.dim(), n);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    m.at(out, f) = 1;
    for (std::size_t i = 0; i < sub.dim(); ++i) m.at(out, pivots[i]) = -sub.basis()[i][f];
    ++out;
  }
  return m;
}

}  // namespace tanaka_lab
