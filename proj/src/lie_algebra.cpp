#include "tanaka_lab/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tanaka_lab/poly_matrix.hpp"

namespace tanaka_lab {

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::vector<std::string> basis,
                                   std::vector<int> weights)
    : name_(std::move(name)), basis_(std::move(basis)), weights_(std::move(weights)) {
  if (basis_.size() != weights_.size())
    throw std::invalid_argument("basis/weight length mismatch");
}

int GradedLieAlgebra::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == basis_name) return static_cast<int>(i);
  throw std::invalid_argument("unknown basis vector: " + basis_name);
}

void GradedLieAlgebra::set_bracket(int i, int j, const SparseVec& value) {
  if (i >= j) throw std::invalid_argument("set_bracket requires i < j");
  SparseVec cleaned;
  for (const auto& [k, c] : value)
    if (c != 0) cleaned.emplace(k, c);
  if (cleaned.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(cleaned);
}

VecQ GradedLieAlgebra::bracket_basis(int i, int j) const {
  VecQ out(dim(), Rational(0));
  if (i == j) return out;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const auto it = table_.find({i, j});
  if (it != table_.end())
    for (const auto& [k, c] : it->second) out[k] = flip ? -c : c;
  return out;
}

VecQ GradedLieAlgebra::bracket(const VecQ& x, const VecQ& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("bracket operand dimension mismatch");
  VecQ out(dim(), Rational(0));
  for (const auto& [ij, val] : table_) {
    const auto [i, j] = ij;
    const Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == 0) continue;
    for (const auto& [k, c] : val) out[k] += coeff * c;
  }
  return out;
}

MatrixQ GradedLieAlgebra::ad(const VecQ& x) const {
  MatrixQ m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    VecQ ej(dim(), Rational(0));
    ej[j] = 1;
    const VecQ col = bracket(x, ej);
    for (std::size_t r = 0; r < dim(); ++r) m.at(r, j) = col[r];
  }
  return m;
}

std::vector<int> GradedLieAlgebra::degrees() const {
  std::set<int> s(weights_.begin(), weights_.end());
  return {s.begin(), s.end()};
}

SubspaceQ GradedLieAlgebra::graded_component(int degree) const {
  std::vector<VecQ> gens;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (weights_[i] != degree) continue;
    VecQ e(dim(), Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return SubspaceQ::span(gens, dim());
}

std::size_t GradedLieAlgebra::graded_dim(int degree) const {
  std::size_t n = 0;
  for (int w : weights_)
    if (w == degree) ++n;
  return n;
}

int GradedLieAlgebra::depth() const {
  int d = 0;
  for (int w : weights_) d = std::min(d, w);
  return -d;
}

VecQ GradedLieAlgebra::basis_vector(std::size_t i) const {
  VecQ e(dim(), Rational(0));
  e[i] = 1;
  return e;
}

std::string VerifyReport::to_text(const GradedLieAlgebra& alg) const {
  std::ostringstream out;
  if (ok) {
    out << alg.name() << ": valid graded Lie algebra (" << alg.dim() << "-dimensional)\n";
    return out.str();
  }
  const auto& names = alg.basis_names();
  for (const auto& v : jacobi) {
    out << "jacobi defect on (" << names[v.i] << ", " << names[v.j] << ", " << names[v.k]
        << "):";
    for (std::size_t t = 0; t < v.defect.size(); ++t)
      if (v.defect[t] != 0) out << " " << to_string(v.defect[t]) << "*" << names[t];
    out << "\n";
  }
  for (const auto& g : grading)
    out << "weight mismatch in [" << names[g.i] << ", " << names[g.j] << "]: component "
        << names[g.target] << " has weight " << alg.weights()[g.target] << ", expected "
        << alg.weights()[g.i] + alg.weights()[g.j] << "\n";
  return out.str();
}

VerifyReport verify(const GradedLieAlgebra& alg) {
  VerifyReport rep;
  const int n = static_cast<int>(alg.dim());
  for (const auto& [ij, val] : alg.table()) {
    const auto [i, j] = ij;
    for (const auto& [k, c] : val) {
      (void)c;
      if (alg.weights()[k] != alg.weights()[i] + alg.weights()[j])
        rep.grading.push_back({i, j, k});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const VecQ d = alg.bracket(alg.bracket_basis(i, j), alg.basis_vector(k)) +
                       alg.bracket(alg.bracket_basis(j, k), alg.basis_vector(i)) +
                       alg.bracket(alg.bracket_basis(k, i), alg.basis_vector(j));
        if (!is_zero(d)) rep.jacobi.push_back({i, j, k, d});
      }
  rep.ok = rep.jacobi.empty() && rep.grading.empty();
  return rep;
}

SurjectivityReport bracket_surjectivity(const GradedLieAlgebra& alg) {
  SurjectivityReport rep;
  for (int j = 1; j < alg.depth(); ++j) {
    const SubspaceQ target = alg.graded_component(-j - 1);
    if (target.dim() == 0) continue;
    const SubspaceQ image =
        bracket_span(alg, alg.graded_component(-1), alg.graded_component(-j));
    const bool onto = image.contains(target);
    rep.levels.emplace_back(j, onto);
    rep.all = rep.all && onto;
  }
  return rep;
}

SubspaceQ bracket_span(const GradedLieAlgebra& alg, const SubspaceQ& a, const SubspaceQ& b) {
  std::vector<VecQ> gens;
  for (const VecQ& x : a.basis())
    for (const VecQ& y : b.basis()) gens.push_back(alg.bracket(x, y));
  return SubspaceQ::span(gens, alg.dim());
}

std::vector<std::size_t> growth_vector(const GradedLieAlgebra& alg,
                                       const std::vector<VecQ>& generators) {
  const SubspaceQ d1 = SubspaceQ::span(generators, alg.dim());
  std::vector<std::size_t> growth{d1.dim()};
  SubspaceQ current = d1;
  while (true) {
    const SubspaceQ next = subspace_sum(current, bracket_span(alg, d1, current));
    if (next.dim() == current.dim()) break;
    growth.push_back(next.dim());
    current = next;
  }
  return growth;
}

std::vector<std::size_t> growth_vector(const GradedLieAlgebra& alg) {
  return growth_vector(alg, alg.graded_component(-1).basis());
}

SubspaceQ cauchy_characteristic(const GradedLieAlgebra& alg, const SubspaceQ& v) {
  if (v.dim() == 0) return v;
  const MatrixQ q = quotient_coords(v);
  // Unknown x = sum s_l b_l; require q * [x, b_m] = 0 for every m.
  const std::size_t s = v.dim();
  MatrixQ sys(v.dim() * q.rows(), s);
  std::size_t row = 0;
  for (const VecQ& bm : v.basis()) {
    for (std::size_t l = 0; l < s; ++l) {
      const VecQ img = q * alg.bracket(v.basis()[l], bm);
      for (std::size_t r = 0; r < q.rows(); ++r) sys.at(row + r, l) = img[r];
    }
    row += q.rows();
  }
  std::vector<VecQ> gens;
  for (const VecQ& k : kernel_basis(sys)) {
    VecQ x(alg.dim(), Rational(0));
    for (std::size_t l = 0; l < s; ++l)
      if (k[l] != 0) x = x + k[l] * v.basis()[l];
    gens.push_back(std::move(x));
  }
  return SubspaceQ::span(gens, alg.dim());
}

SubspaceQ subalgebra_generated(const GradedLieAlgebra& alg, const std::vector<VecQ>& seeds) {
  SubspaceQ s = SubspaceQ::span(seeds, alg.dim());
  while (true) {
    const SubspaceQ next = subspace_sum(s, bracket_span(alg, s, s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

GradedLieAlgebra subalgebra_structure(const GradedLieAlgebra& alg, const SubspaceQ& sub,
                                      const std::string& name) {
  const auto& rows = sub.basis();
  std::vector<int> weights;
  std::vector<std::string> names;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int w = 0;
    bool seen = false;
    for (std::size_t c = 0; c < alg.dim(); ++c) {
      if (rows[r][c] == 0) continue;
      if (!seen) {
        w = alg.weights()[c];
        seen = true;
      } else if (alg.weights()[c] != w) {
        throw std::domain_error("subalgebra basis row is not homogeneous");
      }
    }
    weights.push_back(w);
    names.push_back(name + "_b" + std::to_string(r));
  }
  GradedLieAlgebra out(name, names, weights);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto coords = sub.coordinates(alg.bracket(rows[i], rows[j]));
      if (!coords) throw std::domain_error("subspace is not bracket-closed");
      SparseVec val;
      for (std::size_t k = 0; k < coords->size(); ++k)
        if ((*coords)[k] != 0) val[static_cast<int>(k)] = (*coords)[k];
      out.set_bracket(static_cast<int>(i), static_cast<int>(j), val);
    }
  return out;
}

std::vector<int> regrade_by_element(const GradedLieAlgebra& alg, const VecQ& h) {
  std::vector<int> weights(alg.dim(), 0);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const VecQ img = alg.bracket(h, alg.basis_vector(i));
    const Rational lambda = img[i];
    if (!is_integer(lambda) || !is_zero(img - lambda * alg.basis_vector(i)))
      throw std::domain_error("not a grading element: ad is not integer-diagonal on basis "
                              "vector " + alg.basis_names()[i]);
    weights[i] = static_cast<int>(to_integer(lambda));
  }
  return weights;
}

GradedLieAlgebra negative_part(const GradedLieAlgebra& alg, const std::vector<int>& new_weights,
                               const std::string& name) {
  if (new_weights.size() != alg.dim())
    throw std::invalid_argument("weight vector length mismatch");
  std::vector<int> keep;
  std::vector<int> where(alg.dim(), -1);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (new_weights[i] < 0) {
      where[i] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(i));
    }
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i : keep) {
    names.push_back(alg.basis_names()[i]);
    weights.push_back(new_weights[i]);
  }
  GradedLieAlgebra out(name, names, weights);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const VecQ val = alg.bracket_basis(keep[a], keep[b]);
      SparseVec sv;
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (val[k] == 0) continue;
        if (where[k] < 0)
          throw std::domain_error("negative part is not bracket-closed: [" +
                                  alg.basis_names()[keep[a]] + ", " +
                                  alg.basis_names()[keep[b]] + "] leaves the span");
        sv[where[k]] = val[k];
      }
      out.set_bracket(static_cast<int>(a), static_cast<int>(b), sv);
    }
  return out;
}

SubspaceQ center(const GradedLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  MatrixQ sys(n * n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      const VecQ img = alg.bracket(alg.basis_vector(c), alg.basis_vector(j));
      for (std::size_t r = 0; r < n; ++r) sys.at(j * n + r, c) = img[r];
    }
  }
  return kernel_subspace(sys);
}

std::vector<SubspaceQ> derived_series(const GradedLieAlgebra& alg) {
  std::vector<SubspaceQ> series{SubspaceQ::full(alg.dim())};
  while (true) {
    const SubspaceQ next = bracket_span(alg, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
  }
  return series;
}

std::vector<SubspaceQ> lower_central_series(const GradedLieAlgebra& alg) {
  std::vector<SubspaceQ> series{SubspaceQ::full(alg.dim())};
  while (true) {
    const SubspaceQ next = bracket_span(alg, series.front(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(next);
  }
  return series;
}

namespace {

// Generic rank of ad on the span of the given vectors: entries of
// sum_i s_i ad(u_i) are linear polynomials in the parameters s.
std::size_t generic_ad_rank_on(const GradedLieAlgebra& alg, const std::vector<VecQ>& span_basis) {
  if (span_basis.empty()) return 0;
  const int nparams = static_cast<int>(span_basis.size());
  const std::size_t n = alg.dim();
  PolyMatrix m(n, std::vector<Poly>(n, Poly(nparams)));
  for (int p = 0; p < nparams; ++p) {
    const MatrixQ adp = alg.ad(span_basis[p]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (adp.at(r, c) != 0) {
          Mono mono(nparams, 0);
          mono[p] = 1;
          m[r][c].add_term(mono, adp.at(r, c));
        }
  }
  return generic_rank(m);
}

}  // namespace

Fingerprint fingerprint(const GradedLieAlgebra& alg) {
  Fingerprint f;
  for (int d : alg.degrees()) f.graded_dims.emplace_back(d, alg.graded_dim(d));
  f.growth = growth_vector(alg);
  // Rank of the bracket pairing out of degree -1.
  {
    const SubspaceQ g1 = alg.graded_component(-1);
    std::vector<VecQ> images;
    for (std::size_t i = 0; i < g1.dim(); ++i)
      for (std::size_t j = i + 1; j < g1.dim(); ++j)
        images.push_back(alg.bracket(g1.basis()[i], g1.basis()[j]));
    f.pair_rank_12 = SubspaceQ::span(images, alg.dim()).dim();
  }
  f.center_dim = center(alg).dim();
  for (const SubspaceQ& s : derived_series(alg)) f.derived_dims.push_back(s.dim());
  for (const SubspaceQ& s : lower_central_series(alg)) f.lower_central_dims.push_back(s.dim());
  {
    std::vector<VecQ> all;
    for (std::size_t i = 0; i < alg.dim(); ++i) all.push_back(alg.basis_vector(i));
    f.generic_ad_rank = generic_ad_rank_on(alg, all);
  }
  const SubspaceQ g1 = alg.graded_component(-1);
  for (int j = 1; j <= alg.depth(); ++j) {
    const SubspaceQ gj = alg.graded_component(-j);
    // {v in g_{-1} : [v, g_{-j}] = 0}
    MatrixQ sys(alg.dim() * gj.dim(), g1.dim());
    std::size_t row = 0;
    for (const VecQ& y : gj.basis()) {
      for (std::size_t l = 0; l < g1.dim(); ++l) {
        const VecQ img = alg.bracket(g1.basis()[l], y);
        for (std::size_t r = 0; r < alg.dim(); ++r) sys.at(row + r, l) = img[r];
      }
      row += alg.dim();
    }
    std::vector<VecQ> stratum;
    for (const VecQ& k : kernel_basis(sys)) {
      VecQ x(alg.dim(), Rational(0));
      for (std::size_t l = 0; l < g1.dim(); ++l)
        if (k[l] != 0) x = x + k[l] * g1.basis()[l];
      stratum.push_back(std::move(x));
    }
    f.annihilator_strata.push_back(stratum.size());
    f.strata_generic_ranks.push_back(generic_ad_rank_on(alg, stratum));
  }
  for (int j = 1; j < alg.depth(); ++j) {
    const SubspaceQ gj = alg.graded_component(-j);
    std::vector<VecQ> images;
    for (const VecQ& x : g1.basis())
      for (const VecQ& y : gj.basis()) images.push_back(alg.bracket(x, y));
    f.pairing_ranks.push_back(SubspaceQ::span(images, alg.dim()).dim());
  }
  return f;
}

std::string Fingerprint::to_text() const {
  std::ostringstream out;
  const auto list = [&out](const char* label, const std::vector<std::size_t>& v) {
    out << label << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ") ";
  };
  out << "graded(";
  for (std::size_t i = 0; i < graded_dims.size(); ++i)
    out << (i ? "," : "") << graded_dims[i].first << ":" << graded_dims[i].second;
  out << ") ";
  list("growth", growth);
  out << "pair12=" << pair_rank_12 << " center=" << center_dim << " ";
  list("derived", derived_dims);
  list("lcs", lower_central_dims);
  out << "adrank=" << generic_ad_rank << " ";
  list("strata", annihilator_strata);
  list("strata_ranks", strata_generic_ranks);
  list("pairing", pairing_ranks);
  return out.str();
}

bool check_iso_certificate(const GradedLieAlgebra& a, const GradedLieAlgebra& b,
                           const MatrixQ& cert) {
  if (a.dim() != b.dim()) return false;
  if (cert.rows() != b.dim() || cert.cols() != a.dim()) return false;
  if (!inverse(cert).has_value()) return false;
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t r = 0; r < b.dim(); ++r)
      if (cert.at(r, j) != 0 && b.weights()[r] != a.weights()[j]) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const VecQ lhs = cert * a.bracket_basis(static_cast<int>(i), static_cast<int>(j));
      const VecQ rhs = b.bracket(cert.col(i), cert.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace tanaka_lab
