#include "tanaka_lab/tanaka.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tanaka_lab {

namespace {

// Basis indices of the algebra grouped by weight, plus each index's
// position within its group.
struct Slots {
  std::map<int, std::vector<int>> by_degree;
  std::vector<int> pos;

  explicit Slots(const GradedLieAlgebra& alg) : pos(alg.dim(), -1) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
      by_degree[alg.weights()[i]].push_back(static_cast<int>(i));
    for (const auto& [d, idxs] : by_degree)
      for (std::size_t p = 0; p < idxs.size(); ++p) pos[idxs[p]] = static_cast<int>(p);
  }

  std::size_t dim(int degree) const {
    const auto it = by_degree.find(degree);
    return it == by_degree.end() ? 0 : it->second.size();
  }
};

}  // namespace

ProlongationLevel prolong_step(const GradedLieAlgebra& sym,
                               const std::vector<ProlongationLevel>& levels, int k) {
  if (static_cast<int>(levels.size()) < k)
    throw std::invalid_argument("prolong_step requires all lower levels");
  const std::size_t n = sym.dim();
  const Slots slot(sym);

  const auto target_dim = [&](int e) -> std::size_t {
    if (e < 0) return slot.dim(e);
    return levels[e].dim();
  };

  // Unknown map components phi: m_d -> T_{d+k}, flattened source-major.
  struct Comp {
    int d = 0;
    std::size_t sdim = 0, tdim = 0, offset = 0;
  };
  std::vector<Comp> comps;
  std::size_t nunk = 0;
  for (const auto& [d, idxs] : slot.by_degree) {
    const std::size_t tdim = target_dim(d + k);
    if (tdim == 0) continue;
    comps.push_back({d, idxs.size(), tdim, nunk});
    nunk += idxs.size() * tdim;
  }
  ProlongationLevel out;
  out.degree = k;
  if (nunk == 0) return out;

  // Equation rows: one block per basis pair (i, j), valued in degree
  // w_i + w_j + k (ambient coordinates when negative, level coefficients
  // otherwise; empty value spaces impose nothing).
  struct Pair {
    int i = 0, j = 0;
    std::size_t vdim = 0, row = 0;
  };
  std::vector<Pair> pairs;
  std::size_t nrows = 0;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) {
      const int e = sym.weights()[i] + sym.weights()[j] + k;
      const std::size_t vdim = e < 0 ? n : levels[e].dim();
      if (vdim == 0) continue;
      pairs.push_back({i, j, vdim, nrows});
      nrows += vdim;
    }

  // Value of [t-hat, e_j] where t-hat is the target basis element of a
  // component into degree e = d + k, in the coordinates of degree e + w_j.
  const auto target_bracket = [&](int e, std::size_t t, int j, std::size_t vdim) -> VecQ {
    VecQ val(vdim, Rational(0));
    if (e < 0) {
      const VecQ br = sym.bracket_basis(slot.by_degree.at(e)[t], j);
      for (std::size_t r = 0; r < n; ++r) val[r] = br[r];
      return val;
    }
    const LevelMap& psi = levels[e].maps[t];
    const int d = sym.weights()[j];
    const auto itc = psi.comp.find(d);
    if (itc == psi.comp.end()) return val;
    const MatrixQ& mat = itc->second;
    const int e2 = d + e;
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      const Rational c = mat.at(r, static_cast<std::size_t>(slot.pos[j]));
      if (c == 0) continue;
      if (e2 < 0)
        val[slot.by_degree.at(e2)[r]] = c;
      else
        val[r] = c;
    }
    return val;
  };

  MatrixQ sys(nrows, nunk);
  for (const Comp& c : comps) {
    const auto& src = slot.by_degree.at(c.d);
    for (std::size_t s = 0; s < c.sdim; ++s)
      for (std::size_t t = 0; t < c.tdim; ++t) {
        const std::size_t col = c.offset + s * c.tdim + t;
        for (const Pair& p : pairs) {
          // phi([e_i, e_j]): the component of the bracket along e_src.
          if (sym.weights()[p.i] + sym.weights()[p.j] == c.d) {
            const Rational coef = sym.bracket_basis(p.i, p.j)[src[s]];
            if (coef != 0) {
              const int e = c.d + k;
              const std::size_t row =
                  p.row + (e < 0 ? static_cast<std::size_t>(slot.by_degree.at(e)[t]) : t);
              sys.at(row, col) += coef;
            }
          }
          // -[phi(e_i), e_j] and +[phi(e_j), e_i].
          if (p.i == src[s]) {
            const VecQ val = target_bracket(c.d + k, t, p.j, p.vdim);
            for (std::size_t r = 0; r < p.vdim; ++r)
              if (val[r] != 0) sys.at(p.row + r, col) -= val[r];
          }
          if (p.j == src[s]) {
            const VecQ val = target_bracket(c.d + k, t, p.i, p.vdim);
            for (std::size_t r = 0; r < p.vdim; ++r)
              if (val[r] != 0) sys.at(p.row + r, col) += val[r];
          }
        }
      }
  }

  for (const VecQ& ker : kernel_basis(sys)) {
    LevelMap phi;
    for (const Comp& c : comps) {
      MatrixQ mat(c.tdim, c.sdim);
      for (std::size_t s = 0; s < c.sdim; ++s)
        for (std::size_t t = 0; t < c.tdim; ++t) mat.at(t, s) = ker[c.offset + s * c.tdim + t];
      phi.comp.emplace(c.d, std::move(mat));
    }
    out.maps.push_back(std::move(phi));
  }
  return out;
}

ProlongationResult prolong(const GradedLieAlgebra& symbol, int max_degree) {
  for (int w : symbol.weights())
    if (w >= 0)
      throw std::invalid_argument("prolongation requires a negatively graded symbol");
  ProlongationResult res;
  res.symbol = symbol;
  res.max_degree = max_degree;
  const int mu = symbol.depth();
  int zero_run = 0;
  for (int k = 0; k <= max_degree; ++k) {
    res.levels.push_back(prolong_step(symbol, res.levels, k));
    zero_run = res.levels.back().dim() == 0 ? zero_run + 1 : 0;
    if (zero_run >= mu) {
      res.finite = true;
      break;
    }
  }
  while (!res.levels.empty() && res.levels.back().dim() == 0) res.levels.pop_back();
  for (std::size_t i = 0; i < symbol.dim(); ++i) ++res.graded_dims[symbol.weights()[i]];
  for (const ProlongationLevel& lvl : res.levels)
    if (lvl.dim() > 0) res.graded_dims[lvl.degree] = lvl.dim();
  res.total_dim = symbol.dim();
  for (const ProlongationLevel& lvl : res.levels) res.total_dim += lvl.dim();
  return res;
}

GradedLieAlgebra assemble(const ProlongationResult& res) {
  const GradedLieAlgebra& m = res.symbol;
  const std::size_t n = m.dim();
  const int nlevels = static_cast<int>(res.levels.size());
  const Slots slot(m);

  std::vector<std::string> names = m.basis_names();
  std::vector<int> weights = m.weights();
  std::vector<std::size_t> offset(nlevels, 0);
  std::size_t dim = n;
  for (int a = 0; a < nlevels; ++a) {
    offset[a] = dim;
    for (std::size_t r = 0; r < res.levels[a].dim(); ++r) {
      names.push_back("p" + std::to_string(a) + "_" + std::to_string(r));
      weights.push_back(a);
    }
    dim += res.levels[a].dim();
  }
  GradedLieAlgebra alg(m.name() + "_prolonged", names, weights);
  for (const auto& [ij, val] : m.table()) alg.set_bracket(ij.first, ij.second, val);

  const auto space_dim = [&](int e) -> std::size_t {
    if (e < 0) return n;
    return e < nlevels ? res.levels[e].dim() : 0;
  };
  // Homogeneous prolongation element: ambient coordinates at negative
  // degrees, level coefficients at nonnegative ones.
  struct Element {
    int degree = 0;
    VecQ val;
  };
  const auto zero_elem = [&](int e) { return Element{e, VecQ(space_dim(e), Rational(0))}; };

  // psi_{a,r} applied to an ambient vector of homogeneous degree d < 0.
  const auto apply_map = [&](int a, std::size_t r, int d, const VecQ& v) -> Element {
    Element out = zero_elem(d + a);
    const auto itc = res.levels[a].maps[r].comp.find(d);
    if (itc == res.levels[a].maps[r].comp.end()) return out;
    const MatrixQ& mat = itc->second;
    const auto& idxs = slot.by_degree.at(d);
    for (std::size_t s = 0; s < idxs.size(); ++s) {
      const Rational c = v[idxs[s]];
      if (c == 0) continue;
      for (std::size_t t = 0; t < mat.rows(); ++t) {
        if (mat.at(t, s) == 0) continue;
        if (d + a < 0)
          out.val[slot.by_degree.at(d + a)[t]] += c * mat.at(t, s);
        else
          out.val[t] += c * mat.at(t, s);
      }
    }
    return out;
  };

  // Level-symbol brackets.
  for (int a = 0; a < nlevels; ++a)
    for (std::size_t r = 0; r < res.levels[a].dim(); ++r)
      for (std::size_t j = 0; j < n; ++j) {
        const Element val = apply_map(a, r, m.weights()[j], m.basis_vector(j));
        SparseVec sv;  // [e_j, psi] = -psi(e_j)
        for (std::size_t t = 0; t < val.val.size(); ++t) {
          if (val.val[t] == 0) continue;
          const std::size_t idx = val.degree < 0 ? t : offset[val.degree] + t;
          sv[static_cast<int>(idx)] = -val.val[t];
        }
        alg.set_bracket(static_cast<int>(j), static_cast<int>(offset[a] + r), sv);
      }

  // Level-level brackets, memoized as coefficient vectors over the level
  // of the total degree, solved in increasing total degree so that the
  // recursion below only consults finished entries.
  std::map<std::pair<int, int>, std::vector<std::vector<VecQ>>> memo;
  const auto level_bracket = [&](int a, std::size_t r, int b, std::size_t s) -> VecQ {
    if (a <= b) return memo.at({a, b})[r][s];
    VecQ v = memo.at({b, a})[s][r];
    for (Rational& c : v) c = -c;
    return v;
  };
  const auto bracket_with = [&](int a, std::size_t r, const Element& v) -> Element {
    if (v.degree < 0) return apply_map(a, r, v.degree, v.val);
    Element out = zero_elem(a + v.degree);
    for (std::size_t s = 0; s < v.val.size(); ++s) {
      if (v.val[s] == 0) continue;
      const VecQ br = level_bracket(a, r, v.degree, s);
      for (std::size_t t = 0; t < br.size(); ++t) out.val[t] += v.val[s] * br[t];
    }
    return out;
  };

  for (int tot = 0; tot <= 2 * (nlevels - 1); ++tot) {
    // Action matrix of the degree-tot level on the symbol, shared by all
    // pairs with this total degree.
    const std::size_t tdim = space_dim(tot);
    std::vector<std::size_t> row_at(n, 0);
    std::size_t nrows = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row_at[j] = nrows;
      nrows += space_dim(m.weights()[j] + tot);
    }
    MatrixQ action(nrows, tdim);
    for (std::size_t u = 0; u < tdim; ++u)
      for (std::size_t j = 0; j < n; ++j) {
        const Element val = apply_map(tot, u, m.weights()[j], m.basis_vector(j));
        for (std::size_t t = 0; t < val.val.size(); ++t) action.at(row_at[j] + t, u) = val.val[t];
      }

    for (int a = 0; a <= tot / 2; ++a) {
      const int b = tot - a;
      if (b >= nlevels) continue;
      auto& table = memo[{a, b}];
      const std::size_t da = res.levels[a].dim(), db = res.levels[b].dim();
      table.assign(da, std::vector<VecQ>(db, VecQ(tdim, Rational(0))));
      for (std::size_t r = 0; r < da; ++r)
        for (std::size_t s = (a == b ? r + 1 : 0); s < db; ++s) {
          VecQ rhs(nrows, Rational(0));
          for (std::size_t j = 0; j < n; ++j) {
            const Element inner1 = apply_map(b, s, m.weights()[j], m.basis_vector(j));
            const Element inner2 = apply_map(a, r, m.weights()[j], m.basis_vector(j));
            const Element t1 = bracket_with(a, r, inner1);
            const Element t2 = bracket_with(b, s, inner2);
            for (std::size_t t = 0; t < t1.val.size(); ++t)
              rhs[row_at[j] + t] = t1.val[t] - t2.val[t];
          }
          const SolveResult sol = solve(action, rhs);
          if (!sol.consistent)
            throw std::domain_error("no solution: a commutator escapes the computed levels");
          if (!sol.kernel.empty())
            throw std::domain_error("non-unique: the level action is not injective");
          table[r][s] = sol.particular;
          if (a == b) {
            table[s][r] = sol.particular;
            for (Rational& c : table[s][r]) c = -c;
          }
          SparseVec sv;
          for (std::size_t t = 0; t < sol.particular.size(); ++t)
            if (sol.particular[t] != 0)
              sv[static_cast<int>(offset[tot] + t)] = sol.particular[t];
          alg.set_bracket(static_cast<int>(offset[a] + r), static_cast<int>(offset[b] + s), sv);
        }
    }
  }
  return alg;
}

MatrixQ killing_form(const GradedLieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<MatrixQ> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(alg.ad(alg.basis_vector(i)));
  MatrixQ k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) tr += ads[i].at(r, c) * ads[j].at(c, r);
      k.at(i, j) = tr;
      k.at(j, i) = tr;
    }
  return k;
}

namespace {

SubspaceQ ideal_closure(const GradedLieAlgebra& alg, const SubspaceQ& s) {
  SubspaceQ cur = s;
  const SubspaceQ full = SubspaceQ::full(alg.dim());
  while (true) {
    const SubspaceQ next = subspace_sum(cur, bracket_span(alg, full, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

bool ideal_nilpotent(const GradedLieAlgebra& alg, const SubspaceQ& ideal) {
  SubspaceQ cur = ideal;
  while (cur.dim() > 0) {
    const SubspaceQ next = bracket_span(alg, ideal, cur);
    if (next.dim() >= cur.dim()) return false;
    cur = next;
  }
  return true;
}

struct CoarseStructure {
  StructureReport report;
  SubspaceQ radical;
};

CoarseStructure coarse_structure(const GradedLieAlgebra& alg) {
  CoarseStructure out;
  StructureReport& rep = out.report;
  rep.center_dim = center(alg).dim();
  for (const SubspaceQ& s : derived_series(alg)) rep.derived_dims.push_back(s.dim());
  const std::size_t n = alg.dim();
  const SubspaceQ full = SubspaceQ::full(n);
  const SubspaceQ derived = bracket_span(alg, full, full);
  if (derived.dim() == 0) {
    out.radical = full;
  } else {
    const MatrixQ k = killing_form(alg);
    MatrixQ sys(derived.dim(), n);
    for (std::size_t r = 0; r < derived.dim(); ++r) {
      const VecQ kd = k * derived.basis()[r];
      for (std::size_t i = 0; i < n; ++i) sys.at(r, i) = kd[i];
    }
    out.radical = kernel_subspace(sys);
  }
  rep.radical_dim = out.radical.dim();
  rep.quotient_dim = n - rep.radical_dim;

  // Maximal nilpotent ideal: start from [g, radical] + center (a nilpotent
  // ideal by standard structure theory, verified here anyway), then saturate
  // with radical directions whose ideal closure stays nilpotent.
  SubspaceQ nil =
      ideal_closure(alg, subspace_sum(bracket_span(alg, full, out.radical), center(alg)));
  if (!ideal_nilpotent(alg, nil))
    throw std::domain_error("structure report: the base nilpotent ideal fails verification");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const VecQ& v : out.radical.basis()) {
      if (nil.contains(v)) continue;
      const SubspaceQ bigger =
          ideal_closure(alg, subspace_sum(nil, SubspaceQ::span({v}, n)));
      if (ideal_nilpotent(alg, bigger)) {
        nil = bigger;
        changed = true;
      }
    }
  }
  rep.nilradical_dim = nil.dim();
  return out;
}

}  // namespace

StructureReport structure_report(const GradedLieAlgebra& alg) {
  return coarse_structure(alg).report;
}

StructureReport structure_report(const GradedLieAlgebra& alg, const SubspaceQ& levi_certificate) {
  CoarseStructure cs = coarse_structure(alg);
  if (levi_certificate.dim() + cs.radical.dim() != alg.dim())
    throw std::domain_error("levi certificate: dimensions do not complement the radical");
  if (subspace_intersect(levi_certificate, cs.radical).dim() != 0)
    throw std::domain_error("levi certificate: intersects the radical");
  if (!levi_certificate.contains(bracket_span(alg, levi_certificate, levi_certificate)))
    throw std::domain_error("levi certificate: not a subalgebra");
  cs.report.levi_checked = true;
  return cs.report;
}

std::string StructureReport::to_text() const {
  std::ostringstream out;
  out << "center " << center_dim << ", derived series (";
  for (std::size_t i = 0; i < derived_dims.size(); ++i) out << (i ? "," : "") << derived_dims[i];
  out << "), radical " << radical_dim << ", maximal nilpotent ideal " << nilradical_dim
      << ", quotient " << quotient_dim;
  if (levi_checked) out << ", levi certificate verified";
  return out.str();
}

}  // namespace tanaka_lab
