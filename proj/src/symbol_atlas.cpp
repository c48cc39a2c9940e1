#include "tanaka_lab/symbol_atlas.hpp"

#include <array>
#include <stdexcept>

namespace tanaka_lab {

namespace {

constexpr int kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

Rational trace(const MatrixQ& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

VecQ vectorize(const MatrixQ& m) {
  VecQ v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

void require_plane(const MatrixPlane& plane) {
  if (plane.p1.rows() != 3 || plane.p1.cols() != 3 || plane.p2.rows() != 3 ||
      plane.p2.cols() != 3)
    throw std::domain_error("plane basis must consist of 3x3 matrices");
  if (trace(plane.p1) != 0 || trace(plane.p2) != 0)
    throw std::domain_error("plane basis must be traceless");
  if (SubspaceQ::span({vectorize(plane.p1), vectorize(plane.p2)}, 9).dim() != 2)
    throw std::domain_error("plane is degenerate: not surjective onto degree -3");
}

}  // namespace

MatrixPlane plane_pi1() {
  MatrixQ p1(3, 3), p2(3, 3);
  p1.at(0, 1) = 1;  // E_12
  p2.at(0, 2) = 1;  // E_13
  return {p1, p2};
}

MatrixPlane plane_pi2() {
  MatrixQ p1(3, 3), p2(3, 3);
  p1.at(1, 0) = 1;  // E_21
  p2.at(2, 0) = 1;  // E_31
  return {p1, p2};
}

GradedLieAlgebra symbol_from_plane(const MatrixPlane& plane, const std::string& name) {
  require_plane(plane);
  const std::vector<std::string> names{"v1", "v2", "v3", "vd1", "vd2", "vd3", "w1", "w2"};
  const std::vector<int> weights{-1, -1, -1, -2, -2, -2, -3, -3};
  GradedLieAlgebra alg(name, names, weights);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      SparseVec val;
      for (int l = 0; l < 3; ++l)
        if (kEps[i][j][l] != 0) val[3 + l] = Rational(kEps[i][j][l]);
      alg.set_bracket(i, j, val);
    }
  const std::array<const MatrixQ*, 2> p{&plane.p1, &plane.p2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SparseVec val;
      for (int s = 0; s < 2; ++s)
        if (p[s]->at(j, i) != 0) val[6 + s] = p[s]->at(j, i);
      alg.set_bracket(i, 3 + j, val);
    }
  return alg;
}

MatrixPlane plane_from_symbol(const GradedLieAlgebra& alg) {
  if (alg.dim() != 8 || alg.graded_dim(-1) != 3 || alg.graded_dim(-2) != 3 ||
      alg.graded_dim(-3) != 2)
    throw std::domain_error("expected a graded algebra of type (3,3,2)");
  const SubspaceQ g1 = alg.graded_component(-1);
  const SubspaceQ g2 = alg.graded_component(-2);
  const SubspaceQ g3 = alg.graded_component(-3);
  const auto coords2 = [&](const VecQ& v) {
    const auto c = g2.coordinates(v);
    if (!c) throw std::domain_error("bracket leaves degree -2");
    return *c;
  };
  // Column j of m holds [b2,b3], [b3,b1], [b1,b2] respectively.
  MatrixQ m(3, 3);
  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {2, 0}, {0, 1}}};
  for (int j = 0; j < 3; ++j) {
    const VecQ c = coords2(alg.bracket(g1.basis()[pairs[j].first], g1.basis()[pairs[j].second]));
    for (int k = 0; k < 3; ++k) m.at(k, j) = c[k];
  }
  if (!inverse(m).has_value())
    throw std::domain_error("degree -2 bracket is not surjective");
  MatrixQ a1(3, 3), a2(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      VecQ elem(alg.dim(), Rational(0));
      for (int k = 0; k < 3; ++k)
        if (m.at(k, j) != 0) elem = elem + m.at(k, j) * g2.basis()[k];
      const auto c = g3.coordinates(alg.bracket(g1.basis()[i], elem));
      if (!c) throw std::domain_error("bracket leaves degree -3");
      a1.at(i, j) = (*c)[0];
      a2.at(i, j) = (*c)[1];
    }
  MatrixPlane plane{a1.transpose(), a2.transpose()};
  require_plane(plane);
  return plane;
}

MatrixQ plane_roundtrip_certificate(const GradedLieAlgebra& alg) {
  // Recompute the reading map; its ingredients are the certificate columns.
  const SubspaceQ g1 = alg.graded_component(-1);
  const SubspaceQ g2 = alg.graded_component(-2);
  const SubspaceQ g3 = alg.graded_component(-3);
  const auto coords2 = [&](const VecQ& v) {
    const auto c = g2.coordinates(v);
    if (!c) throw std::domain_error("bracket leaves degree -2");
    return *c;
  };
  MatrixQ m(3, 3);
  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {2, 0}, {0, 1}}};
  for (int j = 0; j < 3; ++j) {
    const VecQ c = coords2(alg.bracket(g1.basis()[pairs[j].first], g1.basis()[pairs[j].second]));
    for (int k = 0; k < 3; ++k) m.at(k, j) = c[k];
  }
  MatrixQ cert(alg.dim(), 8);
  for (int i = 0; i < 3; ++i) {
    const VecQ b = g1.basis()[i];
    for (std::size_t r = 0; r < alg.dim(); ++r) cert.at(r, i) = b[r];
  }
  for (int j = 0; j < 3; ++j) {
    VecQ elem(alg.dim(), Rational(0));
    for (int k = 0; k < 3; ++k)
      if (m.at(k, j) != 0) elem = elem + m.at(k, j) * g2.basis()[k];
    for (std::size_t r = 0; r < alg.dim(); ++r) cert.at(r, 3 + j) = elem[r];
  }
  for (int s = 0; s < 2; ++s)
    for (std::size_t r = 0; r < alg.dim(); ++r) cert.at(r, 6 + s) = g3.basis()[s][r];
  return cert;
}

MatrixPlane conjugate_plane(const MatrixPlane& plane, const MatrixQ& g) {
  const auto gi = inverse(g);
  if (!gi) throw std::domain_error("conjugation by a singular matrix");
  return {g * plane.p1 * (*gi), g * plane.p2 * (*gi)};
}

MatrixQ plane_conjugation_certificate(const MatrixPlane& a, const MatrixPlane& b,
                                      const MatrixQ& g) {
  require_plane(a);
  require_plane(b);
  const auto gi = inverse(g);
  if (!gi) throw std::domain_error("conjugation by a singular matrix");
  const Rational det = determinant(g);
  // Express g^-1 b_t g in the basis of plane a.
  MatrixQ span_a(9, 2);
  {
    const VecQ c1 = vectorize(a.p1), c2 = vectorize(a.p2);
    for (int r = 0; r < 9; ++r) {
      span_a.at(r, 0) = c1[r];
      span_a.at(r, 1) = c2[r];
    }
  }
  MatrixQ q(2, 2);
  const std::array<const MatrixQ*, 2> bt{&b.p1, &b.p2};
  for (int t = 0; t < 2; ++t) {
    const SolveResult s = solve(span_a, vectorize((*gi) * (*bt[t]) * g));
    if (!s.consistent)
      throw std::domain_error("matrix does not conjugate the first plane onto the second");
    q.at(t, 0) = s.particular[0];
    q.at(t, 1) = s.particular[1];
  }
  const MatrixQ phi2 = det * gi->transpose();
  MatrixQ cert(8, 8);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      cert.at(r, c) = g.at(r, c);
      cert.at(3 + r, 3 + c) = phi2.at(r, c);
    }
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s) cert.at(6 + t, 6 + s) = det * q.at(t, s);
  return cert;
}

GradedLieAlgebra symbol_from_pair(const MatrixQ& a_matrix, const SubspaceQ& w,
                                  const Rational& scaling, const std::string& name) {
  if (a_matrix.rows() != 3 || a_matrix.cols() != 3)
    throw std::domain_error("pair matrix must be 3x3");
  if (trace(a_matrix) != 0) throw std::domain_error("pair matrix must be traceless");
  if (w.ambient_dim() != 3 || w.dim() != 2)
    throw std::domain_error("pair subspace must be a plane in Q^3");
  for (const VecQ& wv : w.basis())
    if (a_matrix * wv != scaling * wv)
      throw std::domain_error("matrix does not act on the plane by the declared scalar");
  const VecQ psi = kernel_basis(w.basis_matrix())[0];
  const MatrixQ a = a_matrix.transpose();
  // Degree -4 pairing forced by the Jacobi identity.
  MatrixQ b(3, 3);
  for (int l = 0; l < 3; ++l)
    for (int k = 0; k < 3; ++k) {
      Rational sum = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (kEps[i][j][l] != 0 && psi[i] != 0 && a.at(j, k) != 0)
            sum += Rational(kEps[i][j][l]) * psi[i] * a.at(j, k);
      b.at(l, k) = sum;
    }
  if (!(b + b.transpose()).is_zero())
    throw std::domain_error("pair is incompatible: forced degree -4 pairing is not "
                            "antisymmetric");
  const std::vector<std::string> names{"v1", "v2", "v3", "vd1", "vd2", "vd3", "w", "z"};
  const std::vector<int> weights{-1, -1, -1, -2, -2, -2, -3, -4};
  GradedLieAlgebra alg(name, names, weights);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      SparseVec val;
      for (int l = 0; l < 3; ++l)
        if (kEps[i][j][l] != 0) val[3 + l] = Rational(kEps[i][j][l]);
      alg.set_bracket(i, j, val);
    }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      if (a.at(i, j) != 0) alg.set_bracket(i, 3 + j, {{6, a.at(i, j)}});
    if (psi[i] != 0) alg.set_bracket(i, 6, {{7, psi[i]}});
  }
  for (int l = 0; l < 3; ++l)
    for (int k = l + 1; k < 3; ++k)
      if (b.at(l, k) != 0) alg.set_bracket(3 + l, 3 + k, {{7, b.at(l, k)}});
  return alg;
}

MatrixQ pair_a1_matrix() {
  MatrixQ m(3, 3);
  m.at(0, 2) = 1;
  return m;
}

MatrixQ pair_a2_matrix() {
  MatrixQ m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = -2;
  return m;
}

SubspaceQ pair_w_space() {
  return SubspaceQ::span({{Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)}},
                         3);
}

std::vector<std::pair<std::string, Rational>> trace_word_invariants(const MatrixPlane& plane,
                                                                    int max_len) {
  require_plane(plane);
  std::vector<std::pair<std::string, Rational>> out;
  std::vector<std::pair<std::string, MatrixQ>> frontier{{"", MatrixQ::identity(3)}};
  const std::array<const MatrixQ*, 2> p{&plane.p1, &plane.p2};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::string, MatrixQ>> next;
    for (const auto& [word, prod] : frontier)
      for (int s = 0; s < 2; ++s)
        next.emplace_back(word + static_cast<char>('1' + s), prod * (*p[s]));
    for (const auto& [word, prod] : next) out.emplace_back(word, trace(prod));
    frontier = std::move(next);
  }
  return out;
}

}  // namespace tanaka_lab
