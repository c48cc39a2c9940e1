#include "tanaka_lab/catalog.hpp"

#include <stdexcept>

#include "tanaka_lab/symbol_atlas.hpp"

namespace tanaka_lab {

namespace {

// Sparse bracket entry by basis name, resolved at build time.
struct Entry {
  const char* left;
  const char* right;
  std::vector<std::pair<Rational, const char*>> value;
};

GradedLieAlgebra build(const std::string& name, const std::vector<std::string>& basis,
                       const std::vector<int>& weights, const std::vector<Entry>& entries) {
  GradedLieAlgebra alg(name, basis, weights);
  for (const Entry& e : entries) {
    int i = alg.index_of(e.left);
    int j = alg.index_of(e.right);
    Rational sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    SparseVec val;
    for (const auto& [c, target] : e.value) val[alg.index_of(target)] = sign * c;
    alg.set_bracket(i, j, val);
  }
  return alg;
}

GradedLieAlgebra make_n_368() {
  return build("n_368", {"x", "e0", "f0", "em1", "fm1", "eta", "fm2", "nu"},
               {-1, -1, -1, -2, -2, -2, -3, -3},
               {
                   {"x", "e0", {{1, "em1"}}},
                   {"x", "f0", {{1, "fm1"}}},
                   {"x", "fm1", {{1, "fm2"}}},
                   {"e0", "f0", {{1, "eta"}}},
                   {"f0", "fm1", {{1, "nu"}}},
               });
}

GradedLieAlgebra make_s_jacobi() {
  return build("s_jacobi",
               {"x", "e2", "e1", "f1", "e0", "f0", "em1", "fm1", "fm2", "eta", "nu"},
               {-1, -1, -2, -2, -3, -3, -4, -4, -5, -6, -7},
               {
                   {"x", "e2", {{1, "e1"}}},
                   {"x", "e1", {{1, "e0"}}},
                   {"x", "e0", {{1, "em1"}}},
                   {"x", "f1", {{1, "f0"}}},
                   {"x", "f0", {{1, "fm1"}}},
                   {"x", "fm1", {{1, "fm2"}}},
                   {"e2", "fm2", {{1, "eta"}}},
                   {"e1", "fm1", {{-1, "eta"}}},
                   {"e0", "f0", {{1, "eta"}}},
                   {"em1", "f1", {{-1, "eta"}}},
                   {"f0", "fm1", {{1, "nu"}}},
                   {"f1", "fm2", {{-1, "nu"}}},
               });
}

GradedLieAlgebra make_heis_3() {
  return build("heis_3", {"x1", "x2", "z"}, {-1, -1, -2}, {{"x1", "x2", {{1, "z"}}}});
}

GradedLieAlgebra make_cartan_235() {
  return build("cartan_235", {"x1", "x2", "x3", "x4", "x5"}, {-1, -1, -2, -3, -3},
               {
                   {"x1", "x2", {{1, "x3"}}},
                   {"x1", "x3", {{1, "x4"}}},
                   {"x2", "x3", {{1, "x5"}}},
               });
}

GradedLieAlgebra make_free_36() {
  return build("free_36", {"x1", "x2", "x3", "y12", "y13", "y23"}, {-1, -1, -1, -2, -2, -2},
               {
                   {"x1", "x2", {{1, "y12"}}},
                   {"x1", "x3", {{1, "y13"}}},
                   {"x2", "x3", {{1, "y23"}}},
               });
}

GradedLieAlgebra make_model_367() {
  return build("model_367", {"x1", "x2", "x3", "y12", "y13", "y23", "z"},
               {-1, -1, -1, -2, -2, -2, -3},
               {
                   {"x1", "x2", {{1, "y12"}}},
                   {"x1", "x3", {{1, "y13"}}},
                   {"x2", "x3", {{1, "y23"}}},
                   {"x1", "y12", {{1, "z"}}},
               });
}

// Bracket table of the split exceptional simple algebra on the basis
// (h1, h2, x, f1, f0, fm1, fm2, nu) plus the primed counterparts of the
// last six, in the grading by ad(-2 h1 - 3 h2).
std::vector<Entry> g2_entries() {
  std::vector<Entry> t;
  // Adjoint action of the diagonal pair on the unprimed solvable part.
  t.push_back({"h1", "x", {{2, "x"}}});
  t.push_back({"h1", "f1", {{-3, "f1"}}});
  t.push_back({"h1", "f0", {{-1, "f0"}}});
  t.push_back({"h1", "fm1", {{1, "fm1"}}});
  t.push_back({"h1", "fm2", {{3, "fm2"}}});
  t.push_back({"h2", "x", {{-1, "x"}}});
  t.push_back({"h2", "f1", {{2, "f1"}}});
  t.push_back({"h2", "f0", {{1, "f0"}}});
  t.push_back({"h2", "fm2", {{-1, "fm2"}}});
  t.push_back({"h2", "nu", {{1, "nu"}}});
  // Unprimed solvable part.
  t.push_back({"x", "f1", {{1, "f0"}}});
  t.push_back({"x", "f0", {{1, "fm1"}}});
  t.push_back({"x", "fm1", {{1, "fm2"}}});
  t.push_back({"f1", "fm2", {{-1, "nu"}}});
  t.push_back({"f0", "fm1", {{1, "nu"}}});
  // Diagonal pair on the primed part (negated eigenvalues).
  t.push_back({"h1", "xp", {{-2, "xp"}}});
  t.push_back({"h1", "f1p", {{3, "f1p"}}});
  t.push_back({"h1", "f0p", {{1, "f0p"}}});
  t.push_back({"h1", "fm1p", {{-1, "fm1p"}}});
  t.push_back({"h1", "fm2p", {{-3, "fm2p"}}});
  t.push_back({"h2", "xp", {{1, "xp"}}});
  t.push_back({"h2", "f1p", {{-2, "f1p"}}});
  t.push_back({"h2", "f0p", {{-1, "f0p"}}});
  t.push_back({"h2", "fm2p", {{1, "fm2p"}}});
  t.push_back({"h2", "nup", {{-1, "nup"}}});
  // Primed solvable part (image of the unprimed one under the swap
  // automorphism a -> a', h -> -h).
  t.push_back({"xp", "f1p", {{1, "f0p"}}});
  t.push_back({"xp", "f0p", {{1, "fm1p"}}});
  t.push_back({"xp", "fm1p", {{1, "fm2p"}}});
  t.push_back({"f1p", "fm2p", {{-1, "nup"}}});
  t.push_back({"f0p", "fm1p", {{1, "nup"}}});
  // Mixed part.
  t.push_back({"x", "xp", {{-1, "h1"}}});
  t.push_back({"x", "f0p", {{-3, "f1p"}}});
  t.push_back({"x", "fm1p", {{-4, "f0p"}}});
  t.push_back({"x", "fm2p", {{-3, "fm1p"}}});
  t.push_back({"f1", "f1p", {{-1, "h2"}}});
  t.push_back({"f1", "f0p", {{1, "xp"}}});
  t.push_back({"f1", "nup", {{1, "fm2p"}}});
  t.push_back({"f0", "xp", {{3, "f1"}}});
  t.push_back({"f0", "f1p", {{-1, "x"}}});
  t.push_back({"f0", "f0p", {{-1, "h1"}, {-3, "h2"}}});
  t.push_back({"f0", "fm1p", {{4, "xp"}}});
  t.push_back({"f0", "nup", {{-3, "fm1p"}}});
  t.push_back({"fm1", "xp", {{4, "f0"}}});
  t.push_back({"fm1", "f0p", {{-4, "x"}}});
  t.push_back({"fm1", "fm1p", {{-8, "h1"}, {-12, "h2"}}});
  t.push_back({"fm1", "fm2p", {{12, "xp"}}});
  t.push_back({"fm1", "nup", {{12, "f0p"}}});
  t.push_back({"fm2", "xp", {{3, "fm1"}}});
  t.push_back({"fm2", "fm1p", {{-12, "x"}}});
  t.push_back({"fm2", "fm2p", {{-36, "h1"}, {-36, "h2"}}});
  t.push_back({"fm2", "nup", {{-36, "f1p"}}});
  t.push_back({"nu", "f1p", {{-1, "fm2"}}});
  t.push_back({"nu", "f0p", {{3, "fm1"}}});
  t.push_back({"nu", "fm1p", {{-12, "f0"}}});
  t.push_back({"nu", "fm2p", {{36, "f1"}}});
  t.push_back({"nu", "nup", {{-36, "h1"}, {-72, "h2"}}});
  return t;
}

const std::vector<std::string>& g2_basis() {
  static const std::vector<std::string> basis{"h1", "h2", "x",   "f1",   "f0",   "fm1",
                                              "fm2", "nu", "xp", "f1p",  "f0p",  "fm1p",
                                              "fm2p", "nup"};
  return basis;
}

GradedLieAlgebra make_g2_split() {
  const std::vector<int> weights{0, 0, -1, 0, -1, -2, -3, -3, 1, 0, 1, 2, 3, 3};
  return build("g2_split", g2_basis(), weights, g2_entries());
}

GradedLieAlgebra make_g_29() {
  // Basis: the 14 simple-part vectors, the scaling element r, then a copy
  // of the simple part inside the abelian ideal under phi: h -> w, x -> y,
  // f_i -> e_{i+1}, nu -> eta, primes preserved.
  std::vector<std::string> basis = g2_basis();
  basis.push_back("r");
  const std::vector<std::string> w_basis{"w1",  "w2",  "y",   "e2",  "e1",  "e0", "em1",
                                         "eta", "yp",  "e2p", "e1p", "e0p", "em1p", "etap"};
  basis.insert(basis.end(), w_basis.begin(), w_basis.end());
  std::vector<int> weights(29, 0);
  for (int k = 15; k < 29; ++k) weights[k] = 1;  // the abelian ideal
  GradedLieAlgebra g2 = make_g2_split();
  GradedLieAlgebra alg("g_29", basis, weights);
  // Simple part: same table.
  for (const auto& [ij, val] : g2.table()) alg.set_bracket(ij.first, ij.second, val);
  // Action on the ideal transported through phi; r acts as the identity.
  for (int i = 0; i < 14; ++i)
    for (int m = 0; m < 14; ++m) {
      const VecQ v = g2.bracket_basis(i, m);
      SparseVec val;
      for (int k = 0; k < 14; ++k)
        if (v[k] != 0) val[15 + k] = v[k];
      if (!val.empty()) alg.set_bracket(i, 15 + m, val);
    }
  for (int m = 0; m < 14; ++m) alg.set_bracket(14, 15 + m, {{15 + m, Rational(1)}});
  return alg;
}

}  // namespace

GradedLieAlgebra catalog(const std::string& name) {
  if (name == "n_368") return make_n_368();
  if (name == "s_jacobi") return make_s_jacobi();
  if (name == "g2_split") return make_g2_split();
  if (name == "g_29") return make_g_29();
  if (name == "cartan_235") return make_cartan_235();
  if (name == "free_36") return make_free_36();
  if (name == "model_367") return make_model_367();
  if (name == "heis_3") return make_heis_3();
  if (name == "pi1_symbol") return symbol_from_plane(plane_pi1(), "pi1_symbol");
  if (name == "pi2_symbol") return symbol_from_plane(plane_pi2(), "pi2_symbol");
  if (name == "a1_symbol")
    return symbol_from_pair(pair_a1_matrix(), pair_w_space(), Rational(0), "a1_symbol");
  if (name == "a2_symbol")
    return symbol_from_pair(pair_a2_matrix(), pair_w_space(), Rational(1), "a2_symbol");
  throw std::invalid_argument("unknown catalog algebra: " + name);
}

std::vector<std::string> catalog_names() {
  return {"n_368",     "s_jacobi",  "g2_split",  "g_29",      "cartan_235", "free_36",
          "model_367", "heis_3",    "pi1_symbol", "pi2_symbol", "a1_symbol", "a2_symbol"};
}

VecQ g29_grading_element(int which) {
  VecQ h(29, Rational(0));
  if (which == 1) {
    h[0] = -2;
    h[1] = -3;
  } else if (which == 2) {
    h[0] = -4;
    h[1] = -7;
  } else {
    throw std::invalid_argument("grading element index must be 1 or 2");
  }
  h[14] = 1;
  return h;
}

SubspaceQ g29_levi_subspace() {
  std::vector<VecQ> gens;
  for (int i = 0; i < 14; ++i) {
    VecQ e(29, Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return SubspaceQ::span(gens, 29);
}

std::optional<MatrixQ> n368_certificate(const GradedLieAlgebra& s) {
  std::vector<int> v, w;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.weights()[i] == -1) v.push_back(static_cast<int>(i));
    if (s.weights()[i] == -2) w.push_back(static_cast<int>(i));
  }
  if (v.size() != 3 || w.size() != 3 || s.dim() != 8) return std::nullopt;

  // The annihilator of g_{-2} under the degree (-1, -2) pairing singles out
  // the e0 direction; any independent completion supplies x and f0, and the
  // remaining basis images are brackets of those three.
  MatrixQ pairing(24, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      VecQ bb = s.bracket_basis(v[i], w[j]);
      for (std::size_t k = 0; k < 8; ++k) pairing.at(8 * j + k, i) = bb[k];
    }
  }
  std::vector<VecQ> ann = kernel_basis(pairing);
  if (ann.size() != 1) return std::nullopt;
  VecQ e0v(8, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) e0v = e0v + ann[0][i] * s.basis_vector(v[i]);

  std::vector<VecQ> picked = {e0v};
  for (int idx : v) {
    if (picked.size() == 3) break;
    VecQ cand = s.basis_vector(idx);
    std::vector<VecQ> trial = picked;
    trial.push_back(cand);
    if (SubspaceQ::span(trial, 8).dim() == trial.size()) picked.push_back(cand);
  }
  if (picked.size() != 3) return std::nullopt;
  const VecQ& xv = picked[1];
  const VecQ& f0v = picked[2];

  VecQ em1 = s.bracket(xv, e0v);
  VecQ fm1 = s.bracket(xv, f0v);
  VecQ eta = s.bracket(e0v, f0v);
  VecQ fm2 = s.bracket(xv, fm1);
  VecQ nu = s.bracket(f0v, fm1);
  if (SubspaceQ::span({em1, fm1, eta}, 8).dim() != 3) return std::nullopt;
  if (SubspaceQ::span({fm2, nu}, 8).dim() != 2) return std::nullopt;

  std::vector<VecQ> cols = {xv, e0v, f0v, em1, fm1, eta, fm2, nu};
  MatrixQ cert(8, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    for (std::size_t r = 0; r < 8; ++r) cert.at(r, c) = cols[c][r];
  }
  return cert;
}

}  // namespace tanaka_lab
