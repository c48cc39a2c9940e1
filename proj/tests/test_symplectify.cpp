#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/symplectify.hpp"

using namespace tanaka_lab;

namespace {

Poly var(std::size_t n, std::size_t i) {
  return Poly::variable(static_cast<int>(n), static_cast<int>(i));
}

VecQ unit(std::size_t n, std::size_t i) {
  VecQ v(n, Rational(0));
  v[i] = 1;
  return v;
}

// Indices of the degree -1 basis elements, the generators of the
// distribution.
std::vector<int> gens_of(const GradedLieAlgebra& alg) {
  std::vector<int> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (alg.weights()[i] == -1) out.push_back(static_cast<int>(i));
  }
  return out;
}

GradedLieAlgebra abelian(int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back("t" + std::to_string(i));
  return GradedLieAlgebra("abelian", names, std::vector<int>(d, -1));
}

}  // namespace

TEST_CASE("frame calculus derivation rule") {
  CotangentModel model = build_model(catalog("n_368"));
  const std::size_t n = 8;
  // Basis order: x, e0, f0, em1, fm1, eta, fm2, nu.
  Poly u_e0 = quasi_impulse(model, unit(n, 1));
  Poly u_x = quasi_impulse(model, unit(n, 0));
  CHECK(apply_field(model, frame_field(model, 0), u_e0) == var(n, 3));
  CHECK(apply_field(model, frame_field(model, 1), u_x) == -var(n, 3));
  CHECK(apply_field(model, frame_field(model, 0), u_x).is_zero());
  // Fiber coordinate fields differentiate the impulses.
  CHECK(apply_field(model, frame_field(model, n + 4), var(n, 4)) ==
        Poly::constant(static_cast<int>(n), Rational(1)));

  CotangentModel heis = build_model(catalog("heis_3"));
  MatrixQ sig = sigma_matrix_at(heis, VecQ{Rational(0), Rational(0), Rational(1)});
  CHECK(sig.at(0, 1) == Rational(1));
  CHECK(sig.at(1, 0) == Rational(-1));
  CHECK(sig.at(0, 3) == Rational(-1));
  CHECK(sig.at(3, 0) == Rational(1));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) CHECK(sig.at(i, j) == -sig.at(j, i));
  }
  CHECK(determinant(sig) != 0);

  CotangentModel flat = build_model(abelian(2));
  CHECK(apply_field(flat, frame_field(flat, 0), quasi_impulse(flat, unit(2, 1))).is_zero());
}

TEST_CASE("hamiltonian fields pair against the symplectic form") {
  CotangentModel model = build_model(catalog("n_368"));
  const std::size_t n = 8;
  for (std::size_t a = 0; a < n; ++a) {
    Poly ua = quasi_impulse(model, unit(n, a));
    for (std::size_t j = 0; j < 2 * n; ++j) {
      PolyVectorField fj = frame_field(model, j);
      CHECK(sigma_pair(model, frame_field(model, a), fj) ==
            -apply_field(model, fj, ua));
    }
  }
}

TEST_CASE("field bracket is the commutator of derivations") {
  CotangentModel model = build_model(catalog("n_368"));
  const std::size_t n = 8;
  PolyVectorField x = zero_field(model);
  x.coef[0] = Poly::constant(static_cast<int>(n), Rational(1));
  x.coef[n + 5] = var(n, 3);
  PolyVectorField y = zero_field(model);
  y.coef[1] = var(n, 6);
  y.coef[n + 0] = Poly::constant(static_cast<int>(n), Rational(1));
  y.coef[2] = var(n, 5) * var(n, 7);

  Poly f = var(n, 5) * var(n, 0) + var(n, 7) + var(n, 4) * var(n, 4);
  PolyVectorField br = field_bracket(model, x, y);
  Poly lhs = apply_field(model, br, f);
  Poly rhs = apply_field(model, x, apply_field(model, y, f)) -
             apply_field(model, y, apply_field(model, x, f));
  CHECK(lhs == rhs);
}

TEST_CASE("characteristic field of the flat model") {
  CotangentModel model = build_model(catalog("n_368"));
  const std::size_t n = 8;
  // Generator order (e0, f0, x).
  PolyVectorField c = characteristic_field(model, {1, 2, 0});
  CHECK(c.coef[1] == -var(n, 4));  // u_{[f0,x]} = -u_{fm1}
  CHECK(c.coef[2] == var(n, 3));   // u_{[x,e0]} = u_{em1}
  CHECK(c.coef[0] == var(n, 5));   // u_{[e0,f0]} = u_{eta}
  for (std::size_t i = 3; i < 2 * n; ++i) CHECK(c.coef[i].is_zero());

  // The field vanishes along the annihilator of the square.
  VecQ lam(n, Rational(0));
  lam[6] = 2;
  lam[7] = -3;
  CHECK(is_zero(eval_field(c, lam)));

  CotangentModel free36 = build_model(catalog("free_36"));
  PolyVectorField cf = characteristic_field(free36, {0, 1, 2});
  std::size_t single = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (cf.coef[i].terms().size() == 1) ++single;
  }
  CHECK(single == 3);

  CotangentModel heis = build_model(catalog("heis_3"));
  CHECK_THROWS_WITH_AS(characteristic_field(heis, {0, 1, 2}),
                       "square not 6-dimensional", std::invalid_argument);
}

TEST_CASE("covector sampling is deterministic and leaves the square annihilator") {
  CotangentModel model = build_model(catalog("n_368"));
  std::vector<int> gens = gens_of(model.algebra);
  REQUIRE(gens == std::vector<int>{0, 1, 2});
  VecQ a = sample_covector(model, gens, 1);
  VecQ b = sample_covector(model, gens, 1);
  CHECK(a == b);
  for (int d : gens) CHECK(a[static_cast<std::size_t>(d)] == 0);
  bool outside = a[3] != 0 || a[4] != 0 || a[5] != 0;
  CHECK(outside);
  CHECK(a[5] != 0);
  VecQ c = sample_covector(model, gens, 2);
  CHECK(a != c);
}

TEST_CASE("flag of the flat model at a sampled covector") {
  CotangentModel model = build_model(catalog("n_368"));
  std::vector<int> gens = gens_of(model.algebra);
  VecQ lam = sample_covector(model, gens, 7);
  JacobiFlagReport rep = jacobi_flag_at(model, gens, lam);
  CHECK(rep.k == 1);
  CHECK(rep.l == 1);
  CHECK(rep.m == 2);
  CHECK_FALSE(rep.maximal_class);
  CHECK(rep.xi_dim == 12);
  std::map<int, std::size_t> expected_flag = {{-2, 11}, {-1, 10}, {0, 8},
                                              {1, 6},   {2, 4},   {3, 3}};
  CHECK(rep.flag_dims == expected_flag);
  CHECK(rep.t == std::vector<std::size_t>{1, 2, 2, 2, 1});
  std::map<int, std::size_t> expected_v = {{0, 4}, {1, 4}, {2, 2}, {3, 1}};
  CHECK(rep.vertical_dims == expected_v);

  // Error paths: a covector that pairs with a generator, and one inside the
  // annihilator of the whole square.
  VecQ bad = lam;
  bad[0] = 1;
  CHECK_THROWS_AS(jacobi_flag_at(model, gens, bad), std::invalid_argument);
  VecQ deep(8, Rational(0));
  deep[6] = 1;
  deep[7] = 5;
  CHECK_THROWS_AS(jacobi_flag_at(model, gens, deep), std::domain_error);
}

TEST_CASE("skew complement is involutive on flag members") {
  CotangentModel model = build_model(catalog("n_368"));
  std::vector<int> gens = gens_of(model.algebra);
  VecQ lam = sample_covector(model, gens, 11);
  SubspaceQ xi = xi_at(model, gens, lam);
  CHECK(xi.dim() == 12);
  CHECK(annihilator_tangent_at(model, gens, lam).dim() == 13);

  // J^(0) is spanned by the vertical fields, the characteristic direction,
  // and the lifted generators; reconstruct it from the report dimensions by
  // taking the skew complement of J^(1) twice.
  PolyVectorField c = characteristic_field(model, gens);
  std::vector<VecQ> j1vecs = {eval_field(c, lam)};
  for (std::size_t b = 0; b < 8; ++b) {
    if (std::find(gens.begin(), gens.end(), static_cast<int>(b)) == gens.end()) {
      j1vecs.push_back(unit(16, 8 + b));
    }
  }
  SubspaceQ j1 = SubspaceQ::span(j1vecs, 16);
  SubspaceQ j0 = skew_complement_at(model, gens, lam, j1);
  CHECK(j0.dim() == 8);
  CHECK(skew_complement_at(model, gens, lam, j0) == j1);
  CHECK(skew_complement_at(model, gens, lam, skew_complement_at(model, gens, lam, j0)) == j0);
}

TEST_CASE("vertical flag representatives close under brackets") {
  CotangentModel model = build_model(catalog("n_368"));
  std::vector<int> gens = gens_of(model.algebra);
  VecQ lam = sample_covector(model, gens, 3);
  for (int level : {2, 3}) {
    std::vector<PolyVectorField> reps = vertical_flag_reps(model, gens, lam, level);
    REQUIRE(!reps.empty());
    std::vector<VecQ> vals;
    for (const PolyVectorField& f : reps) vals.push_back(eval_field(f, lam));
    SubspaceQ span = SubspaceQ::span(vals, 16);
    CHECK(span.dim() == (level == 2 ? 3 : 2));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        VecQ v = eval_field(field_bracket(model, reps[i], reps[j]), lam);
        CHECK(span.contains(v));
      }
    }
  }
}

TEST_CASE("class surveys of the four models") {
  struct Expect {
    const char* name;
    int k, l;
    bool maximal;
  };
  const std::vector<Expect> table = {{"n_368", 1, 1, false},
                                     {"free_36", 1, 0, true},
                                     {"model_367", 1, 1, true},
                                     {"pi2_symbol", 2, 0, true}};
  for (const Expect& e : table) {
    CAPTURE(e.name);
    CotangentModel model = build_model(catalog(e.name));
    std::vector<int> gens = gens_of(model.algebra);
    REQUIRE(gens.size() == 3);
    FlagSurvey survey = survey_flags(model, gens, 25, 2026);
    CHECK(survey.samples.size() == 25);
    CHECK(survey.k == e.k);
    CHECK(survey.l == e.l);
    CHECK(survey.maximal_class == e.maximal);
    CHECK(survey.outliers <= 2);
    const int n = static_cast<int>(model.n());
    for (const JacobiFlagReport& r : survey.samples) {
      CHECK(r.xi_dim == 2 * model.n() - 4);
      std::vector<std::size_t> rev(r.t.rbegin(), r.t.rend());
      CHECK(r.t == rev);
      CHECK(static_cast<int>(r.vertical_dims.at(r.m + 1)) == n - 4 - 2 * r.k - r.l);
    }
  }
}

TEST_CASE("jacobi tanaka extraction at the flat model") {
  CotangentModel model = build_model(catalog("n_368"));
  std::vector<int> gens = gens_of(model.algebra);
  GradedLieAlgebra sj = catalog("s_jacobi");
  for (unsigned seed : {5u, 21u, 100u}) {
    CAPTURE(seed);
    VecQ lam = sample_covector(model, gens, seed);
    JTExtract ext = jacobi_tanaka_at(model, gens, lam);
    CHECK(ext.filtration_dims ==
          std::vector<std::size_t>{4, 6, 8, 10, 11, 12, 13});
    CHECK(ext.graded_dims == std::vector<std::size_t>{2, 2, 2, 2, 1, 1, 1});
    REQUIRE(ext.algebra.dim() == 11);
    CHECK(verify(ext.algebra).ok);
    MatrixQ cert = adapted_frame_certificate(ext.algebra);
    CHECK(check_iso_certificate(sj, ext.algebra, cert));
  }
}

TEST_CASE("abnormal extremal identities and corank flags") {
  CotangentModel model = build_model(catalog("n_368"));
  AbnormalReport rep = abnormal_report(model, 50, 2025);
  CHECK(rep.du12_zero);
  CHECK(rep.du31_zero);
  CHECK(rep.du23_identity);
  CHECK(rep.legendre_det_zero);
  CHECK(rep.legendre_nonzero_entry);
  REQUIRE(rep.samples.size() == 50);
  std::size_t modal = 0;
  for (const AbnormalSample& s : rep.samples) {
    CHECK(s.a1_rank2);
    CHECK(s.z_stable);
    CHECK(s.base_dim <= 6);
    if (s.z_dims == std::vector<std::size_t>{5, 7, 8, 8}) ++modal;
  }
  CHECK(modal >= 40);
  CHECK(rep.base_dim_six_count >= 40);
}
