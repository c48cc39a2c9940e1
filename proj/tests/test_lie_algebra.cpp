#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/lie_algebra.hpp"

using namespace tanaka_lab;

namespace {

VecQ unit(std::size_t dim, int i) {
  VecQ v(dim, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("verify accepts a valid algebra and reports planted violations") {
  const GradedLieAlgebra good = catalog("n_368");
  CHECK(verify(good).ok);

  // Planted Jacobi violation: in the step-3 extension of the free algebra,
  // route the degree -3 bracket through the wrong degree -2 element.
  GradedLieAlgebra bad("bad", {"x1", "x2", "x3", "y12", "y13", "y23", "z"},
                       {-1, -1, -1, -2, -2, -2, -3});
  bad.set_bracket(0, 1, {{3, Rational(1)}});
  bad.set_bracket(0, 2, {{4, Rational(1)}});
  bad.set_bracket(1, 2, {{5, Rational(1)}});
  bad.set_bracket(0, 5, {{6, Rational(1)}});  // [x1, y23] = z breaks (x1,x2,x3)
  const VerifyReport rep = verify(bad);
  CHECK(!rep.ok);
  REQUIRE(rep.jacobi.size() == 1);
  CHECK(rep.jacobi[0].i == 0);
  CHECK(rep.jacobi[0].j == 1);
  CHECK(rep.jacobi[0].k == 2);
  CHECK(rep.jacobi[0].defect[6] == Rational(-1));
  CHECK(rep.to_text(bad).find("jacobi defect") != std::string::npos);

  // Planted weight violation.
  GradedLieAlgebra off = catalog("n_368");
  off.set_bracket(0, 1, {{6, Rational(1)}});  // degree -2 bracket landing in -3
  const VerifyReport rep2 = verify(off);
  CHECK(!rep2.ok);
  REQUIRE(!rep2.grading.empty());
  CHECK(rep2.grading[0].target == 6);
}

TEST_CASE("surjectivity diagnostic separates Jacobi validity from generation") {
  GradedLieAlgebra pruned = catalog("n_368");
  const int e0 = pruned.index_of("e0"), f0 = pruned.index_of("f0");
  pruned.set_bracket(e0, f0, {});  // drop [e0, f0] = eta
  CHECK(verify(pruned).ok);       // still a graded Lie algebra
  const SurjectivityReport sur = bracket_surjectivity(pruned);
  CHECK(!sur.all);
  REQUIRE(!sur.levels.empty());
  CHECK(sur.levels[0].first == 1);
  CHECK(sur.levels[0].second == false);
  CHECK(bracket_surjectivity(catalog("n_368")).all);
}

TEST_CASE("growth vectors of the nilpotent models") {
  CHECK(growth_vector(catalog("n_368")) == std::vector<std::size_t>{3, 6, 8});
  CHECK(growth_vector(catalog("cartan_235")) == std::vector<std::size_t>{2, 3, 5});
  CHECK(growth_vector(catalog("heis_3")) == std::vector<std::size_t>{2, 3});
  CHECK(growth_vector(catalog("model_367")) == std::vector<std::size_t>{3, 6, 7});
  // Custom generators: a single vector in the Heisenberg algebra is abelian.
  const GradedLieAlgebra h = catalog("heis_3");
  CHECK(growth_vector(h, {unit(3, 0)}) == std::vector<std::size_t>{1});
}

TEST_CASE("Cauchy characteristic inside the depth-7 model") {
  const GradedLieAlgebra s = catalog("s_jacobi");
  const auto filtration_span = [&](int down_to) {
    std::vector<VecQ> gens;
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (s.weights()[i] >= down_to) gens.push_back(s.basis_vector(i));
    return SubspaceQ::span(gens, s.dim());
  };
  const SubspaceQ char3 = cauchy_characteristic(s, filtration_span(-3));
  SubspaceQ expected3 = SubspaceQ::span(
      {s.basis_vector(s.index_of("e2")), s.basis_vector(s.index_of("e1")),
       s.basis_vector(s.index_of("f1"))},
      s.dim());
  CHECK(char3 == expected3);
  const SubspaceQ char5 = cauchy_characteristic(s, filtration_span(-5));
  CHECK(char5 == SubspaceQ::span({s.basis_vector(s.index_of("x"))}, s.dim()));
}

TEST_CASE("subalgebra generation and induced structure") {
  const GradedLieAlgebra s = catalog("s_jacobi");
  const SubspaceQ sub = subalgebra_generated(
      s, {s.basis_vector(s.index_of("x")), s.basis_vector(s.index_of("e0")),
          s.basis_vector(s.index_of("f0"))});
  CHECK(sub.dim() == 8);
  const GradedLieAlgebra ind = subalgebra_structure(s, sub, "sub");
  CHECK(verify(ind).ok);
  // The canonical basis rows come out in the parent index order
  // (x, e0, f0, em1, fm1, fm2, eta, nu); the bracket pattern is the
  // (3,6,8) model's even though the inherited grading differs.
  const auto coords = [&](const char* parent_name) {
    const auto c = sub.coordinates(s.basis_vector(s.index_of(parent_name)));
    REQUIRE(c.has_value());
    return *c;
  };
  const auto expect = [&](const char* a, const char* b, const char* target) {
    CHECK(ind.bracket(coords(a), coords(b)) == coords(target));
  };
  expect("x", "e0", "em1");
  expect("x", "f0", "fm1");
  expect("x", "fm1", "fm2");
  expect("e0", "f0", "eta");
  expect("f0", "fm1", "nu");

  const GradedLieAlgebra n = catalog("n_368");
  const SubspaceQ heis = subalgebra_generated(
      n, {n.basis_vector(n.index_of("e0")), n.basis_vector(n.index_of("f0"))});
  CHECK(heis.dim() == 3);
  const GradedLieAlgebra hstruct = subalgebra_structure(n, heis, "h");
  CHECK(verify(hstruct).ok);
  CHECK(hstruct.bracket_basis(0, 1) == unit(3, 2));
  CHECK(is_zero(hstruct.bracket_basis(0, 2)));
  CHECK(is_zero(hstruct.bracket_basis(1, 2)));
}

TEST_CASE("regrading rejects non-diagonal elements") {
  const GradedLieAlgebra n = catalog("n_368");
  CHECK_THROWS_AS(regrade_by_element(n, unit(8, 0)), std::domain_error);
}

TEST_CASE("negative part requires bracket closure") {
  const GradedLieAlgebra n = catalog("n_368");
  std::vector<int> w = n.weights();
  w[n.index_of("fm2")] = 3;  // expel the target of [x, fm1]
  CHECK_THROWS_AS(negative_part(n, w, "broken"), std::domain_error);
  // The true weights restrict to the whole algebra unchanged.
  const GradedLieAlgebra same = negative_part(n, n.weights(), "same");
  CHECK(same.dim() == 8);
  CHECK(verify(same).ok);
}

TEST_CASE("isomorphism certificates are actually verified") {
  const GradedLieAlgebra n = catalog("n_368");
  CHECK(check_iso_certificate(n, n, MatrixQ::identity(8)));
  // Scaling one generator alone breaks the bracket compatibility.
  MatrixQ bad = MatrixQ::identity(8);
  bad.at(0, 0) = 2;
  CHECK(!check_iso_certificate(n, n, bad));
  // Scaling compatibly with the grading works: x -> 2x doubles degree -2
  // images through [x, e0] and so on; weight-consistent rescaling by 2^|w|.
  MatrixQ good(8, 8);
  for (int i = 0; i < 8; ++i) {
    Rational s = 1;
    for (int k = 0; k < -n.weights()[i]; ++k) s *= 2;
    good.at(i, i) = s;
  }
  CHECK(check_iso_certificate(n, n, good));
  // Singular maps never pass.
  MatrixQ sing(8, 8);
  CHECK(!check_iso_certificate(n, n, sing));
}

TEST_CASE("fingerprint structural fields on the (3,6,8) model") {
  const Fingerprint f = fingerprint(catalog("n_368"));
  CHECK(f.growth == std::vector<std::size_t>{3, 6, 8});
  CHECK(f.center_dim == 4);  // em1, eta, fm2, nu
  CHECK(f.pair_rank_12 == 3);
  CHECK(f.graded_dims ==
        std::vector<std::pair<int, std::size_t>>{{-3, 2}, {-2, 3}, {-1, 3}});
  CHECK(f.derived_dims == std::vector<std::size_t>{8, 5, 0});
  CHECK(f.lower_central_dims == std::vector<std::size_t>{8, 5, 2, 0});
  CHECK(f == fingerprint(catalog("n_368")));
  CHECK(!f.to_text().empty());
}
