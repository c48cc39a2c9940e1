#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/symbol_atlas.hpp"

using namespace tanaka_lab;

namespace {

MatrixPlane random_traceless_plane(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    MatrixQ p1(3, 3), p2(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        p1.at(r, c) = d(rng);
        p2.at(r, c) = d(rng);
      }
    p1.at(2, 2) = -p1.at(0, 0) - p1.at(1, 1);
    p2.at(2, 2) = -p2.at(0, 0) - p2.at(1, 1);
    MatrixQ span(9, 2);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        span.at(3 * r + c, 0) = p1.at(r, c);
        span.at(3 * r + c, 1) = p2.at(r, c);
      }
    if (rank(span) == 2) return {p1, p2};
  }
}

MatrixQ swap_12() {
  MatrixQ g(3, 3);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  g.at(2, 2) = 1;
  return g;
}

}  // namespace

TEST_CASE("plane-built symbols carry the dual pairing brackets") {
  const GradedLieAlgebra s1 = catalog("pi1_symbol");
  CHECK(verify(s1).ok);
  CHECK(growth_vector(s1) == std::vector<std::size_t>{3, 6, 8});
  const auto idx = [&](const char* n) { return s1.index_of(n); };
  CHECK(s1.bracket_basis(idx("v2"), idx("vd1")) == s1.basis_vector(idx("w1")));
  CHECK(s1.bracket_basis(idx("v3"), idx("vd1")) == s1.basis_vector(idx("w2")));
  CHECK(is_zero(s1.bracket_basis(idx("v1"), idx("vd2"))));
  CHECK(s1.bracket_basis(idx("v1"), idx("v2")) == s1.basis_vector(idx("vd3")));
  // Degenerate input: a dependent pair is rejected.
  MatrixPlane dep = plane_pi1();
  dep.p2 = Rational(2) * dep.p1;
  CHECK_THROWS_AS(symbol_from_plane(dep, "dep"), std::domain_error);
  // Non-traceless input is rejected outright.
  MatrixPlane bump = plane_pi1();
  bump.p1.at(0, 0) = 1;
  CHECK_THROWS_AS(symbol_from_plane(bump, "bump"), std::domain_error);
}

TEST_CASE("a non-traceless bump is exactly a Jacobi defect") {
  // Rebuild the bracket table of symbol_from_plane without its guard, for
  // P1 = E_12 + E_11 (trace 1) and P2 = E_13: the triple (v1,v2,v3) must
  // fail by -tr(P1) w1 - tr(P2) w2 = -w1.
  GradedLieAlgebra alg("bumped", {"v1", "v2", "v3", "vd1", "vd2", "vd3", "w1", "w2"},
                       {-1, -1, -1, -2, -2, -2, -3, -3});
  alg.set_bracket(0, 1, {{5, Rational(1)}});
  alg.set_bracket(0, 2, {{4, Rational(-1)}});
  alg.set_bracket(1, 2, {{3, Rational(1)}});
  MatrixQ p1(3, 3), p2(3, 3);
  p1.at(0, 1) = 1;
  p1.at(0, 0) = 1;  // the bump
  p2.at(0, 2) = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SparseVec val;
      if (p1.at(j, i) != 0) val[6] = p1.at(j, i);
      if (p2.at(j, i) != 0) val[7] = p2.at(j, i);
      alg.set_bracket(i, 3 + j, val);
    }
  const VerifyReport rep = verify(alg);
  CHECK(!rep.ok);
  REQUIRE(rep.jacobi.size() == 1);
  CHECK(rep.jacobi[0].i == 0);
  CHECK(rep.jacobi[0].j == 1);
  CHECK(rep.jacobi[0].k == 2);
  VecQ expected(8, Rational(0));
  expected[6] = -1;
  CHECK(rep.jacobi[0].defect == expected);
}

TEST_CASE("reading the plane back off the (3,6,8) model") {
  const GradedLieAlgebra n = catalog("n_368");
  const MatrixPlane p = plane_from_symbol(n);
  MatrixQ q1(3, 3), q2(3, 3);
  q1.at(1, 0) = -1;  // -E_21
  q2.at(1, 2) = -1;  // -E_23
  CHECK(p.p1 == q1);
  CHECK(p.p2 == q2);
  const MatrixQ cert = plane_roundtrip_certificate(n);
  CHECK(check_iso_certificate(symbol_from_plane(p, "reread"), n, cert));
}

TEST_CASE("round trip is the literal identity on plane-built symbols") {
  std::mt19937 rng(7);
  std::vector<MatrixPlane> planes{plane_pi1(), plane_pi2()};
  for (int k = 0; k < 10; ++k) planes.push_back(random_traceless_plane(rng));
  for (std::size_t k = 0; k < planes.size(); ++k) {
    INFO("plane " << k);
    const GradedLieAlgebra alg = symbol_from_plane(planes[k], "p");
    CHECK(verify(alg).ok);
    const MatrixPlane back = plane_from_symbol(alg);
    CHECK(back.p1 == planes[k].p1);
    CHECK(back.p2 == planes[k].p2);
    const MatrixQ cert = plane_roundtrip_certificate(alg);
    CHECK(check_iso_certificate(symbol_from_plane(back, "back"), alg, cert));
  }
}

TEST_CASE("conjugation certificates between plane symbols") {
  const MatrixQ g = swap_12();
  const MatrixPlane conj = conjugate_plane(plane_pi1(), g);
  const MatrixQ cert = plane_conjugation_certificate(plane_pi1(), conj, g);
  CHECK(check_iso_certificate(symbol_from_plane(plane_pi1(), "a"),
                              symbol_from_plane(conj, "b"), cert));
  // The transpose plane is not conjugate to the original via the identity.
  CHECK_THROWS_AS(plane_conjugation_certificate(plane_pi1(), plane_pi2(), MatrixQ::identity(3)),
                  std::domain_error);
}

TEST_CASE("the first distinguished plane is certified isomorphic to the model") {
  const GradedLieAlgebra n = catalog("n_368");
  const GradedLieAlgebra p1sym = catalog("pi1_symbol");
  // The model's plane has common image line <e2>; the distinguished plane
  // has <e1>; both consist of all w xi^T with xi annihilating w, so the
  // transposition (1 2) conjugates one onto the other.
  const MatrixPlane plane_n = plane_from_symbol(n);
  const MatrixQ conj_cert = plane_conjugation_certificate(plane_pi1(), plane_n, swap_12());
  const MatrixQ rt_cert = plane_roundtrip_certificate(n);
  const MatrixQ total = rt_cert * conj_cert;
  CHECK(check_iso_certificate(p1sym, n, total));
  CHECK(fingerprint(p1sym) == fingerprint(n));
}

TEST_CASE("pair-built symbols carry the stated brackets") {
  const GradedLieAlgebra a1 = catalog("a1_symbol");
  const GradedLieAlgebra a2 = catalog("a2_symbol");
  CHECK(verify(a1).ok);
  CHECK(verify(a2).ok);
  const auto idx1 = [&](const char* n) { return a1.index_of(n); };
  const auto idx2 = [&](const char* n) { return a2.index_of(n); };
  // First pair: A = E_13 acts on W by 0; [v3, vd1] = w, degree -4 pairing zero.
  CHECK(a1.bracket_basis(idx1("v3"), idx1("vd1")) == a1.basis_vector(idx1("w")));
  CHECK(a1.bracket_basis(idx1("v3"), idx1("w")) == a1.basis_vector(idx1("z")));
  for (int l = 0; l < 3; ++l)
    for (int k = l + 1; k < 3; ++k)
      CHECK(is_zero(a1.bracket_basis(idx1("vd1") + l, idx1("vd1") + k)));
  // Second pair: A = diag(1,1,-2) acts on W by 1; the forced pairing is
  // [vd1, vd2] = -z.
  CHECK(a2.bracket_basis(idx2("v1"), idx2("vd1")) == a2.basis_vector(idx2("w")));
  CHECK(a2.bracket_basis(idx2("v2"), idx2("vd2")) == a2.basis_vector(idx2("w")));
  CHECK(a2.bracket_basis(idx2("v3"), idx2("vd3")) ==
        Rational(-2) * a2.basis_vector(idx2("w")));
  CHECK(a2.bracket_basis(idx2("vd1"), idx2("vd2")) ==
        Rational(-1) * a2.basis_vector(idx2("z")));
  CHECK(fingerprint(a1) != fingerprint(a2));
  // Errors: non-traceless matrix, wrong scalar, degenerate subspace.
  MatrixQ nontrace(3, 3);
  nontrace.at(0, 0) = 1;
  CHECK_THROWS_AS(symbol_from_pair(nontrace, pair_w_space(), Rational(1), "bad"),
                  std::domain_error);
  MatrixQ e12(3, 3);
  e12.at(0, 1) = 1;
  CHECK_THROWS_AS(symbol_from_pair(e12, pair_w_space(), Rational(0), "bad"),
                  std::domain_error);
  CHECK_THROWS_AS(symbol_from_pair(pair_a1_matrix(),
                                   SubspaceQ::span({VecQ{1, 0, 0}}, 3), Rational(0), "bad"),
                  std::domain_error);
}

TEST_CASE("trace words vanish exactly on the nilpotent planes") {
  for (const MatrixPlane& p : {plane_pi1(), plane_pi2()}) {
    const auto words = trace_word_invariants(p);
    CHECK(words.size() == 126);  // 2 + 4 + ... + 64
    for (const auto& [word, value] : words) {
      INFO("word " << word);
      CHECK(value == 0);
    }
  }
  MatrixQ d1(3, 3), d2(3, 3);
  d1.at(0, 0) = 1;
  d1.at(1, 1) = -1;
  d2.at(1, 1) = 1;
  d2.at(2, 2) = -1;
  const auto words = trace_word_invariants({d1, d2}, 2);
  CHECK(words.size() == 6);
  CHECK(words[0].first == "1");
  CHECK(words[0].second == 0);
  CHECK(words[2].first == "11");
  CHECK(words[2].second == 2);  // tr(diag(1,-1,0)^2)
}
