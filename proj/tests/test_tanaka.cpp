#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/tanaka.hpp"

using namespace tanaka_lab;

namespace {

GradedLieAlgebra abelian(int d) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < d; ++i) {
    names.push_back("t" + std::to_string(i));
    weights.push_back(-1);
  }
  return GradedLieAlgebra("ab" + std::to_string(d), names, weights);
}

std::vector<std::size_t> level_dims(const ProlongationResult& r) {
  std::vector<std::size_t> out;
  for (const ProlongationLevel& lvl : r.levels) out.push_back(lvl.dim());
  return out;
}

std::map<int, std::size_t> weight_histogram(const GradedLieAlgebra& alg) {
  std::map<int, std::size_t> h;
  for (int w : alg.weights()) ++h[w];
  return h;
}

}  // namespace

TEST_CASE("degree-zero prolongation dimensions") {
  CHECK(prolong_step(catalog("heis_3"), {}, 0).dim() == 4);
  CHECK(prolong_step(abelian(3), {}, 0).dim() == 9);
  CHECK(prolong_step(catalog("n_368"), {}, 0).dim() == 7);
}

TEST_CASE("prolongation rejects symbols with non-negative weights") {
  CHECK_THROWS_AS(prolong(catalog("g_29")), std::invalid_argument);
  CHECK_THROWS_AS(prolong(catalog("g2_split")), std::invalid_argument);
}

TEST_CASE("contact symbol prolongs without bound") {
  const ProlongationResult r = prolong(catalog("heis_3"), 4);
  CHECK(!r.finite.has_value());
  CHECK(level_dims(r) == std::vector<std::size_t>{4, 6, 9, 12, 16});
  CHECK(r.total_dim == 50);
  // Commutators of the top levels land beyond the computed range, so the
  // truncated result admits no consistent bracket table.
  CHECK_THROWS_AS(assemble(r), std::domain_error);
}

TEST_CASE("abelian line assembles to the affine algebra") {
  const ProlongationResult r = prolong(abelian(1), 0);
  CHECK(!r.finite.has_value());
  CHECK(level_dims(r) == std::vector<std::size_t>{1});
  const GradedLieAlgebra g = assemble(r);
  REQUIRE(g.dim() == 2);
  CHECK(g.basis_names()[1] == "p0_0");
  CHECK(g.weights() == std::vector<int>{-1, 0});
  const VecQ br = g.bracket_basis(0, 1);
  CHECK(br[0] == Rational(-1));
  CHECK(br[1] == Rational(0));
}

TEST_CASE("finite prolongation totals") {
  struct Row {
    const char* name;
    std::size_t total;
  };
  const std::vector<Row> rows = {{"n_368", 29},      {"s_jacobi", 29}, {"cartan_235", 14},
                                 {"pi2_symbol", 18}, {"a1_symbol", 23}, {"a2_symbol", 21},
                                 {"free_36", 21}};
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const ProlongationResult r = prolong(catalog(row.name));
    CHECK(r.finite == std::optional<bool>(true));
    CHECK(r.total_dim == row.total);
  }
}

TEST_CASE("graded dimensions of the rank-three flat model prolongation") {
  const ProlongationResult r = prolong(catalog("n_368"));
  CHECK(level_dims(r) == std::vector<std::size_t>{7, 6, 3, 3, 2});
  const std::map<int, std::size_t> expected = {{-3, 2}, {-2, 3}, {-1, 3}, {0, 7},
                                               {1, 6},  {2, 3},  {3, 3},  {4, 2}};
  CHECK(r.graded_dims == expected);
}

TEST_CASE("graded dimensions of the Jacobi symbol prolongation") {
  const ProlongationResult r = prolong(catalog("s_jacobi"));
  CHECK(level_dims(r) == std::vector<std::size_t>{4, 3, 2, 2, 2, 2, 1, 1, 1});
  const std::map<int, std::size_t> expected = {
      {-7, 1}, {-6, 1}, {-5, 1}, {-4, 2}, {-3, 2}, {-2, 2}, {-1, 2}, {0, 4},
      {1, 3},  {2, 2},  {3, 2},  {4, 2},  {5, 2},  {6, 1},  {7, 1},  {8, 1}};
  CHECK(r.graded_dims == expected);
}

TEST_CASE("graded dimensions of the (2,3,5) prolongation") {
  const ProlongationResult r = prolong(catalog("cartan_235"));
  CHECK(level_dims(r) == std::vector<std::size_t>{4, 2, 1, 2});
  CHECK(r.graded_dims == weight_histogram(catalog("g2_split")));
}

TEST_CASE("free rank-three step-two symbol prolongs to the split B3 algebra") {
  const ProlongationResult r = prolong(catalog("free_36"));
  CHECK(level_dims(r) == std::vector<std::size_t>{9, 3, 3});
  const GradedLieAlgebra g = assemble(r);
  REQUIRE(g.dim() == 21);
  CHECK(verify(g).ok);
  const StructureReport rep = structure_report(g);
  CHECK(rep.derived_dims == std::vector<std::size_t>{21});
  CHECK(rep.center_dim == 0);
  CHECK(rep.radical_dim == 0);
  CHECK(rep.quotient_dim == 21);
  CHECK(rank(killing_form(g)) == 21);
}

TEST_CASE("assembled flat-model prolongation") {
  const GradedLieAlgebra m = catalog("n_368");
  const GradedLieAlgebra g = assemble(prolong(m));
  REQUIRE(g.dim() == 29);
  CHECK(verify(g).ok);

  // The negative block reproduces the symbol verbatim.
  for (std::size_t i = 0; i < m.dim(); ++i) CHECK(g.weights()[i] == m.weights()[i]);
  for (int i = 0; i < static_cast<int>(m.dim()); ++i)
    for (int j = i + 1; j < static_cast<int>(m.dim()); ++j) {
      const VecQ big = g.bracket_basis(i, j);
      const VecQ small = m.bracket_basis(i, j);
      for (std::size_t t = 0; t < g.dim(); ++t)
        CHECK(big[t] == (t < m.dim() ? small[t] : Rational(0)));
    }

  const StructureReport rep = structure_report(g);
  CHECK(rep.center_dim == 0);
  CHECK(rep.radical_dim == 15);
  CHECK(rep.nilradical_dim == 14);
  CHECK(rep.quotient_dim == 14);
  CHECK(rank(killing_form(g)) == 15);
  CHECK(rank(killing_form(catalog("g_29"))) == 15);
}

TEST_CASE("assembled Jacobi-symbol prolongation") {
  const GradedLieAlgebra g = assemble(prolong(catalog("s_jacobi")));
  REQUIRE(g.dim() == 29);
  CHECK(verify(g).ok);
  const StructureReport rep = structure_report(g);
  CHECK(rep.center_dim == 0);
  CHECK(rep.radical_dim == 15);
  CHECK(rep.nilradical_dim == 14);
  CHECK(rep.quotient_dim == 14);
  CHECK(rank(killing_form(g)) == 15);
}

TEST_CASE("assembled (2,3,5) prolongation is semisimple") {
  const GradedLieAlgebra g = assemble(prolong(catalog("cartan_235")));
  REQUIRE(g.dim() == 14);
  CHECK(verify(g).ok);
  const StructureReport rep = structure_report(g);
  CHECK(rep.derived_dims == std::vector<std::size_t>{14});
  CHECK(rep.center_dim == 0);
  CHECK(rep.radical_dim == 0);
  CHECK(rep.nilradical_dim == 0);
  CHECK(rep.quotient_dim == 14);
  CHECK(rank(killing_form(g)) == 14);
}

TEST_CASE("structure report on nilpotent and abelian algebras") {
  const StructureReport ab = structure_report(abelian(3));
  CHECK(ab.center_dim == 3);
  CHECK(ab.derived_dims == std::vector<std::size_t>{3, 0});
  CHECK(ab.radical_dim == 3);
  CHECK(ab.nilradical_dim == 3);
  CHECK(ab.quotient_dim == 0);
  CHECK(killing_form(abelian(3)).is_zero());

  const StructureReport n = structure_report(catalog("n_368"));
  CHECK(n.center_dim == 4);
  CHECK(n.derived_dims == std::vector<std::size_t>{8, 5, 0});
  CHECK(n.radical_dim == 8);
  CHECK(n.nilradical_dim == 8);
  CHECK(n.quotient_dim == 0);
}

TEST_CASE("levi certificate verification") {
  const GradedLieAlgebra g = catalog("g_29");
  const StructureReport rep = structure_report(g, g29_levi_subspace());
  CHECK(rep.levi_checked);
  CHECK(rep.radical_dim == 15);
  CHECK(rep.nilradical_dim == 14);
  CHECK(rep.quotient_dim == 14);
  CHECK(rep.to_text().find("radical 15") != std::string::npos);
  CHECK(rep.to_text().find("levi certificate verified") != std::string::npos);

  VecQ e0(g.dim(), Rational(0));
  e0[0] = 1;
  CHECK_THROWS_AS(structure_report(g, SubspaceQ::span({e0}, g.dim())), std::domain_error);
}
