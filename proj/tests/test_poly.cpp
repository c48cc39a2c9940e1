#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tanaka_lab/poly.hpp"
#include "tanaka_lab/poly_matrix.hpp"

using namespace tanaka_lab;

namespace {

Poly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(0, max_degree);
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Mono m(nvars, 0);
    int budget = max_degree;
    for (int i = 0; i < nvars; ++i) {
      const int e = expo(rng) % (budget + 1);
      m[i] = e;
      budget -= e;
    }
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

VecQ random_point(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> num(-3, 3);
  VecQ v(nvars);
  for (auto& x : v) x = num(rng);
  return v;
}

}  // namespace

TEST_CASE("arithmetic commutes with evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, 3, 3, 5);
    const Poly b = random_poly(rng, 3, 3, 5);
    const VecQ pt = random_point(rng, 3);
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    CHECK((a - b).eval(pt) == a.eval(pt) - b.eval(pt));
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("exact division inverts multiplication and rejects non-multiples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = random_poly(rng, 2, 3, 4);
    Poly b = random_poly(rng, 2, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).exact_div(b) == a);
  }
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const Poly one = Poly::constant(2, Rational(1));
  CHECK_THROWS_AS((x * x + y).exact_div(x + one), std::domain_error);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(rng, 2, 2, 4);
    const Poly b = random_poly(rng, 2, 2, 4);
    const std::vector<Poly> images{random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3)};
    const VecQ pt = random_point(rng, 3);
    CHECK((a * b).substitute(images).eval(pt) ==
          a.substitute(images).eval(pt) * b.substitute(images).eval(pt));
    CHECK((a + b).substitute(images).eval(pt) ==
          a.substitute(images).eval(pt) + b.substitute(images).eval(pt));
  }
}

TEST_CASE("truncated inverse is inverse modulo high degrees") {
  const int n = 2;
  Poly a = Poly::constant(n, Rational(3));
  a.add_term({1, 0}, Rational(2));
  a.add_term({0, 2}, Rational(-1));
  for (int order = 1; order <= 5; ++order) {
    const Poly inv = inverse_truncated(a, order);
    const Poly prod = mul_truncated(a, inv, order);
    CHECK(prod == Poly::constant(n, Rational(1)));
  }
  CHECK_THROWS_AS(inverse_truncated(Poly::variable(n, 0), 3), std::domain_error);
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(rng, 3, 3, 4);
    const Poly b = random_poly(rng, 3, 3, 4);
    for (int v = 0; v < 3; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
}

TEST_CASE("generic rank dominates the rank at every rational point") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    PolyMatrix m(3, std::vector<Poly>(4, Poly(2)));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 2, 2, 3);
    const std::size_t g = generic_rank(m);
    std::size_t best = 0;
    for (int pt_trial = 0; pt_trial < 12; ++pt_trial) {
      const VecQ pt = random_point(rng, 2);
      const std::size_t r = rank(eval_matrix(m, pt));
      CHECK(r <= g);
      best = std::max(best, r);
    }
    // With this many sample points the generic rank is attained.
    CHECK(best == g);
  }
}

TEST_CASE("generic rank detects structural degeneracy") {
  // Second row is x times the first: generic rank 1 despite nonzero rows.
  const Poly x = Poly::variable(1, 0);
  const Poly one = Poly::constant(1, Rational(1));
  PolyMatrix m{{one, x}, {x, x * x}};
  CHECK(generic_rank(m) == 1);
}
