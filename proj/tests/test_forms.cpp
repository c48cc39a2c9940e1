#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "tanaka_lab/forms.hpp"

using namespace tanaka_lab;

namespace {

Poly var(int nvars, int i) { return Poly::variable(nvars, i); }

PolyForm dx(int nvars, int i) { return PolyForm::coordinate(nvars, i); }

}  // namespace

TEST_CASE("wedge product is graded anticommutative with vanishing squares") {
  const int n = 4;
  PolyForm a = dx(n, 0), b = dx(n, 1), c = dx(n, 2);
  CHECK(wedge(a, b) == -wedge(b, a));
  CHECK(wedge(a, a).is_zero());
  CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));

  // Unsorted index input normalizes with the permutation sign.
  PolyForm w(n);
  w.add_term({2, 0}, Poly::constant(n, 3));
  PolyForm expect(n);
  expect.add_term({0, 2}, Poly::constant(n, -3));
  CHECK(w == expect);
  w.add_term({1, 1}, Poly::constant(n, 5));
  CHECK(w == expect);

  // Function coefficients multiply through.
  PolyForm fa = var(n, 3) * a;
  PolyForm gb = var(n, 0) * b;
  CHECK(wedge(fa, gb).coefficient({0, 1}) == var(n, 3) * var(n, 0));
}

TEST_CASE("exterior derivative squares to zero and obeys the product rule") {
  const int n = 4;
  Poly f = var(n, 0) * var(n, 1) + Poly::constant(n, 2) * var(n, 2) * var(n, 2);
  Poly g = var(n, 3) * var(n, 0) - var(n, 1);
  PolyForm omega = f * dx(n, 0) + g * dx(n, 2) + (f * g) * wedge(dx(n, 0), dx(n, 3));

  CHECK(exterior_derivative(exterior_derivative(omega)).is_zero());
  CHECK(exterior_derivative(PolyForm::function(f)).coefficient({1}) == var(n, 0));

  // d(f omega) = df ^ omega + f d(omega).
  PolyForm left = exterior_derivative(f * omega);
  PolyForm right =
      wedge(exterior_derivative(PolyForm::function(f)), omega) + f * exterior_derivative(omega);
  CHECK(left == right);
}

TEST_CASE("interior product contracts the first slot as an antiderivation") {
  const int n = 3;
  PolyField x = {var(n, 1), Poly::constant(n, 2), var(n, 0) * var(n, 2)};
  CHECK(interior_product(x, dx(n, 0)) == PolyForm::function(var(n, 1)));
  CHECK(interior_product(x, dx(n, 1)) == PolyForm::function(Poly::constant(n, 2)));

  PolyForm a = var(n, 2) * dx(n, 0);
  PolyForm b = dx(n, 1) + var(n, 0) * dx(n, 2);
  PolyForm left = interior_product(x, wedge(a, b));
  PolyForm right = wedge(interior_product(x, a), b) - wedge(a, interior_product(x, b));
  CHECK(left == right);

  // Contracting twice with the same field kills any form.
  PolyForm two = wedge(b, a) + wedge(dx(n, 0), dx(n, 1));
  CHECK(interior_product(x, interior_product(x, two)).is_zero());
}

TEST_CASE("lie derivative matches the flow action on functions and commutes with d") {
  const int n = 3;
  PolyField x = {var(n, 1) * var(n, 1), var(n, 2), Poly::constant(n, 1)};
  Poly f = var(n, 0) * var(n, 2) + var(n, 1);

  Poly xf(n);
  for (int m = 0; m < n; ++m) xf = xf + x[m] * f.derivative(m);
  CHECK(lie_derivative(x, PolyForm::function(f)) == PolyForm::function(xf));

  PolyForm omega = f * dx(n, 1) + var(n, 2) * wedge(dx(n, 0), dx(n, 2));
  CHECK(lie_derivative(x, exterior_derivative(omega)) ==
        exterior_derivative(lie_derivative(x, omega)));

  // L_[x,y] = L_x L_y - L_y L_x on a 1-form.
  PolyField y = {Poly::constant(n, 1), var(n, 0), var(n, 1) * var(n, 2)};
  PolyForm alpha = var(n, 0) * dx(n, 2) + var(n, 1) * dx(n, 0);
  PolyForm left = lie_derivative(field_commutator(x, y), alpha);
  PolyForm right =
      lie_derivative(x, lie_derivative(y, alpha)) - lie_derivative(y, lie_derivative(x, alpha));
  CHECK(left == right);
}

TEST_CASE("pullback is functorial and commutes with wedge and d") {
  // Maps Q^2 -> Q^3 -> Q^2 given by matrices acting on coordinates.
  MatrixQ m1 = {{Rational(1), Rational(0), Rational(2)},
                {Rational(0), Rational(1), Rational(-1)}};        // 2 x 3
  MatrixQ m2 = {{Rational(1), Rational(3)}, {Rational(0), Rational(1)}, {Rational(2), Rational(0)}};  // 3 x 2

  Poly f = var(2, 0) * var(2, 1);
  PolyForm a = f * dx(2, 0) + dx(2, 1);
  PolyForm b = var(2, 1) * dx(2, 1);

  CHECK(pullback(pullback(a, m1), m2) == pullback(a, m1 * m2));
  CHECK(pullback(wedge(a, b), m1) == wedge(pullback(a, m1), pullback(b, m1)));
  CHECK(pullback(exterior_derivative(a), m1) == exterior_derivative(pullback(a, m1)));

  // Coordinate projection keeps the matching differentials.
  MatrixQ proj(2, 3);
  proj.at(0, 0) = 1;
  proj.at(1, 1) = 1;
  CHECK(pullback(dx(2, 0), proj) == dx(3, 0));
  CHECK_THROWS_AS(pullback(a, m2), std::invalid_argument);
}

TEST_CASE("evaluation extracts rows and skew matrices and fields obey Jacobi") {
  const int n = 3;
  VecQ p = {Rational(1), Rational(2), Rational(-1)};

  PolyForm alpha = var(n, 0) * dx(n, 1) + Poly::constant(n, 5) * dx(n, 2);
  VecQ row = one_form_row(alpha, p);
  CHECK(row == VecQ{Rational(0), Rational(1), Rational(5)});
  CHECK_THROWS_AS(one_form_row(wedge(dx(n, 0), dx(n, 1)), p), std::invalid_argument);

  PolyForm beta = var(n, 2) * wedge(dx(n, 0), dx(n, 1));
  MatrixQ sk = two_form_matrix(beta, p);
  CHECK(sk.at(0, 1) == Rational(-1));
  CHECK(sk.at(1, 0) == Rational(1));
  CHECK(sk + sk.transpose() == MatrixQ(n, n));
  CHECK_THROWS_AS(two_form_matrix(alpha, p), std::invalid_argument);

  PolyField x = {var(n, 1), var(n, 2) * var(n, 0), Poly::constant(n, 1)};
  PolyField y = {Poly::constant(n, 2), var(n, 0), var(n, 1)};
  PolyField z = {var(n, 2), Poly(n), var(n, 0) * var(n, 0)};
  PolyField jac = field_commutator(field_commutator(x, y), z);
  PolyField t1 = field_commutator(field_commutator(y, z), x);
  PolyField t2 = field_commutator(field_commutator(z, x), y);
  for (int k = 0; k < n; ++k) CHECK((jac[k] + t1[k] + t2[k]).is_zero());

  CHECK(field_value(x, p) == VecQ{Rational(2), Rational(-1), Rational(1)});
}
