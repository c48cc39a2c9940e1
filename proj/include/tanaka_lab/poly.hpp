#ifndef TANAKA_LAB_POLY_HPP
#define TANAKA_LAB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "tanaka_lab/rational.hpp"

namespace tanaka_lab {

// Exponent vector; length equals the number of variables of the polynomial.
using Mono = std::vector<int>;

// Graded lexicographic order. Compatible with monomial multiplication,
// which exact division relies on.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Q with a fixed variable count.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  const std::map<Mono, Rational, GrlexLess>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rational& c);
  bool is_constant() const;
  Rational constant_value() const;  // constant term (0 if absent)

  Poly operator-() const;
  Poly derivative(int var) const;
  Rational eval(const VecQ& point) const;

  // Substitute images[i] for variable i. All images must share a variable
  // count, which becomes the variable count of the result. A non-negative
  // max_total_degree truncates while multiplying.
  Poly substitute(const std::vector<Poly>& images, int max_total_degree = -1) const;

  Poly truncate(int max_total_degree) const;

  // Part of the given total degree.
  Poly homogeneous_part(int degree) const;

  // Exact quotient this/g; throws std::domain_error when not divisible.
  Poly exact_div(const Poly& g) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  int nvars_;
  std::map<Mono, Rational, GrlexLess> terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& a);

// Multiply while discarding all terms above the degree bound.
Poly mul_truncated(const Poly& a, const Poly& b, int max_total_degree);

// Truncated multiplicative inverse of a polynomial with nonzero constant
// term, via the geometric series. Throws std::domain_error otherwise.
Poly inverse_truncated(const Poly& a, int max_total_degree);

}  // namespace tanaka_lab

#endif
