#ifndef TANAKA_LAB_FORMS_HPP
#define TANAKA_LAB_FORMS_HPP

#include <map>
#include <vector>

#include "tanaka_lab/matrix.hpp"
#include "tanaka_lab/poly.hpp"

namespace tanaka_lab {

// Polynomial vector field on Q^n: one coefficient polynomial per coordinate.
using PolyField = std::vector<Poly>;

// Differential form on Q^n with exact polynomial coefficients. Terms are
// keyed by strictly increasing coordinate index tuples (the empty tuple is
// the 0-form part); mixed degrees are allowed in one form.
class PolyForm {
 public:
  explicit PolyForm(int nvars = 0) : nvars_(nvars) {}

  static PolyForm function(const Poly& f);           // f as a 0-form
  static PolyForm coordinate(int nvars, int index);  // dx_index

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Poly>& terms() const { return terms_; }

  // Adds c dx_{idx[0]} ^ ... ^ dx_{idx[k-1]}: indices are sorted with the
  // permutation sign tracked, and terms with a repeated index vanish.
  void add_term(std::vector<int> idx, const Poly& c);

  // Coefficient of the (sorted) index tuple; zero polynomial if absent.
  Poly coefficient(const std::vector<int>& idx) const;

  PolyForm operator-() const;
  friend bool operator==(const PolyForm& a, const PolyForm& b) = default;

 private:
  int nvars_;
  std::map<std::vector<int>, Poly> terms_;
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm operator*(const Rational& c, const PolyForm& a);
PolyForm operator*(const Poly& f, const PolyForm& a);

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Exterior derivative; exterior_derivative(exterior_derivative(a)) == 0.
PolyForm exterior_derivative(const PolyForm& a);

// Interior product: the field is inserted into the first slot.
PolyForm interior_product(const PolyField& x, const PolyForm& a);

// Lie derivative along a field, via the Cartan homotopy formula.
PolyForm lie_derivative(const PolyField& x, const PolyForm& a);

// Pullback along the linear map y -> m y. The matrix sends the new space
// into the old one, so m has a.nvars() rows and the result has m.cols()
// variables; coefficients are composed with the map and each old dx
// becomes the matching combination of new coordinate differentials.
PolyForm pullback(const PolyForm& a, const MatrixQ& m);

// Commutator [x, y] of polynomial vector fields.
PolyField field_commutator(const PolyField& x, const PolyField& y);

// Componentwise evaluation of a field at a point.
VecQ field_value(const PolyField& x, const VecQ& point);

// Coefficient row of a 1-form at a point. Throws std::invalid_argument if
// the form has terms of any other degree.
VecQ one_form_row(const PolyForm& a, const VecQ& point);

// Skew coefficient matrix of a 2-form at a point: entry (i, j) with i < j
// is the coefficient of dx_i ^ dx_j. Throws like one_form_row.
MatrixQ two_form_matrix(const PolyForm& a, const VecQ& point);

}  // namespace tanaka_lab

#endif
