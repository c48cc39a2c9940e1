#include "tanaka_lab/forms.hpp"

#include <stdexcept>
#include <utility>

namespace tanaka_lab {

PolyForm PolyForm::function(const Poly& f) {
  PolyForm a(f.nvars());
  a.add_term({}, f);
  return a;
}

PolyForm PolyForm::coordinate(int nvars, int index) {
  PolyForm a(nvars);
  a.add_term({index}, Poly::constant(nvars, 1));
  return a;
}

void PolyForm::add_term(std::vector<int> idx, const Poly& c) {
  if (c.nvars() != nvars_) {
    throw std::invalid_argument("coefficient variable count mismatch");
  }
  if (c.is_zero()) return;
  for (int v : idx) {
    if (v < 0 || v >= nvars_) {
      throw std::invalid_argument("coordinate index out of range");
    }
  }
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i] == idx[i - 1]) return;
  }
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(std::move(idx), sign > 0 ? c : -c);
    return;
  }
  it->second = sign > 0 ? it->second + c : it->second - c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly PolyForm::coefficient(const std::vector<int>& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

PolyForm PolyForm::operator-() const {
  PolyForm a(nvars_);
  for (const auto& [idx, c] : terms_) a.add_term(idx, -c);
  return a;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("form variable count mismatch");
  }
  PolyForm r = a;
  for (const auto& [idx, c] : b.terms()) r.add_term(idx, c);
  return r;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }

PolyForm operator*(const Rational& c, const PolyForm& a) {
  return Poly::constant(a.nvars(), c) * a;
}

PolyForm operator*(const Poly& f, const PolyForm& a) {
  PolyForm r(a.nvars());
  for (const auto& [idx, c] : a.terms()) r.add_term(idx, f * c);
  return r;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("form variable count mismatch");
  }
  PolyForm r(a.nvars());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  }
  return r;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm r(a.nvars());
  for (const auto& [idx, c] : a.terms()) {
    for (int v = 0; v < a.nvars(); ++v) {
      Poly dc = c.derivative(v);
      if (dc.is_zero()) continue;
      std::vector<int> widx;
      widx.reserve(idx.size() + 1);
      widx.push_back(v);
      widx.insert(widx.end(), idx.begin(), idx.end());
      r.add_term(std::move(widx), dc);
    }
  }
  return r;
}

PolyForm interior_product(const PolyField& x, const PolyForm& a) {
  if (static_cast<int>(x.size()) != a.nvars()) {
    throw std::invalid_argument("field component count mismatch");
  }
  PolyForm r(a.nvars());
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      Poly coef = c * x[idx[pos]];
      if (pos % 2 == 1) coef = -coef;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q != pos) rest.push_back(idx[q]);
      }
      r.add_term(std::move(rest), coef);
    }
  }
  return r;
}

PolyForm lie_derivative(const PolyField& x, const PolyForm& a) {
  return interior_product(x, exterior_derivative(a)) +
         exterior_derivative(interior_product(x, a));
}

PolyForm pullback(const PolyForm& a, const MatrixQ& m) {
  if (m.rows() != static_cast<std::size_t>(a.nvars())) {
    throw std::invalid_argument("pullback matrix row count mismatch");
  }
  const int nold = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  std::vector<Poly> images;
  images.reserve(nold);
  for (int i = 0; i < nold; ++i) {
    Poly lin(n);
    for (int j = 0; j < n; ++j) {
      Mono mono(n, 0);
      mono[j] = 1;
      lin.add_term(mono, m.at(i, j));
    }
    images.push_back(lin);
  }
  std::vector<PolyForm> dimage;
  dimage.reserve(nold);
  for (int i = 0; i < nold; ++i) {
    PolyForm w(n);
    for (int j = 0; j < n; ++j) w.add_term({j}, Poly::constant(n, m.at(i, j)));
    dimage.push_back(w);
  }
  PolyForm r(n);
  for (const auto& [idx, c] : a.terms()) {
    PolyForm acc = PolyForm::function(c.substitute(images));
    for (int i : idx) acc = wedge(acc, dimage[i]);
    r = r + acc;
  }
  return r;
}

PolyField field_commutator(const PolyField& x, const PolyField& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("field component count mismatch");
  }
  const int n = static_cast<int>(x.size());
  PolyField r(n, Poly(n));
  for (int k = 0; k < n; ++k) {
    Poly acc(n);
    for (int m = 0; m < n; ++m) {
      if (!x[m].is_zero()) acc = acc + x[m] * y[k].derivative(m);
      if (!y[m].is_zero()) acc = acc - y[m] * x[k].derivative(m);
    }
    r[k] = acc;
  }
  return r;
}

VecQ field_value(const PolyField& x, const VecQ& point) {
  VecQ v(x.size(), Rational(0));
  for (std::size_t k = 0; k < x.size(); ++k) v[k] = x[k].eval(point);
  return v;
}

VecQ one_form_row(const PolyForm& a, const VecQ& point) {
  VecQ row(a.nvars(), Rational(0));
  for (const auto& [idx, c] : a.terms()) {
    if (idx.size() != 1) throw std::invalid_argument("expected a 1-form");
    row[idx[0]] = c.eval(point);
  }
  return row;
}

MatrixQ two_form_matrix(const PolyForm& a, const VecQ& point) {
  MatrixQ m(a.nvars(), a.nvars());
  for (const auto& [idx, c] : a.terms()) {
    if (idx.size() != 2) throw std::invalid_argument("expected a 2-form");
    Rational v = c.eval(point);
    m.at(idx[0], idx[1]) = v;
    m.at(idx[1], idx[0]) = -v;
  }
  return m;
}

}  // namespace tanaka_lab
