#include "tanaka_lab/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tanaka_lab {

namespace {

int degree_of(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Mono& d, const Mono& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Mono mono_div(const Mono& m, const Mono& d) {
  Mono r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
  return r;
}

}  // namespace

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic tie-break
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
  const Mono unit(nvars_, 0);
  const auto it = terms_.find(unit);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  Poly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  Poly r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  return mul_truncated(a, b, -1);
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly r(a.nvars());
  if (s == 0) return r;
  for (const auto& [m, c] : a.terms()) r.add_term(m, s * c);
  return r;
}

Poly mul_truncated(const Poly& a, const Poly& b, int max_total_degree) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  Poly r(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    const int da = degree_of(ma);
    for (const auto& [mb, cb] : b.terms()) {
      if (max_total_degree >= 0 && da + degree_of(mb) > max_total_degree) continue;
      r.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational Poly::eval(const VecQ& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& images, int max_total_degree) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("image count");
  const int out_vars = images.empty() ? 0 : images[0].nvars();
  for (const Poly& im : images)
    if (im.nvars() != out_vars) throw std::invalid_argument("image arity mismatch");
  Poly result(out_vars);
  // Cache powers of each image as they are needed.
  std::vector<std::vector<Poly>> powers(nvars_, {Poly::constant(out_vars, Rational(1))});
  const auto power = [&](int var, int e) -> const Poly& {
    auto& cache = powers[var];
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul_truncated(cache.back(), images[var], max_total_degree));
    return cache[e];
  };
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_ && !term.is_zero(); ++i)
      if (m[i] > 0) term = mul_truncated(term, power(i, m[i]), max_total_degree);
    result = result + term;
  }
  return result;
}

Poly Poly::truncate(int max_total_degree) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) <= max_total_degree) r.add_term(m, c);
  return r;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == degree) r.add_term(m, c);
  return r;
}

Poly Poly::exact_div(const Poly& g) const {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (nvars_ != g.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly q(nvars_);
  Poly r = *this;
  const auto& glead = *g.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    if (!mono_divides(glead.first, rlead.first))
      throw std::domain_error("inexact polynomial division");
    const Mono qm = mono_div(rlead.first, glead.first);
    const Rational qc = rlead.second / glead.second;
    q.add_term(qm, qc);
    Poly t(nvars_);
    t.add_term(qm, qc);
    r = r - t * g;
  }
  return q;
}

Poly inverse_truncated(const Poly& a, int max_total_degree) {
  const Rational c0 = a.constant_value();
  if (c0 == 0) throw std::domain_error("inverse of polynomial with zero constant term");
  const int n = a.nvars();
  // a = c0 (1 - u) with u of positive valuation; invert by geometric series.
  const Poly u = Poly::constant(n, Rational(1)) - (Rational(1) / c0) * a;
  Poly inv = Poly::constant(n, Rational(1));
  Poly upow = Poly::constant(n, Rational(1));
  for (int k = 1; k <= max_total_degree; ++k) {
    upow = mul_truncated(upow, u, max_total_degree);
    if (upow.is_zero()) break;
    inv = inv + upow;
  }
  return (Rational(1) / c0) * inv;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print highest-order terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit_coeff = (mag == 1) && degree_of(m) > 0;
    if (!unit_coeff) out << to_string(mag);
    bool printed_var = false;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (printed_var || !unit_coeff) out << "*";
      out << names.at(i);
      if (m[i] > 1) out << "^" << m[i];
      printed_var = true;
    }
  }
  return out.str();
}

}  // namespace tanaka_lab
