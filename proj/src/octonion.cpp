#include "tanaka_lab/octonion.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tanaka_lab/catalog.hpp"

namespace tanaka_lab {

namespace {

using PolyVec = std::vector<Poly>;

// Quaternion product on coordinates over (1, i, j, k).
VecQ quat_mul(const VecQ& a, const VecQ& b) {
  VecQ r(4, Rational(0));
  r[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return r;
}

VecQ quat_conj(const VecQ& a) { return {a[0], -a[1], -a[2], -a[3]}; }

const VecQ& metric7() {
  static const VecQ g = {Rational(1),  Rational(1),  Rational(1), Rational(-1),
                         Rational(-1), Rational(-1), Rational(-1)};
  return g;
}

// cross_table()[a][b] holds the imaginary coordinates of e_{a+1} x e_{b+1}.
const std::vector<std::vector<VecQ>>& cross_table() {
  static const std::vector<std::vector<VecQ>> table = [] {
    std::vector<std::vector<VecQ>> t(7, std::vector<VecQ>(7));
    for (int a = 0; a < 7; ++a) {
      for (int b = 0; b < 7; ++b) {
        SplitOctonion x = SplitOctonion::unit(a + 1), y = SplitOctonion::unit(b + 1);
        SplitOctonion z = x * y - y * x;
        t[a][b] = (Rational(1, 2) * z).imaginary_part();
      }
    }
    return t;
  }();
  return table;
}

PolyVec coordinate_polys(int nvars, int from, int count) {
  PolyVec v;
  v.reserve(count);
  for (int i = 0; i < count; ++i) v.push_back(Poly::variable(nvars, from + i));
  return v;
}

PolyVec poly_cross(const PolyVec& u, const PolyVec& v) {
  const int nvars = u[0].nvars();
  const auto& ct = cross_table();
  PolyVec r(7, Poly(nvars));
  for (int a = 0; a < 7; ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < 7; ++b) {
      if (v[b].is_zero()) continue;
      const VecQ& c = ct[a][b];
      Poly prod = u[a] * v[b];
      for (int k = 0; k < 7; ++k) {
        if (c[k] != 0) r[k] = r[k] + c[k] * prod;
      }
    }
  }
  return r;
}

Poly poly_q(const PolyVec& u, const PolyVec& v) {
  Poly r(u[0].nvars());
  for (int a = 0; a < 7; ++a) r = r + metric7()[a] * (u[a] * v[a]);
  return r;
}

PolyVec apply7(const MatrixQ& m, const PolyVec& u) {
  PolyVec r(7, Poly(u[0].nvars()));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (m.at(i, j) != 0) r[i] = r[i] + m.at(i, j) * u[j];
    }
  }
  return r;
}

PolyVec poly_add(const PolyVec& a, const PolyVec& b) {
  PolyVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

PolyVec poly_scale(const Poly& f, const PolyVec& a) {
  PolyVec r = a;
  for (auto& p : r) p = f * p;
  return r;
}

VecQ point14(const TangentOctonion& p) {
  VecQ v = p.base.imaginary_part();
  VecQ w = p.fiber.imaginary_part();
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

// Gradient rows of the two tangent variety equations at a 14-point.
std::vector<VecQ> tangency_rows(const VecQ& pt) {
  VecQ r1(14, Rational(0)), r2(14, Rational(0));
  for (int a = 0; a < 7; ++a) {
    r1[a] = Rational(2) * metric7()[a] * pt[a];
    r2[a] = metric7()[a] * pt[7 + a];
    r2[7 + a] = metric7()[a] * pt[a];
  }
  return {r1, r2};
}

const std::vector<PolyForm>& prolonged_generators() {
  static const std::vector<PolyForm> gens = i_delta_prime_generators();
  return gens;
}

const std::vector<PolyForm>& prolonged_generator_differentials() {
  static const std::vector<PolyForm> d = [] {
    std::vector<PolyForm> out;
    for (const auto& g : prolonged_generators()) out.push_back(exterior_derivative(g));
    return out;
  }();
  return d;
}

// Pool of polynomial vector fields lying in the prolonged plane at every
// tangent point: for each skew map A the field (x0 x A x0, x0 x A x1 +
// x1 x A x0), the vertical fields (0, x0 x c) and (0, x0 x A x0), and the
// Euler field. Each membership identity is certified exactly at build
// time, so the pointwise frame search below never solves for coefficients.
const std::vector<PolyField>& frame_pool() {
  static const std::vector<PolyField> pool = [] {
    PolyVec x0p = coordinate_polys(14, 0, 7);
    PolyVec x1p = coordinate_polys(14, 7, 7);
    Poly f1 = poly_q(x0p, x0p);
    Poly f2 = poly_q(x0p, x1p);
    Poly zero(14);

    auto require = [](bool ok) {
      if (!ok) throw std::logic_error("frame pool membership identity failed");
    };
    auto zero_vec = [&](const PolyVec& v) {
      for (const auto& p : v) {
        if (!p.is_zero()) return false;
      }
      return true;
    };
    auto assemble = [](const PolyVec& top, const PolyVec& bottom) {
      PolyField f = top;
      f.insert(f.end(), bottom.begin(), bottom.end());
      return f;
    };

    std::vector<PolyField> pool;
    PolyVec zero7(7, zero);
    for (const MatrixQ& a : so_q_basis()) {
      PolyVec ax0 = apply7(a, x0p), ax1 = apply7(a, x1p);
      PolyVec top = poly_cross(x0p, ax0);
      PolyVec bottom = poly_add(poly_cross(x0p, ax1), poly_cross(x1p, ax0));
      require(zero_vec(poly_add(poly_cross(x0p, top), poly_scale(f1, ax0))));
      PolyVec mixed = poly_add(poly_cross(x0p, bottom), poly_cross(x1p, top));
      mixed = poly_add(mixed, poly_scale(f1, ax1));
      mixed = poly_add(mixed, poly_scale(Rational(2) * f2, ax0));
      require(zero_vec(mixed));
      require(poly_q(x0p, top).is_zero());
      require((poly_q(top, x1p) + poly_q(x0p, bottom)).is_zero());
      pool.push_back(assemble(top, bottom));
    }
    for (int c = 0; c < 7; ++c) {
      PolyVec ec(7, zero);
      ec[c] = Poly::constant(14, 1);
      PolyVec bottom = poly_cross(x0p, ec);
      Poly lambda = poly_q(x0p, ec);
      PolyVec lhs = poly_cross(x0p, bottom);
      for (int r = 0; r < 7; ++r) {
        Poly rhs = lambda * x0p[r] - f1 * ec[r];
        require((lhs[r] - rhs).is_zero());
      }
      require(poly_q(x0p, bottom).is_zero());
      pool.push_back(assemble(zero7, bottom));
    }
    for (const MatrixQ& a : so_q_basis()) {
      PolyVec ax0 = apply7(a, x0p);
      PolyVec bottom = poly_cross(x0p, ax0);
      require(zero_vec(poly_add(poly_cross(x0p, bottom), poly_scale(f1, ax0))));
      require(poly_q(x0p, bottom).is_zero());
      pool.push_back(assemble(zero7, bottom));
    }
    pool.push_back(assemble(x0p, x1p));
    return pool;
  }();
  return pool;
}

// Seven pool fields whose values frame the plane at the report's point.
std::vector<const PolyField*> plane_frame(const PointFrameReport& dp) {
  std::vector<const PolyField*> frame;
  SubspaceQ span(14);
  for (const PolyField& f : frame_pool()) {
    if (span.dim() == 7) break;
    VecQ v = field_value(f, dp.point);
    if (!dp.annihilator.contains(v)) {
      throw std::logic_error("pool field left the plane at a tangent point");
    }
    std::vector<VecQ> trial = span.basis();
    trial.push_back(v);
    SubspaceQ grown = SubspaceQ::span(trial, 14);
    if (grown.dim() > span.dim()) {
      span = std::move(grown);
      frame.push_back(&f);
    }
  }
  if (!(span == dp.annihilator)) {
    throw std::domain_error("frame pool fails to span the plane at this point");
  }
  return frame;
}

}  // namespace

SplitOctonion::SplitOctonion(VecQ coords) : c(std::move(coords)) {
  if (c.size() != 8) throw std::invalid_argument("split octonion needs 8 coordinates");
}

SplitOctonion SplitOctonion::unit(int index) {
  SplitOctonion x;
  x.c.at(index) = 1;
  return x;
}

SplitOctonion SplitOctonion::imaginary(const VecQ& v) {
  if (v.size() != 7) throw std::invalid_argument("imaginary part needs 7 coordinates");
  SplitOctonion x;
  for (int i = 0; i < 7; ++i) x.c[i + 1] = v[i];
  return x;
}

bool SplitOctonion::is_zero() const { return tanaka_lab::is_zero(c); }

bool SplitOctonion::is_imaginary() const { return c[0] == 0; }

VecQ SplitOctonion::imaginary_part() const { return VecQ(c.begin() + 1, c.end()); }

SplitOctonion operator+(const SplitOctonion& a, const SplitOctonion& b) {
  return SplitOctonion(a.c + b.c);
}

SplitOctonion operator-(const SplitOctonion& a, const SplitOctonion& b) {
  return SplitOctonion(a.c - b.c);
}

SplitOctonion operator*(const Rational& s, const SplitOctonion& a) {
  return SplitOctonion(s * a.c);
}

SplitOctonion operator*(const SplitOctonion& x, const SplitOctonion& y) {
  VecQ a(x.c.begin(), x.c.begin() + 4), b(x.c.begin() + 4, x.c.end());
  VecQ c(y.c.begin(), y.c.begin() + 4), d(y.c.begin() + 4, y.c.end());
  VecQ first = quat_mul(a, c) + quat_mul(d, quat_conj(b));
  VecQ second = quat_mul(quat_conj(a), d) + quat_mul(c, b);
  first.insert(first.end(), second.begin(), second.end());
  return SplitOctonion(std::move(first));
}

SplitOctonion conjugate(const SplitOctonion& x) {
  SplitOctonion r = x;
  for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

Rational split_q(const SplitOctonion& x) {
  Rational r(0);
  for (int i = 0; i < 4; ++i) r += x.c[i] * x.c[i];
  for (int i = 4; i < 8; ++i) r -= x.c[i] * x.c[i];
  return r;
}

Rational split_q(const SplitOctonion& x, const SplitOctonion& y) {
  Rational r(0);
  for (int i = 0; i < 4; ++i) r += x.c[i] * y.c[i];
  for (int i = 4; i < 8; ++i) r -= x.c[i] * y.c[i];
  return r;
}

SplitOctonion cross(const SplitOctonion& x, const SplitOctonion& y) {
  if (!x.is_imaginary() || !y.is_imaginary()) {
    throw std::invalid_argument("cross product needs imaginary arguments");
  }
  return Rational(1, 2) * (x * y - y * x);
}

TangentOctonion operator*(const TangentOctonion& a, const TangentOctonion& b) {
  return {a.base * b.base, a.base * b.fiber + a.fiber * b.base};
}

TangentOctonion operator*(const Rational& s, const TangentOctonion& a) {
  return {s * a.base, s * a.fiber};
}

std::vector<std::vector<VecQ>> octonion_table() {
  std::vector<std::vector<VecQ>> t(8, std::vector<VecQ>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) t[i][j] = (SplitOctonion::unit(i) * SplitOctonion::unit(j)).c;
  }
  return t;
}

std::vector<std::vector<VecQ>> quaternion_table() {
  std::vector<std::vector<VecQ>> t(4, std::vector<VecQ>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      VecQ a(4, Rational(0)), b(4, Rational(0));
      a[i] = 1;
      b[j] = 1;
      t[i][j] = quat_mul(a, b);
    }
  }
  return t;
}

std::vector<std::vector<VecQ>> componentwise_r2_table() {
  std::vector<std::vector<VecQ>> t(2, std::vector<VecQ>(2, VecQ(2, Rational(0))));
  t[0][0] = {Rational(1), Rational(0)};
  t[1][1] = {Rational(0), Rational(1)};
  return t;
}

std::vector<MatrixQ> derivation_algebra(const std::vector<std::vector<VecQ>>& table) {
  const std::size_t n = table.size();
  MatrixQ eqs(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (i * n + j) * n + k;
        for (std::size_t r = 0; r < n; ++r) eqs.at(row, k * n + r) += table[i][j][r];
        for (std::size_t s = 0; s < n; ++s) {
          eqs.at(row, s * n + i) -= table[s][j][k];
          eqs.at(row, s * n + j) -= table[i][s][k];
        }
      }
    }
  }
  std::vector<MatrixQ> out;
  for (const VecQ& sol : kernel_basis(eqs)) {
    MatrixQ d(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) d.at(r, s) = sol[r * n + s];
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<MatrixQ> so_q_basis() {
  std::vector<MatrixQ> out;
  for (int r = 0; r < 7; ++r) {
    for (int s = r + 1; s < 7; ++s) {
      MatrixQ a(7, 7);
      a.at(r, s) = metric7()[r];
      a.at(s, r) = -metric7()[s];
      out.push_back(std::move(a));
    }
  }
  return out;
}

bool in_k(const SplitOctonion& x) {
  return x.is_imaginary() && !x.is_zero() && split_q(x) == 0;
}

bool in_tk(const TangentOctonion& p) {
  return in_k(p.base) && p.fiber.is_imaginary() && split_q(p.base, p.fiber) == 0;
}

Poly k_quadric() {
  PolyVec x = coordinate_polys(7, 0, 7);
  return poly_q(x, x);
}

std::pair<Poly, Poly> tk_quadrics() {
  PolyVec x0 = coordinate_polys(14, 0, 7);
  PolyVec x1 = coordinate_polys(14, 7, 7);
  return {poly_q(x0, x0), poly_q(x0, x1)};
}

SplitOctonion sample_k_point(std::mt19937_64& rng) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto draw = [&rng] { return Rational(static_cast<int>(rng() % 19u) - 9); };
  VecQ a(3, Rational(0));
  do {
    for (auto& v : a) v = draw();
  } while (is_zero(a));
  const int* perm = perms[rng() % 6];
  std::uint64_t signs = rng() % 8;
  VecQ c(8, Rational(0));
  for (int i = 0; i < 3; ++i) {
    c[1 + i] = a[i];
    Rational b = a[perm[i]];
    c[5 + i] = ((signs >> i) & 1) ? -b : b;
  }
  return SplitOctonion(std::move(c));
}

SplitOctonion sample_k_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_k_point(rng);
}

TangentOctonion sample_tk_point(std::mt19937_64& rng) {
  SplitOctonion base = sample_k_point(rng);
  auto draw = [&rng] { return Rational(static_cast<int>(rng() % 19u) - 9); };
  VecQ cand(7, Rational(0));
  for (auto& v : cand) v = draw();
  VecQ im = base.imaginary_part();
  int pivot = 0;
  while (im[pivot] == 0) ++pivot;  // one of the first three is nonzero
  Rational q(0);
  for (int a = 0; a < 7; ++a) q += metric7()[a] * im[a] * cand[a];
  cand[pivot] -= q / im[pivot];
  return {base, SplitOctonion::imaginary(cand)};
}

TangentOctonion sample_tk_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_tk_point(rng);
}

std::vector<PolyForm> omega0() {
  static const std::vector<PolyForm> forms = [] {
    std::vector<PolyForm> out(7, PolyForm(7));
    const auto& ct = cross_table();
    for (int r = 0; r < 7; ++r) {
      for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
          if (ct[a][b][r] != 0) out[r].add_term({b}, ct[a][b][r] * Poly::variable(7, a));
        }
      }
    }
    return out;
  }();
  return forms;
}

std::vector<PolyForm> omega1() {
  static const std::vector<PolyForm> forms = [] {
    std::vector<PolyForm> out(7, PolyForm(14));
    const auto& ct = cross_table();
    for (int r = 0; r < 7; ++r) {
      for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
          if (ct[a][b][r] == 0) continue;
          out[r].add_term({7 + b}, ct[a][b][r] * Poly::variable(14, a));
          out[r].add_term({b}, ct[a][b][r] * Poly::variable(14, 7 + a));
        }
      }
    }
    return out;
  }();
  return forms;
}

std::vector<PolyForm> pullback_omega0() {
  static const std::vector<PolyForm> forms = [] {
    MatrixQ proj(7, 14);
    for (int i = 0; i < 7; ++i) proj.at(i, i) = 1;
    std::vector<PolyForm> out;
    for (const auto& w : omega0()) out.push_back(pullback(w, proj));
    return out;
  }();
  return forms;
}

std::vector<PolyForm> i_delta_generators() {
  std::vector<PolyForm> out;
  auto w0 = omega0();
  for (int a = 0; a < 7; ++a) out.push_back(metric7()[a] * w0[a]);
  return out;
}

std::vector<PolyForm> i_delta_prime_generators() {
  std::vector<PolyForm> out;
  auto pb0 = pullback_omega0();
  for (int a = 0; a < 7; ++a) out.push_back(metric7()[a] * pb0[a]);
  auto w1 = omega1();
  for (const MatrixQ& m : so_q_basis()) {
    PolyForm phi(14);
    for (int a = 0; a < 7; ++a) {
      Poly coef(14);
      for (int s = 0; s < 7; ++s) {
        if (m.at(a, s) != 0) coef = coef + m.at(a, s) * Poly::variable(14, s);
      }
      phi = phi + (metric7()[a] * coef) * w1[a];
    }
    out.push_back(std::move(phi));
  }
  return out;
}

PointFrameReport delta_at(const SplitOctonion& x0) {
  if (!in_k(x0)) throw std::invalid_argument("point is not on the null cone");
  VecQ im = x0.imaginary_part();
  MatrixQ forms(8, 7);
  for (int a = 0; a < 7; ++a) forms.at(0, a) = Rational(2) * metric7()[a] * im[a];
  const auto& ct = cross_table();
  for (int r = 0; r < 7; ++r) {
    for (int b = 0; b < 7; ++b) {
      Rational acc(0);
      for (int a = 0; a < 7; ++a) acc += im[a] * ct[a][b][r];
      forms.at(1 + r, b) = acc;
    }
  }
  SubspaceQ ann = kernel_subspace(forms);
  return {std::move(im), std::move(forms), std::move(ann)};
}

PointFrameReport delta_prime_at(const TangentOctonion& p) {
  if (!in_tk(p)) throw std::invalid_argument("point is not on the tangent variety");
  VecQ pt = point14(p);
  std::vector<VecQ> rows = tangency_rows(pt);
  for (const auto& g : prolonged_generators()) rows.push_back(one_form_row(g, pt));
  MatrixQ forms = MatrixQ::from_rows(rows, 14);
  SubspaceQ ann = kernel_subspace(forms);
  return {std::move(pt), std::move(forms), std::move(ann)};
}

PointFrameReport derived_system(const TangentOctonion& p, int level) {
  if (level != 1 && level != 2) {
    throw std::invalid_argument("derived system level must be 1 or 2");
  }
  PointFrameReport dp = delta_prime_at(p);
  const VecQ& pt = dp.point;
  const auto& gens = prolonged_generators();
  const auto& dgens = prolonged_generator_differentials();
  const std::size_t ng = gens.size();

  std::vector<VecQ> values;
  std::vector<MatrixQ> curv;
  for (std::size_t i = 0; i < ng; ++i) {
    values.push_back(one_form_row(gens[i], pt));
    curv.push_back(two_form_matrix(dgens[i], pt));
  }

  // Combinations whose differentials vanish on the plane.
  MatrixQ b1 = dp.annihilator.basis_matrix();
  std::vector<MatrixQ> restricted;
  for (std::size_t i = 0; i < ng; ++i) restricted.push_back(b1 * curv[i] * b1.transpose());
  const std::size_t d1 = b1.rows();
  std::vector<VecQ> constraint;
  for (std::size_t r = 0; r < d1; ++r) {
    for (std::size_t s = r + 1; s < d1; ++s) {
      VecQ row(ng, Rational(0));
      for (std::size_t i = 0; i < ng; ++i) row[i] = restricted[i].at(r, s);
      constraint.push_back(std::move(row));
    }
  }
  std::vector<VecQ> combos = kernel_basis(MatrixQ::from_rows(constraint, ng));
  std::vector<VecQ> combo_values;
  for (const VecQ& c : combos) {
    VecQ acc(14, Rational(0));
    for (std::size_t i = 0; i < ng; ++i) {
      if (c[i] != 0) acc = acc + c[i] * values[i];
    }
    combo_values.push_back(std::move(acc));
  }
  SubspaceQ level1 = SubspaceQ::span(combo_values, 14);
  std::vector<VecQ> rows = tangency_rows(pt);
  for (const VecQ& r : level1.basis()) rows.push_back(r);
  MatrixQ forms1 = MatrixQ::from_rows(rows, 14);
  SubspaceQ ann1 = kernel_subspace(forms1);
  if (level == 1) return {pt, std::move(forms1), std::move(ann1)};

  // Second step through the bracket flag of the plane: coefficient
  // combinations of the generators no longer capture it, because the
  // differentials of the varying coefficients contribute on the larger
  // plane. Frame fields make the flag exact.
  std::vector<const PolyField*> frame = plane_frame(dp);
  std::vector<PolyField> brackets;
  std::vector<VecQ> bvalues;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      PolyField b = field_commutator(*frame[i], *frame[j]);
      VecQ v = field_value(b, pt);
      if (!ann1.contains(v)) {
        throw std::domain_error("frame bracket left the derived square at this point");
      }
      brackets.push_back(std::move(b));
      bvalues.push_back(std::move(v));
    }
  }
  std::vector<std::size_t> wsel;
  SubspaceQ grown = dp.annihilator;
  for (std::size_t i = 0; i < brackets.size() && wsel.size() < 3; ++i) {
    std::vector<VecQ> trial = grown.basis();
    trial.push_back(bvalues[i]);
    SubspaceQ next = SubspaceQ::span(trial, 14);
    if (next.dim() > grown.dim()) {
      grown = std::move(next);
      wsel.push_back(i);
    }
  }
  if (!(grown == ann1)) {
    throw std::domain_error("frame brackets fail to span the derived square");
  }
  std::vector<VecQ> rows2 = ann1.basis();
  for (std::size_t a = 0; a < wsel.size(); ++a) {
    for (const PolyField* f : frame) {
      rows2.push_back(field_value(field_commutator(*f, brackets[wsel[a]]), pt));
    }
    for (std::size_t b = a + 1; b < wsel.size(); ++b) {
      rows2.push_back(field_value(field_commutator(brackets[wsel[a]], brackets[wsel[b]]), pt));
    }
  }
  SubspaceQ ann2 = SubspaceQ::span(rows2, 14);
  MatrixQ forms2 = MatrixQ::from_rows(kernel_basis(ann2.basis_matrix()), 14);
  return {pt, std::move(forms2), std::move(ann2)};
}

CauchyReport cauchy_characteristic_at(const TangentOctonion& p) {
  PointFrameReport dp = delta_prime_at(p);
  const VecQ& pt = dp.point;

  VecQ zero7(7, Rational(0));
  VecQ base_im = p.base.imaginary_part();
  VecQ fiber_im = p.fiber.imaginary_part();
  std::vector<VecQ> generators;
  VecQ euler = base_im;
  euler.insert(euler.end(), fiber_im.begin(), fiber_im.end());
  generators.push_back(std::move(euler));
  PointFrameReport cone = delta_at(p.base);
  for (const VecQ& w : cone.annihilator.basis()) {
    VecQ vert = zero7;
    vert.insert(vert.end(), w.begin(), w.end());
    generators.push_back(std::move(vert));
  }
  SubspaceQ charspace = SubspaceQ::span(generators, 14);

  // Insertion into every generator differential must stay inside the
  // pointwise span of the system.
  std::vector<VecQ> system_rows;
  for (std::size_t r = 0; r < dp.forms.rows(); ++r) system_rows.push_back(dp.forms.row(r));
  SubspaceQ system = SubspaceQ::span(system_rows, 14);
  bool verified = true;
  for (const auto& dg : prolonged_generator_differentials()) {
    MatrixQ m = two_form_matrix(dg, pt);
    for (const VecQ& y : generators) {
      VecQ row(14, Rational(0));
      for (int j = 0; j < 14; ++j) {
        Rational acc(0);
        for (int i = 0; i < 14; ++i) acc += y[i] * m.at(i, j);
        row[j] = acc;
      }
      if (!system.contains(row)) verified = false;
    }
  }

  MatrixQ forms = MatrixQ::from_rows(kernel_basis(charspace.basis_matrix()), 14);
  SubspaceQ ann = kernel_subspace(forms);
  return {{pt, std::move(forms), std::move(ann)}, verified};
}

TangentOctonion psi(const TangentOctonion& p) {
  if (!in_tk(p)) throw std::invalid_argument("point is not on the tangent variety");
  Rational n(0);
  for (const Rational& v : p.base.c) n += v * v;
  return {n * p.base, cross(p.base, p.fiber)};
}

bool psi_certificate_at(const TangentOctonion& p) {
  TangentOctonion image = psi(p);
  bool ok = in_k(image.base);
  ok = ok && delta_at(image.base).annihilator.contains(image.fiber.imaginary_part());
  ok = ok && cross(p.base, image.fiber).is_zero();
  for (const Rational& t : {Rational(2), Rational(-3), Rational(1, 2)}) {
    TangentOctonion scaled = psi(t * p);
    ok = ok && scaled.base == (t * t * t) * image.base;
    ok = ok && scaled.fiber == (t * t) * image.fiber;
  }
  return ok;
}

PolyField derivation_lift(const MatrixQ& d) {
  if (d.rows() != 8 || d.cols() != 8) {
    throw std::invalid_argument("derivation lift needs an 8 x 8 matrix");
  }
  PolyField x(14, Poly(14));
  for (int r = 0; r < 7; ++r) {
    for (int s = 0; s < 7; ++s) {
      if (d.at(r + 1, s + 1) == 0) continue;
      x[r] = x[r] + d.at(r + 1, s + 1) * Poly::variable(14, s);
      x[7 + r] = x[7 + r] + d.at(r + 1, s + 1) * Poly::variable(14, 7 + s);
    }
  }
  return x;
}

PolyField vertical_lift(const MatrixQ& d) {
  if (d.rows() != 8 || d.cols() != 8) {
    throw std::invalid_argument("vertical lift needs an 8 x 8 matrix");
  }
  PolyField x(14, Poly(14));
  for (int r = 0; r < 7; ++r) {
    for (int s = 0; s < 7; ++s) {
      if (d.at(r + 1, s + 1) != 0) x[7 + r] = x[7 + r] + d.at(r + 1, s + 1) * Poly::variable(14, s);
    }
  }
  return x;
}

PolyField fiber_scaling_field() {
  PolyField x(14, Poly(14));
  for (int r = 0; r < 7; ++r) x[7 + r] = Poly::variable(14, 7 + r);
  return x;
}

PolyField euler_field() {
  PolyField x(14, Poly(14));
  for (int r = 0; r < 14; ++r) x[r] = Poly::variable(14, r);
  return x;
}

InvarianceReport infinitesimal_invariance(const PolyField& x, std::size_t samples,
                                          std::uint64_t seed) {
  if (x.size() != 14) throw std::invalid_argument("field must have 14 components");
  const auto& gens = prolonged_generators();
  std::vector<PolyForm> moved;
  for (const auto& g : gens) moved.push_back(lie_derivative(x, g));

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    TangentOctonion p = sample_tk_point(rng);
    VecQ pt = point14(p);
    std::vector<VecQ> rows = tangency_rows(pt);
    for (const auto& g : gens) rows.push_back(one_form_row(g, pt));
    SubspaceQ system = SubspaceQ::span(rows, 14);
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (!system.contains(one_form_row(moved[i], pt))) return {false, pt, i};
    }
  }
  return {true, {}, 0};
}

bool fiber_scaling_certificate() {
  PolyField e = fiber_scaling_field();
  auto w1 = omega1();
  auto pb0 = pullback_omega0();
  for (int r = 0; r < 7; ++r) {
    if (!(lie_derivative(e, w1[r]) == w1[r])) return false;
    if (!lie_derivative(e, pb0[r]).is_zero()) return false;
  }
  return true;
}

QuotientSymbol symbol_of_quotient_at(const TangentOctonion& p) {
  PointFrameReport dp = delta_prime_at(p);
  const VecQ& pt = dp.point;
  std::vector<const PolyField*> frame = plane_frame(dp);

  CauchyReport cauchy = cauchy_characteristic_at(p);
  const SubspaceQ& charspace = cauchy.frame.annihilator;
  if (!cauchy.characteristic_verified || !dp.annihilator.contains(charspace)) {
    throw std::domain_error("characteristic space degenerates at this point");
  }

  // Representatives of the quotient grading: three frame fields complete
  // the characteristic space inside the plane, commutators complete the
  // plane to its derived square, and triple commutators exhaust the
  // tangent space of the variety.
  std::vector<VecQ> frame_values;
  for (const PolyField* f : frame) frame_values.push_back(field_value(*f, pt));

  std::vector<std::size_t> vsel;
  SubspaceQ grown = charspace;
  for (std::size_t i = 0; i < frame.size() && vsel.size() < 3; ++i) {
    std::vector<VecQ> trial = grown.basis();
    trial.push_back(frame_values[i]);
    SubspaceQ next = SubspaceQ::span(trial, 14);
    if (next.dim() > grown.dim()) {
      grown = std::move(next);
      vsel.push_back(i);
    }
  }
  if (vsel.size() != 3 || grown.dim() != 7) {
    throw std::domain_error("characteristic space has the wrong codimension");
  }

  SubspaceQ square = derived_system(p, 1).annihilator;
  SubspaceQ tangent = derived_system(p, 2).annihilator;

  std::vector<PolyField> bracket_fields;
  std::vector<VecQ> bracket_values;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      PolyField b = field_commutator(*frame[i], *frame[j]);
      VecQ v = field_value(b, pt);
      if (!square.contains(v)) {
        throw std::domain_error("frame bracket left the derived square at this point");
      }
      bracket_fields.push_back(std::move(b));
      bracket_values.push_back(std::move(v));
    }
  }
  std::vector<std::size_t> wsel;
  grown = dp.annihilator;
  for (std::size_t i = 0; i < bracket_fields.size() && wsel.size() < 3; ++i) {
    std::vector<VecQ> trial = grown.basis();
    trial.push_back(bracket_values[i]);
    SubspaceQ next = SubspaceQ::span(trial, 14);
    if (next.dim() > grown.dim()) {
      grown = std::move(next);
      wsel.push_back(i);
    }
  }
  if (wsel.size() != 3 || !(grown == square)) {
    throw std::domain_error("frame brackets fail to span the derived square");
  }

  std::vector<PolyField> triple_fields;
  std::vector<VecQ> triple_values;
  std::vector<std::pair<std::size_t, std::size_t>> triple_index;  // (frame, wsel slot)
  for (std::size_t a = 0; a < wsel.size(); ++a) {
    for (std::size_t i = 0; i < frame.size(); ++i) {
      PolyField b = field_commutator(*frame[i], bracket_fields[wsel[a]]);
      triple_values.push_back(field_value(b, pt));
      triple_fields.push_back(std::move(b));
      triple_index.emplace_back(i, a);
    }
  }
  std::vector<std::size_t> usel;
  grown = square;
  for (std::size_t i = 0; i < triple_fields.size() && usel.size() < 2; ++i) {
    std::vector<VecQ> trial = grown.basis();
    trial.push_back(triple_values[i]);
    SubspaceQ next = SubspaceQ::span(trial, 14);
    if (next.dim() > grown.dim()) {
      grown = std::move(next);
      usel.push_back(i);
    }
  }
  if (usel.size() != 2 || !(grown == tangent)) {
    throw std::domain_error("triple brackets fail to exhaust the tangent space");
  }

  // Coordinates on the tangent space adapted to the filtration: the
  // characteristic space, then the three grading slots.
  std::vector<VecQ> cols;
  for (const VecQ& c : charspace.basis()) cols.push_back(c);
  for (std::size_t i : vsel) cols.push_back(frame_values[i]);
  for (std::size_t i : wsel) cols.push_back(bracket_values[i]);
  for (std::size_t i : usel) cols.push_back(triple_values[i]);
  MatrixQ basis(14, 12);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < 14; ++r) basis.at(r, c) = cols[c][r];
  }
  auto coords = [&basis](const VecQ& z) {
    SolveResult sr = solve(basis, z);
    if (!sr.consistent || !sr.kernel.empty()) {
      throw std::logic_error("adapted coordinates are not unique");
    }
    return sr.particular;
  };

  GradedLieAlgebra symbol("delta_prime_mod_char", {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2"},
                          {-1, -1, -1, -2, -2, -2, -3, -3});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      VecQ z = field_value(field_commutator(*frame[vsel[i]], *frame[vsel[j]]), pt);
      VecQ c = coords(z);
      if (c[10] != 0 || c[11] != 0) {
        throw std::domain_error("plane bracket has a component beyond the derived square");
      }
      SparseVec value;
      for (std::size_t k = 0; k < 3; ++k) value[static_cast<int>(3 + k)] = c[7 + k];
      symbol.set_bracket(static_cast<int>(i), static_cast<int>(j), value);
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      VecQ z = field_value(field_commutator(*frame[vsel[i]], bracket_fields[wsel[j]]), pt);
      VecQ c = coords(z);
      SparseVec value;
      for (std::size_t k = 0; k < 2; ++k) value[static_cast<int>(6 + k)] = c[10 + k];
      symbol.set_bracket(static_cast<int>(i), static_cast<int>(3 + j), value);
    }
  }

  if (!verify(symbol).ok) {
    throw std::domain_error("extracted structure constants violate the graded identities");
  }

  QuotientSymbol out;
  out.symbol = symbol;
  GradedLieAlgebra flat = catalog("n_368");
  out.fingerprint_matches = fingerprint(symbol) == fingerprint(flat);
  if (auto cert = n368_certificate(symbol)) {
    out.certificate = *cert;
    out.certificate_verified = check_iso_certificate(flat, symbol, *cert);
  }
  return out;
}

}  // namespace tanaka_lab
