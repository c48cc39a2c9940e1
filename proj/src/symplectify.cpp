#include "tanaka_lab/symplectify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace tanaka_lab {

namespace {

VecQ unit_vec(std::size_t n, std::size_t i) {
  VecQ v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_gen(const std::vector<int>& gens, std::size_t b) {
  return std::find(gens.begin(), gens.end(), static_cast<int>(b)) != gens.end();
}

void validate_gens(const CotangentModel& model, const std::vector<int>& gens) {
  if (gens.size() != 3) {
    throw std::invalid_argument("exactly three distinct generators required");
  }
  for (int g : gens) {
    if (g < 0 || g >= static_cast<int>(model.n())) {
      throw std::invalid_argument("generator index out of range");
    }
  }
  if (gens[0] == gens[1] || gens[0] == gens[2] || gens[1] == gens[2]) {
    throw std::invalid_argument("exactly three distinct generators required");
  }
}

// Action of the frame field ubar_a on a fiber polynomial.
Poly ubar_apply(const CotangentModel& model, std::size_t a, const Poly& f) {
  const int n = static_cast<int>(model.n());
  Poly out(n);
  for (int b = 0; b < n; ++b) {
    Poly d = f.derivative(b);
    if (d.is_zero()) continue;
    Poly bi = bracket_impulse(model, a, b);
    if (bi.is_zero()) continue;
    out = out + d * bi;
  }
  return out;
}

// Uniform small integer in [-9, 9], stable across platforms.
int draw_int(std::mt19937& rng) { return static_cast<int>(rng() % 19u) - 9; }

VecQ euler_vector(const CotangentModel& model, const VecQ& lambda) {
  const std::size_t n = model.n();
  VecQ e(2 * n, Rational(0));
  for (std::size_t b = 0; b < n; ++b) e[n + b] = lambda[b];
  return e;
}

SubspaceQ skew_complement_in(const MatrixQ& sigma, const SubspaceQ& ambient_cap,
                             const SubspaceQ& s) {
  std::vector<VecQ> rows;
  rows.reserve(s.dim());
  for (const VecQ& v : s.basis()) rows.push_back(sigma * v);
  SubspaceQ comp = kernel_subspace(MatrixQ::from_rows(rows, sigma.cols()));
  return subspace_intersect(comp, ambient_cap);
}

struct FlagScratch {
  std::size_t n = 0;
  VecQ lambda;
  PolyVectorField cfield;
  VecQ c0;
  MatrixQ sigma;
  SubspaceQ tangent, xi, vertical;
  std::map<int, SubspaceQ> flag;  // J^(i) for -m <= i <= m+1
  // Polynomial fields whose values at lambda span the nonpositive flag
  // members: the first reps_count[i] entries span J^(i) for 1 >= i >= -m.
  std::vector<PolyVectorField> reps;
  std::map<int, std::size_t> reps_count;
  int m = 0, k = 0, l = 0;
  std::vector<std::size_t> t;
  std::map<int, std::size_t> vertical_dims;
};

[[noreturn]] void irregular() { throw std::domain_error("irregular point, resample"); }

FlagScratch compute_flag(const CotangentModel& model, const std::vector<int>& gens,
                         const VecQ& lambda) {
  const std::size_t n = model.n();
  if (lambda.size() != n) throw std::invalid_argument("covector has the wrong length");
  FlagScratch fs;
  fs.n = n;
  fs.lambda = lambda;
  fs.cfield = characteristic_field(model, gens);
  for (int d : gens) {
    if (lambda[static_cast<std::size_t>(d)] != 0) {
      throw std::invalid_argument("covector must annihilate the generators");
    }
  }
  fs.c0 = eval_field(fs.cfield, lambda);
  if (is_zero(fs.c0)) {
    throw std::domain_error("covector annihilates the square of the distribution");
  }

  fs.sigma = sigma_matrix_at(model, lambda);
  fs.tangent = annihilator_tangent_at(model, gens, lambda);
  fs.xi = xi_at(model, gens, lambda);
  if (fs.tangent.dim() != 2 * n - 3 || fs.xi.dim() != 2 * n - 4) irregular();

  std::vector<VecQ> vert;
  for (std::size_t b = 0; b < n; ++b) {
    if (!is_gen(gens, b)) vert.push_back(unit_vec(2 * n, n + b));
  }
  fs.vertical = SubspaceQ::span(vert, 2 * n);

  // J^(1) = characteristic line + vertical, J^(0) adds the lifted generators.
  fs.reps.push_back(fs.cfield);
  for (std::size_t b = 0; b < n; ++b) {
    if (!is_gen(gens, b)) {
      PolyVectorField f = zero_field(model);
      f.coef[n + b] = Poly::constant(static_cast<int>(n), Rational(1));
      fs.reps.push_back(f);
    }
  }
  fs.reps_count[1] = fs.reps.size();
  SubspaceQ j1 = subspace_sum(fs.vertical, SubspaceQ::span({fs.c0}, 2 * n));
  fs.flag[1] = j1;

  for (int d : gens) {
    PolyVectorField f = zero_field(model);
    f.coef[static_cast<std::size_t>(d)] = Poly::constant(static_cast<int>(n), Rational(1));
    for (int e : gens) {
      Poly bi = bracket_impulse(model, static_cast<std::size_t>(d),
                                static_cast<std::size_t>(e));
      if (!bi.is_zero()) f.coef[n + static_cast<std::size_t>(e)] = -bi;
    }
    fs.reps.push_back(f);
  }
  fs.reps_count[0] = fs.reps.size();
  SubspaceQ j0 = j1;
  std::vector<VecQ> vals;
  for (std::size_t r = fs.reps_count[1]; r < fs.reps.size(); ++r) {
    vals.push_back(eval_field(fs.reps[r], lambda));
  }
  j0 = subspace_sum(j0, SubspaceQ::span(vals, 2 * n));
  if (j0.dim() != j1.dim() + 2) irregular();
  fs.flag[0] = j0;

  // Downward: J^(-i) = J^(1-i) + [characteristic field, J^(1-i)].
  SubspaceQ cur = j0;
  std::size_t frontier_begin = 0, frontier_end = fs.reps.size();
  int i = 1;
  while (true) {
    SubspaceQ next = cur;
    std::size_t added_begin = fs.reps.size();
    for (std::size_t r = frontier_begin; r < frontier_end; ++r) {
      PolyVectorField br = field_bracket(model, fs.cfield, fs.reps[r]);
      VecQ v = eval_field(br, lambda);
      if (!next.contains(v)) {
        next = subspace_sum(next, SubspaceQ::span({v}, 2 * n));
        fs.reps.push_back(std::move(br));
      }
    }
    if (next.dim() == cur.dim()) {
      fs.m = i - 1;
      fs.reps.resize(added_begin);
      break;
    }
    fs.flag[-i] = next;
    fs.reps_count[-i] = fs.reps.size();
    cur = next;
    frontier_begin = added_begin;
    frontier_end = fs.reps.size();
    if (++i > static_cast<int>(2 * n)) irregular();
  }

  // Upward: skew complements inside the hyperplane.
  for (int j = 2; j <= fs.m + 1; ++j) {
    fs.flag[j] = skew_complement_in(fs.sigma, fs.xi, fs.flag.at(1 - j));
  }
  if (skew_complement_in(fs.sigma, fs.xi, fs.flag.at(0)) != fs.flag.at(1)) irregular();
  for (int j = -fs.m; j <= fs.m; ++j) {
    if (!fs.flag.at(j).contains(fs.flag.at(j + 1))) irregular();
  }

  for (int j = -fs.m; j <= fs.m; ++j) {
    std::size_t a = fs.flag.at(j).dim(), b = fs.flag.at(j + 1).dim();
    fs.t.push_back(a - b);
  }

  // The jump sequence must read (1^l, 2^(2k+1), 1^l) with k >= 1.
  std::size_t lead = 0;
  while (lead < fs.t.size() && fs.t[lead] == 1) ++lead;
  std::size_t mid = 0;
  while (lead + mid < fs.t.size() && fs.t[lead + mid] == 2) ++mid;
  std::size_t trail = fs.t.size() - lead - mid;
  for (std::size_t j = lead + mid; j < fs.t.size(); ++j) {
    if (fs.t[j] != 1) irregular();
  }
  if (trail != lead || mid < 3 || mid % 2 == 0) irregular();
  fs.l = static_cast<int>(lead);
  fs.k = static_cast<int>((mid - 1) / 2);

  VecQ euler = euler_vector(model, lambda);
  for (int j = 0; j <= fs.m + 1; ++j) {
    SubspaceQ vj = subspace_intersect(fs.flag.at(j), fs.vertical);
    if (!vj.contains(euler)) irregular();
    fs.vertical_dims[j] = vj.dim() - 1;
  }
  return fs;
}

// Monomials of total degree <= deg in the allowed variables.
void enumerate_monomials(const std::vector<std::size_t>& vars, std::size_t n, int deg,
                         std::size_t pos, Mono& scratch, std::vector<Mono>& out) {
  if (pos == vars.size()) {
    out.push_back(scratch);
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    scratch[vars[pos]] = e;
    enumerate_monomials(vars, n, deg - e, pos + 1, scratch, out);
  }
  scratch[vars[pos]] = 0;
}

struct RowKeyLess {
  GrlexLess g;
  bool operator()(const std::pair<std::size_t, Mono>& a,
                  const std::pair<std::size_t, Mono>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return g(a.second, b.second);
  }
};

// Polynomial vertical fields spanning J^(level) cap vertical at lambda, for
// level >= 2: fields sum_b q_b d_b with the q_b supported away from the
// generator coordinates, subject to sigma(X, R) = 0 modulo the generator
// impulses for every representative R of J^(1-level).
std::vector<PolyVectorField> vertical_level_reps(const CotangentModel& model,
                                                 const std::vector<int>& gens,
                                                 const FlagScratch& fs, int level) {
  const std::size_t n = model.n();
  std::vector<std::size_t> nd;
  for (std::size_t b = 0; b < n; ++b) {
    if (!is_gen(gens, b)) nd.push_back(b);
  }

  const int lower = 1 - level;
  std::size_t rep_count =
      lower < -fs.m ? fs.reps.size() : fs.reps_count.at(lower);

  std::vector<Poly> images;
  for (std::size_t b = 0; b < n; ++b) {
    images.push_back(is_gen(gens, b) ? Poly::constant(static_cast<int>(n), Rational(0))
                                     : Poly::variable(static_cast<int>(n), static_cast<int>(b)));
  }

  // Substituted ubar coefficients of the lower representatives; only these
  // enter the pairing against a vertical field.
  std::vector<std::vector<Poly>> rsub(rep_count);
  for (std::size_t r = 0; r < rep_count; ++r) {
    rsub[r].reserve(nd.size());
    for (std::size_t b : nd) rsub[r].push_back(fs.reps[r].coef[b].substitute(images));
  }

  const SubspaceQ& target = fs.flag.at(level);
  for (int deg = 1; deg <= 3; ++deg) {
    std::vector<Mono> monos;
    Mono scratch(n, 0);
    enumerate_monomials(nd, n, deg, 0, scratch, monos);

    const std::size_t cols = nd.size() * monos.size();
    std::map<std::pair<std::size_t, Mono>, std::size_t, RowKeyLess> row_of;
    std::vector<VecQ> rows;
    for (std::size_t r = 0; r < rep_count; ++r) {
      for (std::size_t bi = 0; bi < nd.size(); ++bi) {
        if (rsub[r][bi].is_zero()) continue;
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
          Poly contrib(static_cast<int>(n));
          contrib.add_term(monos[mi], Rational(1));
          contrib = contrib * rsub[r][bi];
          for (const auto& [mono, coef] : contrib.terms()) {
            auto key = std::make_pair(r, mono);
            auto it = row_of.find(key);
            if (it == row_of.end()) {
              it = row_of.emplace(key, rows.size()).first;
              rows.emplace_back(cols, Rational(0));
            }
            rows[it->second][bi * monos.size() + mi] += coef;
          }
        }
      }
    }

    std::vector<VecQ> ker = kernel_basis(MatrixQ::from_rows(rows, cols));
    std::vector<PolyVectorField> fields;
    std::vector<VecQ> vals;
    for (const VecQ& q : ker) {
      PolyVectorField f = zero_field(model);
      for (std::size_t bi = 0; bi < nd.size(); ++bi) {
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
          const Rational& cval = q[bi * monos.size() + mi];
          if (cval != 0) f.coef[n + nd[bi]].add_term(monos[mi], cval);
        }
      }
      fields.push_back(f);
      vals.push_back(eval_field(fields.back(), fs.lambda));
    }
    vals.push_back(fs.c0);
    SubspaceQ achieved = SubspaceQ::span(vals, 2 * n);
    if (achieved == target) return fields;
    if (!target.contains(achieved)) irregular();
  }
  throw std::domain_error("no vertical polynomial representatives at this covector");
}

}  // namespace

CotangentModel build_model(const GradedLieAlgebra& alg) {
  CotangentModel model{alg};
  const std::size_t n = model.n();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      VecQ cab = alg.bracket_basis(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t c = 0; c < n; ++c) {
        Poly lhs = ubar_apply(model, a, bracket_impulse(model, b, c)) -
                   ubar_apply(model, b, bracket_impulse(model, a, c));
        Poly rhs = quasi_impulse(model, alg.bracket(cab, unit_vec(n, c)));
        if (!(lhs == rhs)) {
          throw std::logic_error("frame calculus inconsistency on " +
                                 alg.basis_names()[a] + ", " + alg.basis_names()[b] +
                                 " applied to " + alg.basis_names()[c]);
        }
      }
    }
  }
  return model;
}

PolyVectorField zero_field(const CotangentModel& model) {
  return PolyVectorField{
      std::vector<Poly>(2 * model.n(), Poly(static_cast<int>(model.n())))};
}

PolyVectorField frame_field(const CotangentModel& model, std::size_t idx) {
  PolyVectorField f = zero_field(model);
  f.coef.at(idx) = Poly::constant(static_cast<int>(model.n()), Rational(1));
  return f;
}

Poly quasi_impulse(const CotangentModel& model, const VecQ& v) {
  const std::size_t n = model.n();
  Poly out(static_cast<int>(n));
  for (std::size_t b = 0; b < n; ++b) {
    if (v[b] != 0) {
      Mono m(n, 0);
      m[b] = 1;
      out.add_term(m, v[b]);
    }
  }
  return out;
}

Poly bracket_impulse(const CotangentModel& model, std::size_t i, std::size_t j) {
  return quasi_impulse(
      model, model.algebra.bracket_basis(static_cast<int>(i), static_cast<int>(j)));
}

Poly apply_field(const CotangentModel& model, const PolyVectorField& x, const Poly& f) {
  const std::size_t n = model.n();
  Poly out(static_cast<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (!x.coef[a].is_zero()) out = out + x.coef[a] * ubar_apply(model, a, f);
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (x.coef[n + b].is_zero()) continue;
    Poly d = f.derivative(static_cast<int>(b));
    if (!d.is_zero()) out = out + x.coef[n + b] * d;
  }
  return out;
}

PolyVectorField field_bracket(const CotangentModel& model, const PolyVectorField& x,
                              const PolyVectorField& y) {
  const std::size_t n = model.n();
  PolyVectorField out = zero_field(model);
  for (std::size_t a = 0; a < n; ++a) {
    bool xa = !x.coef[a].is_zero(), ya = !y.coef[a].is_zero();
    if (!xa && !ya) continue;
    std::vector<VecQ> ca;
    ca.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      ca.push_back(model.algebra.bracket_basis(static_cast<int>(a), static_cast<int>(c)));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a < b) {
        // [ubar_a, ubar_b] = sum_e c_ab^e ubar_e.
        Poly w = x.coef[a] * y.coef[b] - x.coef[b] * y.coef[a];
        if (!w.is_zero()) {
          for (std::size_t e = 0; e < n; ++e) {
            if (ca[b][e] != 0) out.coef[e] = out.coef[e] + ca[b][e] * w;
          }
        }
      }
      // [ubar_a, d_b] = -sum_c c_ac^b d_c.
      Poly w = x.coef[a] * y.coef[n + b] - x.coef[n + b] * y.coef[a];
      if (!w.is_zero()) {
        for (std::size_t c = 0; c < n; ++c) {
          if (ca[c][b] != 0) out.coef[n + c] = out.coef[n + c] - ca[c][b] * w;
        }
      }
    }
  }
  for (std::size_t idx = 0; idx < 2 * n; ++idx) {
    out.coef[idx] = out.coef[idx] + apply_field(model, x, y.coef[idx]) -
                    apply_field(model, y, x.coef[idx]);
  }
  return out;
}

Poly sigma_pair(const CotangentModel& model, const PolyVectorField& x,
                const PolyVectorField& y) {
  const std::size_t n = model.n();
  Poly out(static_cast<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Poly w = x.coef[a] * y.coef[b] - x.coef[b] * y.coef[a];
      if (!w.is_zero()) out = out + w * bracket_impulse(model, a, b);
    }
    Poly w = x.coef[n + a] * y.coef[a] - x.coef[a] * y.coef[n + a];
    if (!w.is_zero()) out = out + w;
  }
  return out;
}

Poly tautological_value(const CotangentModel& model, const PolyVectorField& x) {
  const std::size_t n = model.n();
  Poly out(static_cast<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (!x.coef[a].is_zero()) {
      out = out + x.coef[a] * quasi_impulse(model, unit_vec(n, a));
    }
  }
  return out;
}

VecQ eval_field(const PolyVectorField& x, const VecQ& lambda) {
  VecQ out;
  out.reserve(x.coef.size());
  for (const Poly& p : x.coef) out.push_back(p.eval(lambda));
  return out;
}

MatrixQ sigma_matrix_at(const CotangentModel& model, const VecQ& lambda) {
  const std::size_t n = model.n();
  MatrixQ m(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational v = bracket_impulse(model, a, b).eval(lambda);
      m.at(a, b) = v;
      m.at(b, a) = -v;
    }
    m.at(a, n + a) = Rational(-1);
    m.at(n + a, a) = Rational(1);
  }
  return m;
}

PolyVectorField characteristic_field(const CotangentModel& model,
                                     const std::vector<int>& gens) {
  validate_gens(model, gens);
  const std::size_t n = model.n();
  std::vector<VecQ> square;
  for (int d : gens) square.push_back(unit_vec(n, static_cast<std::size_t>(d)));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      square.push_back(model.algebra.bracket_basis(gens[i], gens[j]));
    }
  }
  if (SubspaceQ::span(square, n).dim() != 6) {
    throw std::invalid_argument("square not 6-dimensional");
  }
  PolyVectorField f = zero_field(model);
  const std::size_t d1 = gens[0], d2 = gens[1], d3 = gens[2];
  f.coef[d1] = bracket_impulse(model, d2, d3);
  f.coef[d2] = bracket_impulse(model, d3, d1);
  f.coef[d3] = bracket_impulse(model, d1, d2);
  return f;
}

VecQ sample_covector(const CotangentModel& model, const std::vector<int>& gens,
                     unsigned seed) {
  validate_gens(model, gens);
  const std::size_t n = model.n();
  std::mt19937 rng(seed);
  std::array<Poly, 3> pair = {bracket_impulse(model, gens[0], gens[1]),
                              bracket_impulse(model, gens[1], gens[2]),
                              bracket_impulse(model, gens[2], gens[0])};
  for (int attempt = 0; attempt < 200; ++attempt) {
    VecQ lam(n, Rational(0));
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_gen(gens, b)) lam[b] = draw_int(rng);
    }
    bool outside = false;
    for (const Poly& p : pair) {
      if (p.eval(lam) != 0) outside = true;
    }
    if (outside) return lam;
  }
  throw std::runtime_error("covector sampling failed to leave the annihilator of the square");
}

SubspaceQ annihilator_tangent_at(const CotangentModel& model, const std::vector<int>& gens,
                                 const VecQ& lambda) {
  validate_gens(model, gens);
  const std::size_t n = model.n();
  std::vector<VecQ> rows;
  for (int d : gens) {
    VecQ row(2 * n, Rational(0));
    for (std::size_t a = 0; a < n; ++a) {
      row[a] = bracket_impulse(model, a, static_cast<std::size_t>(d)).eval(lambda);
    }
    row[n + static_cast<std::size_t>(d)] = 1;
    rows.push_back(row);
  }
  return kernel_subspace(MatrixQ::from_rows(rows, 2 * n));
}

SubspaceQ xi_at(const CotangentModel& model, const std::vector<int>& gens,
                const VecQ& lambda) {
  const std::size_t n = model.n();
  VecQ srow(2 * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) srow[a] = lambda[a];
  SubspaceQ s_ker = kernel_subspace(MatrixQ::from_rows({srow}, 2 * n));
  return subspace_intersect(annihilator_tangent_at(model, gens, lambda), s_ker);
}

SubspaceQ skew_complement_at(const CotangentModel& model, const std::vector<int>& gens,
                             const VecQ& lambda, const SubspaceQ& s) {
  return skew_complement_in(sigma_matrix_at(model, lambda), xi_at(model, gens, lambda), s);
}

JacobiFlagReport jacobi_flag_at(const CotangentModel& model, const std::vector<int>& gens,
                                const VecQ& lambda) {
  FlagScratch fs = compute_flag(model, gens, lambda);
  JacobiFlagReport rep;
  rep.lambda = lambda;
  rep.k = fs.k;
  rep.l = fs.l;
  rep.m = fs.m;
  rep.maximal_class = 2 * fs.k + fs.l == static_cast<int>(model.n()) - 4;
  rep.xi_dim = fs.xi.dim();
  for (const auto& [i, sub] : fs.flag) rep.flag_dims[i] = sub.dim();
  rep.t = fs.t;
  rep.vertical_dims = fs.vertical_dims;
  return rep;
}

FlagSurvey survey_flags(const CotangentModel& model, const std::vector<int>& gens,
                        int samples, unsigned seed) {
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  validate_gens(model, gens);
  const std::size_t n = model.n();
  std::mt19937 rng(seed);
  FlagSurvey survey;
  while (survey.samples.size() < static_cast<std::size_t>(samples)) {
    int attempts = 0;
    while (true) {
      if (++attempts > 50) {
        throw std::runtime_error("too many irregular covectors while sampling");
      }
      VecQ lam(n, Rational(0));
      for (std::size_t b = 0; b < n; ++b) {
        if (!is_gen(gens, b)) lam[b] = draw_int(rng);
      }
      try {
        survey.samples.push_back(jacobi_flag_at(model, gens, lam));
        break;
      } catch (const std::domain_error&) {
        ++survey.rejected;
      }
    }
  }
  std::map<std::array<int, 3>, std::size_t> votes;
  for (const JacobiFlagReport& r : survey.samples) {
    ++votes[{r.k, r.l, r.maximal_class ? 1 : 0}];
  }
  std::array<int, 3> mode{};
  std::size_t best = 0;
  for (const auto& [key, count] : votes) {
    if (count > best) {
      best = count;
      mode = key;
    }
  }
  survey.k = mode[0];
  survey.l = mode[1];
  survey.maximal_class = mode[2] == 1;
  survey.outliers = survey.samples.size() - best;
  return survey;
}

std::vector<PolyVectorField> vertical_flag_reps(const CotangentModel& model,
                                                const std::vector<int>& gens,
                                                const VecQ& lambda, int level) {
  if (level < 1) throw std::invalid_argument("flag level must be at least 1");
  if (level == 1) {
    std::vector<PolyVectorField> out;
    const std::size_t n = model.n();
    validate_gens(model, gens);
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_gen(gens, b)) out.push_back(frame_field(model, n + b));
    }
    return out;
  }
  FlagScratch fs = compute_flag(model, gens, lambda);
  if (level > fs.m + 1) throw std::invalid_argument("flag level exceeds m + 1");
  return vertical_level_reps(model, gens, fs, level);
}

JTExtract jacobi_tanaka_at(const CotangentModel& model, const std::vector<int>& gens,
                           const VecQ& lambda) {
  const std::size_t n = model.n();
  FlagScratch fs = compute_flag(model, gens, lambda);
  const int m = fs.m, l = fs.l;

  // Pool of polynomial fields with cached pairwise brackets; per-level id
  // lists are cumulative along the filtration.
  std::vector<PolyVectorField> pool;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bracket_id;
  auto cached_bracket = [&](std::size_t a, std::size_t b) -> std::size_t {
    std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
    auto it = bracket_id.find(key);
    if (it == bracket_id.end()) {
      pool.push_back(field_bracket(model, pool[key.first], pool[key.second]));
      it = bracket_id.emplace(key, pool.size() - 1).first;
    }
    return it->second;
  };

  std::vector<std::vector<std::size_t>> level_ids(1);  // 1-based
  std::vector<SubspaceQ> level_span(1, SubspaceQ(2 * n));

  SubspaceQ span(2 * n);
  std::vector<std::size_t> ids;
  auto offer = [&](const PolyVectorField& f) {
    VecQ v = eval_field(f, lambda);
    if (!span.contains(v)) {
      span = subspace_sum(span, SubspaceQ::span({v}, 2 * n));
      pool.push_back(f);
      ids.push_back(pool.size() - 1);
    }
  };
  auto offer_id = [&](std::size_t id) {
    VecQ v = eval_field(pool[id], lambda);
    if (!span.contains(v)) {
      span = subspace_sum(span, SubspaceQ::span({v}, 2 * n));
      ids.push_back(id);
    }
  };

  // F^(-i) = J^(m+1-i) for i <= l+1, realized by the characteristic field
  // plus polynomial vertical representatives.
  for (int i = 1; i <= l + 1; ++i) {
    const int idx = m + 1 - i;
    offer(fs.cfield);
    if (idx >= 2) {
      for (const PolyVectorField& f : vertical_level_reps(model, gens, fs, idx)) offer(f);
    } else {
      for (std::size_t b = 0; b < n; ++b) {
        if (!is_gen(gens, b)) offer(frame_field(model, n + b));
      }
    }
    if (span != fs.flag.at(idx)) irregular();
    level_ids.push_back(ids);
    level_span.push_back(span);
  }

  // Deeper members absorb brackets of earlier ones.
  const std::size_t tangent_dim = 2 * n - 3;
  while (level_span.back().dim() < tangent_dim) {
    const int i = static_cast<int>(level_ids.size());
    if (i > static_cast<int>(4 * n)) irregular();
    for (int j = 1; i - j >= j; ++j) {
      for (std::size_t a : level_ids[j]) {
        for (std::size_t b : level_ids[i - j]) {
          if (a == b) continue;
          offer_id(cached_bracket(a, b));
        }
      }
    }
    if (span.dim() == level_span.back().dim()) irregular();
    if (m + 1 - i >= -m && span != fs.flag.at(m + 1 - i)) irregular();
    level_ids.push_back(ids);
    level_span.push_back(span);
  }
  const std::size_t mu = level_ids.size() - 1;

  JTExtract out;
  for (std::size_t i = 1; i <= mu; ++i) out.filtration_dims.push_back(level_span[i].dim());

  // Quotient modulo the deepest vertical member: graded slots are filled by
  // the representatives that first extend the span beyond it.
  SubspaceQ q0 = subspace_intersect(fs.flag.at(m + 1), fs.vertical);
  std::vector<std::pair<std::size_t, std::size_t>> glist;  // (level, pool id)
  SubspaceQ cur = q0;
  std::size_t prev_total = 0;
  for (std::size_t i = 1; i <= mu; ++i) {
    for (std::size_t id : level_ids[i]) {
      bool listed = false;
      for (const auto& [lev, gid] : glist) {
        if (gid == id) listed = true;
      }
      if (listed) continue;
      VecQ v = eval_field(pool[id], lambda);
      if (!cur.contains(v)) {
        cur = subspace_sum(cur, SubspaceQ::span({v}, 2 * n));
        glist.emplace_back(i, id);
      }
    }
    if (cur != subspace_sum(q0, level_span[i])) irregular();
    out.graded_dims.push_back(glist.size() - prev_total);
    prev_total = glist.size();
  }

  const std::size_t q0dim = q0.dim();
  const std::size_t nbasis = glist.size();
  MatrixQ bmat(2 * n, q0dim + nbasis);
  for (std::size_t c = 0; c < q0dim; ++c) {
    for (std::size_t r = 0; r < 2 * n; ++r) bmat.at(r, c) = q0.basis()[c][r];
  }
  for (std::size_t c = 0; c < nbasis; ++c) {
    VecQ v = eval_field(pool[glist[c].second], lambda);
    for (std::size_t r = 0; r < 2 * n; ++r) bmat.at(r, q0dim + c) = v[r];
  }

  std::vector<std::string> names;
  std::vector<int> weights;
  {
    std::size_t slot = 0, prev_level = 0;
    for (const auto& [lev, id] : glist) {
      if (lev != prev_level) {
        slot = 0;
        prev_level = lev;
      }
      names.push_back("b" + std::to_string(lev) + "_" + std::to_string(slot++));
      weights.push_back(-static_cast<int>(lev));
    }
  }
  GradedLieAlgebra jt("jacobi_tanaka", names, weights);
  for (std::size_t r = 0; r < nbasis; ++r) {
    for (std::size_t s = r + 1; s < nbasis; ++s) {
      const std::size_t di = glist[r].first, dj = glist[s].first;
      if (di + dj > mu) continue;
      std::size_t zid = cached_bracket(glist[r].second, glist[s].second);
      VecQ v = eval_field(pool[zid], lambda);
      if (glist[r].second > glist[s].second) {
        for (Rational& x : v) x = -x;
      }
      SolveResult sol = solve(bmat, v);
      if (!sol.consistent) irregular();
      SparseVec sv;
      for (std::size_t c = 0; c < nbasis; ++c) {
        const Rational& coef = sol.particular[q0dim + c];
        if (coef == 0) continue;
        if (glist[c].first == di + dj) {
          sv[static_cast<int>(c)] = coef;
        } else if (glist[c].first > di + dj) {
          irregular();
        }
      }
      jt.set_bracket(static_cast<int>(r), static_cast<int>(s), sv);
    }
  }
  if (!verify(jt).ok) {
    throw std::domain_error("extracted structure constants violate the graded identities");
  }
  out.algebra = std::move(jt);
  return out;
}

MatrixQ adapted_frame_certificate(const GradedLieAlgebra& extracted) {
  const std::size_t n = extracted.dim();
  const std::vector<std::size_t> expected = {2, 2, 2, 2, 1, 1, 1};
  for (int d = 1; d <= 7; ++d) {
    if (extracted.graded_dim(-d) != expected[static_cast<std::size_t>(d - 1)]) {
      throw std::domain_error("adapted frame requires graded dimensions (2,2,2,2,1,1,1)");
    }
  }
  if (n != 11) throw std::domain_error("adapted frame requires an 11-dimensional algebra");

  std::vector<std::vector<VecQ>> comp(8);
  for (int d = 1; d <= 7; ++d) comp[static_cast<std::size_t>(d)] = extracted.graded_component(-d).basis();

  // Kernel line of the pairing m_{-1} x m_{-b} -> m_{-b-1}.
  auto kernel_line = [&](const std::vector<VecQ>& bvecs) {
    std::vector<VecQ> rows;
    for (const VecQ& bv : bvecs) {
      for (std::size_t coord = 0; coord < n; ++coord) {
        VecQ row(2, Rational(0));
        for (std::size_t s = 0; s < 2; ++s) {
          row[s] = extracted.bracket(comp[1][s], bv)[coord];
        }
        rows.push_back(row);
      }
    }
    std::vector<VecQ> ker = kernel_basis(MatrixQ::from_rows(rows, 2));
    if (ker.size() != 1) {
      throw std::domain_error("adapted frame construction failed: pairing kernel not a line");
    }
    VecQ out(n, Rational(0));
    for (std::size_t s = 0; s < 2; ++s) out = out + ker[0][s] * comp[1][s];
    return out;
  };

  VecQ x = kernel_line(comp[5]);
  VecQ e2 = kernel_line(comp[3]);
  if (SubspaceQ::span({x, e2}, n).dim() != 2) {
    throw std::domain_error("adapted frame construction failed: kernel lines coincide");
  }
  auto br = [&](const VecQ& a, const VecQ& b) { return extracted.bracket(a, b); };

  VecQ e1 = br(x, e2);
  VecQ f1;
  for (const VecQ& v : comp[2]) {
    if (SubspaceQ::span({e1, v}, n).dim() == 2) {
      f1 = v;
      break;
    }
  }
  if (f1.empty()) {
    throw std::domain_error("adapted frame construction failed: no complement in degree -2");
  }
  VecQ e0 = br(x, e1), f0 = br(x, f1);
  VecQ em1 = br(x, e0), fm1 = br(x, f0);
  VecQ fm2 = br(x, fm1);
  VecQ eta = br(e0, f0), nu = br(f0, fm1);
  const std::vector<VecQ> images = {x, e2, e1, f1, e0, f0, em1, fm1, fm2, eta, nu};
  for (const VecQ& v : images) {
    if (v.empty() || is_zero(v)) {
      throw std::domain_error("adapted frame construction failed: a chain vector vanished");
    }
  }
  MatrixQ cert(n, images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) cert.at(r, c) = images[c][r];
  }
  return cert;
}

AbnormalReport abnormal_report(const CotangentModel& model, int samples, unsigned seed) {
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  const GradedLieAlgebra& alg = model.algebra;
  const std::size_t n = model.n();
  const int v1 = alg.index_of("e0"), v2 = alg.index_of("f0"), v3 = alg.index_of("x");
  const std::vector<int> gens = {v1, v2, v3};
  PolyVectorField c = characteristic_field(model, gens);

  Poly u12 = bracket_impulse(model, v1, v2);
  Poly u23 = bracket_impulse(model, v2, v3);
  Poly u31 = bracket_impulse(model, v3, v1);
  VecQ w23 = alg.bracket_basis(v2, v3);
  Poly q2 = quasi_impulse(model, alg.bracket(unit_vec(n, v2), w23));
  Poly q3 = quasi_impulse(model, alg.bracket(unit_vec(n, v3), w23));

  AbnormalReport rep;
  rep.du12_zero = apply_field(model, c, u12).is_zero();
  rep.du31_zero = apply_field(model, c, u31).is_zero();
  rep.du23_identity = apply_field(model, c, u23) == u31 * q2 + u12 * q3;

  Poly det = (q2 * q2) * (q3 * q3) - (q2 * q3) * (q2 * q3);
  rep.legendre_det_zero = det.is_zero();
  rep.legendre_nonzero_entry = !(q2 * q2).is_zero() || !(q2 * q3).is_zero() ||
                               !(q3 * q3).is_zero();

  // Basis of the annihilator of the square, for sampling, and the data for
  // lifting the generators to fields tangent to it.
  std::vector<VecQ> square;
  for (int d : gens) square.push_back(unit_vec(n, static_cast<std::size_t>(d)));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) square.push_back(alg.bracket_basis(gens[i], gens[j]));
  }
  RrefResult sq = rref(MatrixQ::from_rows(square, n));
  std::vector<VecQ> sq_basis;
  for (std::size_t r = 0; r < sq.rank; ++r) sq_basis.push_back(sq.matrix.row(r));
  std::vector<VecQ> ann = kernel_basis(MatrixQ::from_rows(sq_basis, n));

  std::vector<PolyVectorField> z0;
  for (int d : gens) {
    PolyVectorField f = zero_field(model);
    f.coef[static_cast<std::size_t>(d)] = Poly::constant(static_cast<int>(n), Rational(1));
    for (std::size_t r = 0; r < sq_basis.size(); ++r) {
      Poly fr = quasi_impulse(model, sq_basis[r]);
      Poly val = ubar_apply(model, static_cast<std::size_t>(d), fr);
      if (!val.is_zero()) {
        f.coef[n + sq.pivot_cols[r]] = f.coef[n + sq.pivot_cols[r]] - val;
      }
    }
    z0.push_back(f);
  }
  for (const VecQ& kv : ann) {
    PolyVectorField f = zero_field(model);
    for (std::size_t b = 0; b < n; ++b) {
      if (kv[b] != 0) f.coef[n + b] = Poly::constant(static_cast<int>(n), kv[b]);
    }
    z0.push_back(f);
  }

  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    AbnormalSample smp;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw std::runtime_error("abnormal sampling exhausted");
      VecQ lam(n, Rational(0));
      for (const VecQ& kv : ann) {
        int t = draw_int(rng);
        if (t != 0) lam = lam + Rational(t) * kv;
      }
      if (q2.eval(lam) != 0 || q3.eval(lam) != 0) {
        smp.lambda = lam;
        break;
      }
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw std::runtime_error("abnormal sampling exhausted");
      int a1 = draw_int(rng), a2 = draw_int(rng);
      if (a1 != 0 || a2 != 0) {
        smp.alpha1 = a1;
        smp.alpha2 = a2;
        break;
      }
    }

    PolyVectorField x2 = zero_field(model);
    x2.coef[static_cast<std::size_t>(v2)] = q3;
    x2.coef[static_cast<std::size_t>(v3)] = -q2;
    VecQ x1v = eval_field(frame_field(model, static_cast<std::size_t>(v1)), smp.lambda);
    VecQ x2v = eval_field(x2, smp.lambda);
    smp.a1_rank2 = SubspaceQ::span({x1v, x2v}, 2 * n).dim() == 2;

    PolyVectorField y = zero_field(model);
    y.coef[static_cast<std::size_t>(v1)] =
        Poly::constant(static_cast<int>(n), smp.alpha1);
    y.coef[static_cast<std::size_t>(v2)] = smp.alpha2 * q3;
    y.coef[static_cast<std::size_t>(v3)] = -(smp.alpha2 * q2);

    std::vector<VecQ> vals;
    for (const PolyVectorField& f : z0) vals.push_back(eval_field(f, smp.lambda));
    SubspaceQ zspan = SubspaceQ::span(vals, 2 * n);
    smp.z_dims.push_back(zspan.dim());
    std::vector<PolyVectorField> frontier = z0, kept = z0;
    SubspaceQ z2span = zspan;
    for (int step = 1; step <= 3; ++step) {
      std::vector<PolyVectorField> next;
      for (const PolyVectorField& f : frontier) {
        PolyVectorField brv = field_bracket(model, y, f);
        VecQ v = eval_field(brv, smp.lambda);
        if (!zspan.contains(v)) {
          zspan = subspace_sum(zspan, SubspaceQ::span({v}, 2 * n));
          next.push_back(brv);
        }
      }
      smp.z_dims.push_back(zspan.dim());
      frontier = std::move(next);
      if (step == 2) z2span = zspan;
    }
    smp.z_stable = smp.z_dims[3] == smp.z_dims[2];

    std::vector<VecQ> base;
    for (const VecQ& v : z2span.basis()) base.emplace_back(v.begin(), v.begin() + n);
    smp.base_dim = SubspaceQ::span(base, n).dim();
    if (smp.base_dim == 6) ++rep.base_dim_six_count;
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

}  // namespace tanaka_lab
