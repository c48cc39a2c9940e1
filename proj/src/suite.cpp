#include "tanaka_lab/suite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/rational.hpp"
#include "tanaka_lab/octonion.hpp"
#include "tanaka_lab/symbol_atlas.hpp"
#include "tanaka_lab/symplectify.hpp"
#include "tanaka_lab/tanaka.hpp"

namespace tanaka_lab {

namespace {

void check(CriterionResult& c, std::string label, bool ok, std::string detail = "") {
  c.checks.push_back({std::move(label), ok, std::move(detail)});
}

template <typename T>
std::string seq_str(const T& values) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string hist_str(const std::map<int, std::size_t>& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [deg, dim] : h) {
    if (!first) os << ", ";
    os << deg << ": " << dim;
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<int, std::size_t> weight_histogram(const std::vector<int>& weights) {
  std::map<int, std::size_t> h;
  for (int w : weights) ++h[w];
  return h;
}

std::vector<int> generator_indices(const GradedLieAlgebra& alg) {
  std::vector<int> gens;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (alg.weights()[i] == -1) gens.push_back(static_cast<int>(i));
  }
  return gens;
}

Rational draw(std::mt19937_64& rng) { return Rational(static_cast<int>(rng() % 19u) - 9); }

SplitOctonion random_octonion(std::mt19937_64& rng) {
  VecQ c(8, Rational(0));
  for (auto& v : c) v = draw(rng);
  return SplitOctonion(std::move(c));
}

SplitOctonion random_imaginary(std::mt19937_64& rng) {
  SplitOctonion x = random_octonion(rng);
  x.c[0] = 0;
  return x;
}

MatrixPlane random_traceless_plane(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    MatrixQ p1(3, 3), p2(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        p1.at(r, col) = d(rng);
        p2.at(r, col) = d(rng);
      }
    p1.at(2, 2) = -p1.at(0, 0) - p1.at(1, 1);
    p2.at(2, 2) = -p2.at(0, 0) - p2.at(1, 1);
    MatrixQ span(9, 2);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        span.at(3 * r + col, 0) = p1.at(r, col);
        span.at(3 * r + col, 1) = p2.at(r, col);
      }
    if (rank(span) == 2) return {p1, p2};
  }
}

CriterionResult run_criterion(int id, std::string title,
                              const std::function<void(CriterionResult&)>& body) {
  CriterionResult c;
  c.id = id;
  c.title = std::move(title);
  try {
    body(c);
  } catch (const std::exception& e) {
    check(c, "completed without an exception", false, e.what());
  }
  c.passed = !c.checks.empty() &&
             std::all_of(c.checks.begin(), c.checks.end(),
                         [](const CheckResult& r) { return r.passed; });
  return c;
}

// 1. Every catalog algebra satisfies the Jacobi and grading identities.
void criterion_catalog(CriterionResult& c) {
  const std::array<const char*, 11> names = {
      "n_368",     "s_jacobi",   "g2_split",   "g_29",      "cartan_235", "free_36",
      "model_367", "pi1_symbol", "pi2_symbol", "a1_symbol", "a2_symbol"};
  for (const char* name : names) {
    GradedLieAlgebra alg = catalog(name);
    VerifyReport rep = verify(alg);
    const bool ok = rep.ok && rep.jacobi.empty() && rep.grading.empty();
    check(c, std::string(name) + " verifies", ok, ok ? "" : rep.to_text(alg));
  }
}

// 2. Growth vectors of the four distinguished distributions.
void criterion_growth(CriterionResult& c) {
  const std::vector<std::pair<const char*, std::vector<std::size_t>>> table = {
      {"n_368", {3, 6, 8}},
      {"cartan_235", {2, 3, 5}},
      {"a1_symbol", {3, 6, 7, 8}},
      {"a2_symbol", {3, 6, 7, 8}},
  };
  for (const auto& [name, want] : table) {
    std::vector<std::size_t> got = growth_vector(catalog(name));
    check(c, std::string(name) + " growth vector", got == want,
          "expected " + seq_str(want) + ", got " + seq_str(got));
  }
}

// 3. The negative parts of the two regradings of the 29-dimensional algebra
// are certified isomorphic to the two 8-dimensional models.
void criterion_regrade(CriterionResult& c) {
  GradedLieAlgebra g = catalog("g_29");

  std::vector<int> wt1 = regrade_by_element(g, g29_grading_element(1));
  GradedLieAlgebra neg1 = negative_part(g, wt1, "neg1");
  check(c, "first negative part has the (3,6,8) fingerprint",
        fingerprint(neg1) == fingerprint(catalog("n_368")));
  auto cert1 = n368_certificate(neg1);
  const bool ok1 = cert1.has_value() &&
                   check_iso_certificate(catalog("n_368"), neg1, *cert1);
  check(c, "first negative part is certified isomorphic to n_368", ok1);

  std::vector<int> wt2 = regrade_by_element(g, g29_grading_element(2));
  GradedLieAlgebra neg2 = negative_part(g, wt2, "neg2");
  check(c, "second negative part has the depth-7 fingerprint",
        fingerprint(neg2) == fingerprint(catalog("s_jacobi")));
  MatrixQ cert2 = adapted_frame_certificate(neg2);
  check(c, "second negative part is certified isomorphic to s_jacobi",
        check_iso_certificate(catalog("s_jacobi"), neg2, cert2));
}

// 4. Universal prolongation totals, with the (2,3,5) case cross-checked
// degree by degree against the split exceptional algebra.
void criterion_prolong_totals(CriterionResult& c) {
  const std::vector<std::pair<const char*, std::size_t>> table = {
      {"n_368", 29},      {"s_jacobi", 29}, {"cartan_235", 14},
      {"pi2_symbol", 18}, {"a1_symbol", 23}, {"a2_symbol", 21},
  };
  for (const auto& [name, want] : table) {
    ProlongationResult r = prolong(catalog(name));
    const bool finite = r.finite.has_value() && *r.finite;
    std::ostringstream os;
    os << "expected " << want << ", got " << r.total_dim
       << (finite ? " (finite)" : " (finiteness unsettled)");
    check(c, std::string(name) + " prolongation total", finite && r.total_dim == want,
          os.str());
  }
  std::map<int, std::size_t> got = prolong(catalog("cartan_235")).graded_dims;
  std::map<int, std::size_t> want = weight_histogram(catalog("g2_split").weights());
  check(c, "cartan_235 prolongation matches g2_split degree by degree", got == want,
        "expected " + hist_str(want) + ", got " + hist_str(got));
}

// 5. The assembled prolongation of the (3,6,8) model is a Lie algebra with
// the structure of the 29-dimensional catalog entry.
void criterion_assemble(CriterionResult& c) {
  GradedLieAlgebra full = assemble(prolong(catalog("n_368")));
  check(c, "assembled algebra has dimension 29", full.dim() == 29);
  VerifyReport rep = verify(full);
  check(c, "assembled algebra verifies", rep.ok, rep.ok ? "" : rep.to_text(full));

  GradedLieAlgebra g = catalog("g_29");
  std::vector<int> wt1 = regrade_by_element(g, g29_grading_element(1));
  std::map<int, std::size_t> got = weight_histogram(full.weights());
  std::map<int, std::size_t> want = weight_histogram(wt1);
  check(c, "graded dimensions match the regraded 29-dimensional algebra", got == want,
        "expected " + hist_str(want) + ", got " + hist_str(got));

  StructureReport sr = structure_report(full);
  check(c, "maximal nilpotent ideal has dimension 14", sr.nilradical_dim == 14,
        "got " + std::to_string(sr.nilradical_dim));
  check(c, "radical has dimension 15", sr.radical_dim == 15,
        "got " + std::to_string(sr.radical_dim));
  check(c, "semisimple quotient has dimension 14", sr.quotient_dim == 14,
        "got " + std::to_string(sr.quotient_dim));
}

// 6. The closed-form count 23 = F_7 + 10 equals the first pair-built
// prolongation total and falls short of 29.
void criterion_count(CriterionResult& c) {
  std::size_t a = 1, b = 1;
  for (int i = 3; i <= 7; ++i) {
    std::size_t t = a + b;
    a = b;
    b = t;
  }
  const std::size_t predicted = b + 10;
  check(c, "seventh Fibonacci number plus ten is 23", predicted == 23,
        "got " + std::to_string(predicted));
  const std::size_t a1 = prolong(catalog("a1_symbol")).total_dim;
  check(c, "count equals the a1_symbol prolongation total", a1 == predicted,
        "total " + std::to_string(a1));
  const std::size_t full = prolong(catalog("n_368")).total_dim;
  check(c, "the 29-dimensional total strictly exceeds it", full == 29 && full > predicted,
        "totals " + std::to_string(full) + " vs " + std::to_string(predicted));
}

// 7. Flag survey verdicts over sampled covectors of four cotangent models.
void criterion_survey(std::uint64_t seed, CriterionResult& c) {
  struct Row {
    const char* name;
    int k, l;
    bool maximal;
  };
  const std::array<Row, 4> rows = {{{"n_368", 1, 1, false},
                                    {"free_36", 1, 0, true},
                                    {"model_367", 1, 1, true},
                                    {"pi2_symbol", 2, 0, true}}};
  for (const Row& row : rows) {
    GradedLieAlgebra alg = catalog(row.name);
    CotangentModel model = build_model(alg);
    std::vector<int> gens = generator_indices(alg);
    FlagSurvey s = survey_flags(model, gens, 25,
                                static_cast<unsigned>(2026 + seed));
    check(c, std::string(row.name) + " survey keeps 25 samples", s.samples.size() == 25,
          "kept " + std::to_string(s.samples.size()));
    {
      std::ostringstream os;
      os << "expected (k, l) = (" << row.k << ", " << row.l << "), got (" << s.k << ", "
         << s.l << ")";
      check(c, std::string(row.name) + " modal flag shape", s.k == row.k && s.l == row.l,
            os.str());
    }
    check(c, std::string(row.name) + " modal class verdict", s.maximal_class == row.maximal,
          row.maximal ? "expected maximal" : "expected nonmaximal");
    check(c, std::string(row.name) + " outliers within tolerance", s.outliers <= 2,
          std::to_string(s.outliers) + " outliers");
    if (!row.maximal) {
      const bool none_maximal =
          std::none_of(s.samples.begin(), s.samples.end(),
                       [](const JacobiFlagReport& r) { return r.maximal_class; });
      check(c, std::string(row.name) + " nonmaximal at every sample", none_maximal);
    }
  }
}

// 8. The graded algebra extracted at sampled generic covectors of the
// (3,6,8) model is certified isomorphic to the depth-7 model.
void criterion_extraction(std::uint64_t seed, CriterionResult& c) {
  GradedLieAlgebra alg = catalog("n_368");
  CotangentModel model = build_model(alg);
  std::vector<int> gens = generator_indices(alg);
  const std::vector<std::size_t> want_graded = {2, 2, 2, 2, 1, 1, 1};
  const std::vector<std::size_t> want_filtration = {4, 6, 8, 10, 11, 12, 13};
  for (std::uint64_t base : {5ull, 21ull, 100ull}) {
    const unsigned s = static_cast<unsigned>(base + seed);
    const std::string tag = "seed " + std::to_string(s) + ": ";
    VecQ lam = sample_covector(model, gens, s);
    JTExtract ext = jacobi_tanaka_at(model, gens, lam);
    check(c, tag + "filtration dimensions", ext.filtration_dims == want_filtration,
          "got " + seq_str(ext.filtration_dims));
    check(c, tag + "graded dimensions (2,2,2,2,1,1,1)", ext.graded_dims == want_graded,
          "got " + seq_str(ext.graded_dims));
    VerifyReport rep = verify(ext.algebra);
    check(c, tag + "extracted algebra verifies", rep.ok,
          rep.ok ? "" : rep.to_text(ext.algebra));
    MatrixQ cert = adapted_frame_certificate(ext.algebra);
    check(c, tag + "certified isomorphic to s_jacobi",
          check_iso_certificate(catalog("s_jacobi"), ext.algebra, cert));
  }
}

// 9. Derivative identities of the characteristic field, the degenerate
// Legendre matrix, and the bounded projected flag over 50 sampled pairs.
void criterion_abnormal(std::uint64_t seed, CriterionResult& c) {
  CotangentModel model = build_model(catalog("n_368"));
  AbnormalReport rep = abnormal_report(model, 50, static_cast<unsigned>(2025 + seed));
  check(c, "first pairwise derivative vanishes identically", rep.du12_zero);
  check(c, "second pairwise derivative vanishes identically", rep.du31_zero);
  check(c, "third pairwise derivative equals the stated combination", rep.du23_identity);
  check(c, "Legendre matrix has identically zero determinant", rep.legendre_det_zero);
  check(c, "Legendre matrix is not identically zero", rep.legendre_nonzero_entry);
  check(c, "report keeps 50 samples", rep.samples.size() == 50,
        "kept " + std::to_string(rep.samples.size()));
  std::size_t modal = 0;
  bool all_ok = true;
  std::string witness;
  const std::vector<std::size_t> modal_dims = {5, 7, 8, 8};
  for (const AbnormalSample& s : rep.samples) {
    if (s.z_dims == modal_dims) ++modal;
    if (!(s.a1_rank2 && s.z_stable && s.base_dim <= 6)) {
      all_ok = false;
      if (witness.empty()) {
        witness = "flag dims " + seq_str(s.z_dims) + ", base dim " +
                  std::to_string(s.base_dim);
      }
    }
  }
  check(c, "every sample is stable with projected dimension at most 6", all_ok, witness);
  check(c, "modal flag shape (5,7,8,8) dominates", modal >= 40,
        std::to_string(modal) + " of 50");
  check(c, "projected dimension reaches 6 at the modal sample",
        rep.base_dim_six_count >= 40,
        std::to_string(rep.base_dim_six_count) + " of 50");
}

// 10. Plane ranks, the characteristic space, the cubic contraction map, the
// derivation algebra, and the two quadratic-form identities.
void criterion_octonion(std::uint64_t seed, int samples, CriterionResult& c) {
  const std::string n = std::to_string(samples);
  check(c, "derivation algebra of the product table has dimension 14",
        derivation_algebra(octonion_table()).size() == 14);

  std::mt19937_64 rngk(1000 + seed);
  bool cone_ok = true;
  for (int t = 0; t < samples && cone_ok; ++t) {
    cone_ok = delta_at(sample_k_point(rngk)).annihilator.dim() == 3;
  }
  check(c, "plane rank 3 at " + n + " sampled cone points", cone_ok);

  std::mt19937_64 rngt(1001 + seed);
  bool prolonged_ok = true, first_ok = true, second_ok = true, cauchy_ok = true,
       scaling_ok = true;
  for (int t = 0; t < samples; ++t) {
    TangentOctonion q = sample_tk_point(rngt);
    prolonged_ok = prolonged_ok && delta_prime_at(q).annihilator.dim() == 7;
    first_ok = first_ok && derived_system(q, 1).annihilator.dim() == 10;
    second_ok = second_ok && derived_system(q, 2).annihilator.dim() == 12;
    CauchyReport cr = cauchy_characteristic_at(q);
    cauchy_ok = cauchy_ok && cr.characteristic_verified && cr.frame.annihilator.dim() == 4;
    scaling_ok = scaling_ok && psi_certificate_at(q);
    TangentOctonion im = psi(q);
    TangentOctonion scaled = psi(Rational(-3) * q);
    scaling_ok = scaling_ok && scaled.base == Rational(-27) * im.base &&
                 scaled.fiber == Rational(9) * im.fiber;
  }
  check(c, "prolonged plane rank 7 at " + n + " sampled points", prolonged_ok);
  check(c, "first derived system rank 10 at " + n + " sampled points", first_ok);
  check(c, "second derived system rank 12 at " + n + " sampled points", second_ok);
  check(c, "characteristic space rank 4 with pointwise verification", cauchy_ok);
  check(c, "contraction map scales componentwise with degrees 3 and 2", scaling_ok);

  std::mt19937_64 rngp(1002 + seed);
  bool comp_ok = true;
  std::string witness;
  for (int t = 0; t < 500 && comp_ok; ++t) {
    SplitOctonion x = random_octonion(rngp), y = random_octonion(rngp);
    if (split_q(x * y) != split_q(x) * split_q(y)) {
      comp_ok = false;
      witness = "pair " + seq_str(x.c) + ", " + seq_str(y.c);
    }
  }
  check(c, "quadratic form is multiplicative on 500 sampled pairs", comp_ok, witness);

  SplitOctonion wx = SplitOctonion::unit(1), wy = SplitOctonion::unit(6);
  SplitOctonion xy = cross(wx, wy);
  Rational corrected = split_q(wx) * split_q(wy) - split_q(wx, wy) * split_q(wx, wy);
  check(c, "corrected cross-magnitude identity holds at the witness pair",
        split_q(xy) == corrected, "both sides " + to_string(corrected));
  check(c, "squared variant fails at the witness pair",
        split_q(xy) * split_q(xy) != corrected,
        to_string(split_q(xy) * split_q(xy)) + " vs " + to_string(corrected));
  std::mt19937_64 rngw(1003 + seed);
  bool corr_ok = true;
  for (int t = 0; t < 50 && corr_ok; ++t) {
    SplitOctonion a = random_imaginary(rngw), b = random_imaginary(rngw);
    corr_ok = split_q(cross(a, b)) ==
              split_q(a) * split_q(b) - split_q(a, b) * split_q(a, b);
  }
  check(c, "corrected identity holds on 50 imaginary pairs", corr_ok);
}

// 11. The quotient symbol at the distinguished null point is the (3,6,8)
// model, certified.
void criterion_quotient_symbol(CriterionResult& c) {
  TangentOctonion p{SplitOctonion::unit(1) + SplitOctonion::unit(4), SplitOctonion()};
  QuotientSymbol s = symbol_of_quotient_at(p);
  VerifyReport rep = verify(s.symbol);
  check(c, "extracted symbol verifies", rep.ok, rep.ok ? "" : rep.to_text(s.symbol));
  std::vector<std::size_t> got = growth_vector(s.symbol);
  check(c, "growth vector is (3,6,8)", got == std::vector<std::size_t>{3, 6, 8},
        "got " + seq_str(got));
  check(c, "fingerprint matches the flat model", s.fingerprint_matches);
  check(c, "certificate verifies",
        s.certificate_verified &&
            check_iso_certificate(catalog("n_368"), s.symbol, s.certificate));
}

// 12. Plane-built symbols round trip through their recovered planes, the
// first distinguished plane gives the flat model, and trace words vanish.
void criterion_atlas(std::uint64_t seed, CriterionResult& c) {
  GradedLieAlgebra flat = catalog("n_368");
  GradedLieAlgebra s1 = symbol_from_plane(plane_pi1(), "pi1");
  auto cert = n368_certificate(s1);
  check(c, "first plane symbol is certified isomorphic to n_368",
        cert.has_value() && check_iso_certificate(flat, s1, *cert));

  std::mt19937 rng(static_cast<unsigned>(7 + seed));
  std::vector<MatrixPlane> planes{plane_pi1(), plane_pi2()};
  for (int k = 0; k < 10; ++k) planes.push_back(random_traceless_plane(rng));
  bool rt_ok = true;
  std::string witness;
  for (std::size_t k = 0; k < planes.size(); ++k) {
    GradedLieAlgebra alg = symbol_from_plane(planes[k], "p");
    MatrixPlane back = plane_from_symbol(alg);
    MatrixQ rt_cert = plane_roundtrip_certificate(alg);
    const bool ok = verify(alg).ok && back.p1 == planes[k].p1 && back.p2 == planes[k].p2 &&
                    check_iso_certificate(symbol_from_plane(back, "back"), alg, rt_cert);
    if (!ok && witness.empty()) witness = "plane index " + std::to_string(k);
    rt_ok = rt_ok && ok;
  }
  check(c, "round trip is the literal identity on 12 planes", rt_ok, witness);

  for (const char* name : {"pi1", "pi2"}) {
    const MatrixPlane p = std::string(name) == "pi1" ? plane_pi1() : plane_pi2();
    const auto words = trace_word_invariants(p);
    bool zero = true;
    std::string word_witness;
    for (const auto& [word, value] : words) {
      if (value != 0) {
        zero = false;
        word_witness = "word " + word + " evaluates to " + to_string(value);
        break;
      }
    }
    check(c, std::string("trace words vanish on the ") + name + " plane", zero,
          word_witness);
  }
}

nlohmann::ordered_json criteria_json(const std::vector<CriterionResult>& criteria) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CriterionResult& c : criteria) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["title"] = c.title;
    jc["passed"] = c.passed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& r : c.checks) {
      nlohmann::ordered_json jr;
      jr["label"] = r.label;
      jr["passed"] = r.passed;
      jr["detail"] = r.detail;
      checks.push_back(std::move(jr));
    }
    jc["checks"] = std::move(checks);
    arr.push_back(std::move(jc));
  }
  return arr;
}

std::vector<CriterionResult> run_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(run_criterion(1, "catalog structure constants verify", criterion_catalog));
  out.push_back(run_criterion(2, "growth vectors", criterion_growth));
  out.push_back(run_criterion(3, "negative parts of the two regradings", criterion_regrade));
  out.push_back(run_criterion(4, "prolongation totals", criterion_prolong_totals));
  out.push_back(run_criterion(5, "assembled prolongation structure", criterion_assemble));
  out.push_back(run_criterion(6, "closed-form dimension count", criterion_count));
  out.push_back(run_criterion(7, "flag survey verdicts",
                              [&](CriterionResult& c) { criterion_survey(seed, c); }));
  out.push_back(run_criterion(8, "graded algebra extraction at covectors",
                              [&](CriterionResult& c) { criterion_extraction(seed, c); }));
  out.push_back(run_criterion(9, "characteristic field identities and projected flag",
                              [&](CriterionResult& c) { criterion_abnormal(seed, c); }));
  out.push_back(octonion_checks(seed, 20));
  out.push_back(run_criterion(11, "quotient symbol at the distinguished point",
                              criterion_quotient_symbol));
  out.push_back(run_criterion(12, "plane atlas round trips",
                              [&](CriterionResult& c) { criterion_atlas(seed, c); }));
  return out;
}

}  // namespace

bool SuiteResult::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

CriterionResult octonion_checks(std::uint64_t seed, int samples) {
  return run_criterion(10, "null cone model ranks and identities",
                       [&](CriterionResult& c) { criterion_octonion(seed, samples, c); });
}

SuiteResult run_suite(std::uint64_t seed) {
  SuiteResult out;
  out.seed = seed;
  out.criteria = run_criteria(seed);
  std::vector<CriterionResult> rerun = run_criteria(seed);
  const std::string first = criteria_json(out.criteria).dump();
  const std::string second = criteria_json(rerun).dump();
  CriterionResult c13;
  c13.id = 13;
  c13.title = "deterministic rerun";
  check(c13, "two runs with one seed serialize identically", first == second,
        "digests " + fnv1a_hex(first) + " / " + fnv1a_hex(second));
  c13.passed = c13.checks.front().passed;
  out.criteria.push_back(std::move(c13));
  return out;
}

nlohmann::ordered_json suite_json(const SuiteResult& result) {
  nlohmann::ordered_json doc;
  doc["seed"] = result.seed;
  doc["criteria"] = criteria_json(result.criteria);
  doc["all_passed"] = result.all_passed();
  return doc;
}

std::string suite_table(const SuiteResult& result) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CriterionResult& c : result.criteria) {
    os << "criterion " << std::setw(2) << c.id << "  "
       << (c.passed ? "pass" : "FAIL") << "  " << c.title << "\n";
    if (c.passed) {
      ++passed;
      continue;
    }
    for (const CheckResult& r : c.checks) {
      if (r.passed) continue;
      os << "    check: " << r.label;
      if (!r.detail.empty()) os << " [" << r.detail << "]";
      os << "\n";
    }
  }
  os << "suite: " << (result.all_passed() ? "pass" : "FAIL") << " (" << passed << "/"
     << result.criteria.size() << " criteria)\n";
  return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace tanaka_lab
