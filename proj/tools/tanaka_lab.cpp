#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tanaka_lab/algebra_io.hpp"
#include "tanaka_lab/catalog.hpp"
#include "tanaka_lab/lie_algebra.hpp"
#include "tanaka_lab/rational.hpp"
#include "tanaka_lab/suite.hpp"
#include "tanaka_lab/symbol_atlas.hpp"
#include "tanaka_lab/symplectify.hpp"
#include "tanaka_lab/tanaka.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tanaka_lab;

// Accumulates both output forms; exactly one is printed at the end, so the
// emitted bytes depend only on inputs, seed, and flags.
struct Output {
  bool json = false;
  ordered_json doc;
  std::ostringstream human;
};

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GradedLieAlgebra load_input_algebra(Output& out, const std::string& path) {
  const std::string bytes = read_file_bytes(path);
  ordered_json input;
  input["path"] = path;
  input["digest"] = fnv1a_hex(bytes);
  out.doc["input"] = std::move(input);
  return algebra_from_text(bytes);
}

int emit(Output& out, bool passed) {
  out.doc["passed"] = passed;
  if (out.json)
    std::cout << out.doc.dump(2) << "\n";
  else
    std::cout << out.human.str();
  return passed ? 0 : 1;
}

int fail_with(Output& out, const std::string& message, int code) {
  if (out.json) {
    out.doc["error"] = message;
    out.doc["passed"] = false;
    std::cout << out.doc.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
  return code;
}

ordered_json vecq_json(const VecQ& v) {
  ordered_json arr = ordered_json::array();
  for (const Rational& r : v) arr.push_back(to_string(r));
  return arr;
}

template <typename T>
ordered_json seq_json(const std::vector<T>& v) {
  ordered_json arr = ordered_json::array();
  for (const T& x : v) arr.push_back(x);
  return arr;
}

ordered_json hist_json(const std::map<int, std::size_t>& h) {
  ordered_json obj = ordered_json::object();
  for (const auto& [deg, dim] : h) obj[std::to_string(deg)] = dim;
  return obj;
}

template <typename T>
std::string seq_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad index list entry: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("bad index list entry: " + item);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

VecQ parse_rational_list(const std::string& text) {
  VecQ out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

std::vector<int> default_generators(const GradedLieAlgebra& alg) {
  std::vector<int> gens;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (alg.weights()[i] == -1) gens.push_back(static_cast<int>(i));
  }
  return gens;
}

ordered_json prolongation_json(const ProlongationResult& r) {
  ordered_json res;
  res["graded_dims"] = hist_json(r.graded_dims);
  std::vector<std::size_t> level_dims;
  for (const auto& level : r.levels) level_dims.push_back(level.dim());
  res["level_dims"] = seq_json(level_dims);
  res["total_dim"] = r.total_dim;
  if (r.finite.has_value())
    res["finite"] = *r.finite;
  else
    res["finite"] = "unknown";
  return res;
}

void prolongation_text(std::ostringstream& os, const ProlongationResult& r) {
  for (const auto& [deg, dim] : r.graded_dims) os << "degree " << deg << ": " << dim << "\n";
  os << "total " << r.total_dim << ", finite = ";
  if (r.finite.has_value())
    os << (*r.finite ? "yes" : "no");
  else
    os << "unknown";
  os << "\n";
}

int cmd_algebra(Output& out, const std::string& op, const std::string& file,
                const std::string& element, const std::string& negative_name,
                const std::string& out_path) {
  GradedLieAlgebra alg = load_input_algebra(out, file);
  ordered_json results;
  results["name"] = alg.name();
  bool passed = true;

  if (op == "verify") {
    VerifyReport rep = verify(alg);
    results["ok"] = rep.ok;
    ordered_json jac = ordered_json::array();
    for (const JacobiViolation& v : rep.jacobi) {
      ordered_json item;
      item["i"] = v.i;
      item["j"] = v.j;
      item["k"] = v.k;
      item["defect"] = vecq_json(v.defect);
      jac.push_back(std::move(item));
    }
    results["jacobi_violations"] = std::move(jac);
    ordered_json grad = ordered_json::array();
    for (const GradingViolation& v : rep.grading) {
      ordered_json item;
      item["i"] = v.i;
      item["j"] = v.j;
      item["target"] = v.target;
      grad.push_back(std::move(item));
    }
    results["grading_violations"] = std::move(grad);
    passed = rep.ok;
    if (rep.ok)
      out.human << "verify " << alg.name() << ": pass\n";
    else
      out.human << rep.to_text(alg);
  } else if (op == "growth") {
    const std::vector<std::size_t> g = growth_vector(alg);
    results["growth"] = seq_json(g);
    out.human << seq_text(g) << "\n";
  } else if (op == "fingerprint") {
    const Fingerprint fp = fingerprint(alg);
    ordered_json gd = ordered_json::object();
    for (const auto& [deg, dim] : fp.graded_dims) gd[std::to_string(deg)] = dim;
    results["graded_dims"] = std::move(gd);
    results["growth"] = seq_json(fp.growth);
    results["pair_rank_12"] = fp.pair_rank_12;
    results["center_dim"] = fp.center_dim;
    results["derived_dims"] = seq_json(fp.derived_dims);
    results["lower_central_dims"] = seq_json(fp.lower_central_dims);
    results["generic_ad_rank"] = fp.generic_ad_rank;
    results["annihilator_strata"] = seq_json(fp.annihilator_strata);
    results["strata_generic_ranks"] = seq_json(fp.strata_generic_ranks);
    results["pairing_ranks"] = seq_json(fp.pairing_ranks);
    out.human << fp.to_text();
  } else {  // regrade
    if (element.empty())
      throw std::invalid_argument("regrade requires --element with one value per basis vector");
    VecQ h = parse_rational_list(element);
    if (h.size() != alg.dim())
      throw std::invalid_argument("--element length does not match the algebra dimension");
    const std::vector<int> weights = regrade_by_element(alg, h);
    results["weights"] = seq_json(weights);
    out.human << "weights " << seq_text(weights) << "\n";
    if (!negative_name.empty()) {
      GradedLieAlgebra neg = negative_part(alg, weights, negative_name);
      results["negative_part"] = algebra_to_json(neg);
      if (!out_path.empty()) {
        save_algebra(neg, out_path);
        results["wrote"] = out_path;
        out.human << "wrote " << out_path << "\n";
      } else {
        out.human << algebra_to_text(neg);
      }
    }
  }

  out.doc["results"] = std::move(results);
  return emit(out, passed);
}

int cmd_prolong(Output& out, const std::string& file, bool do_assemble, int max_degree,
                const std::string& out_path) {
  GradedLieAlgebra alg = load_input_algebra(out, file);
  ordered_json results;
  results["name"] = alg.name();
  const ProlongationResult r = prolong(alg, max_degree);
  ordered_json pj = prolongation_json(r);
  for (auto& [key, value] : pj.items()) results[key] = value;
  prolongation_text(out.human, r);
  if (do_assemble) {
    GradedLieAlgebra full = assemble(r);
    results["assembled"] = algebra_to_json(full);
    if (!out_path.empty()) {
      save_algebra(full, out_path);
      results["wrote"] = out_path;
      out.human << "wrote " << out_path << "\n";
    } else {
      out.human << algebra_to_text(full);
    }
  }
  out.doc["results"] = std::move(results);
  return emit(out, true);
}

int cmd_symplectify(Output& out, const std::string& file, const std::string& generators,
                    int samples, unsigned seed, bool jacobi_tanaka, bool abnormal) {
  GradedLieAlgebra alg = load_input_algebra(out, file);
  out.doc["seed"] = seed;
  CotangentModel model = build_model(alg);
  const std::vector<int> gens =
      generators.empty() ? default_generators(alg) : parse_index_list(generators);

  ordered_json results;
  results["name"] = alg.name();
  results["generators"] = seq_json(gens);

  const FlagSurvey survey = survey_flags(model, gens, samples, seed);
  ordered_json modal;
  modal["k"] = survey.k;
  modal["l"] = survey.l;
  modal["maximal_class"] = survey.maximal_class;
  results["modal"] = std::move(modal);
  results["outliers"] = survey.outliers;
  results["rejected"] = survey.rejected;
  ordered_json sample_arr = ordered_json::array();
  for (const JacobiFlagReport& r : survey.samples) {
    ordered_json item;
    item["lambda"] = vecq_json(r.lambda);
    item["k"] = r.k;
    item["l"] = r.l;
    item["m"] = r.m;
    item["maximal_class"] = r.maximal_class;
    item["flag_dims"] = hist_json(r.flag_dims);
    item["t"] = seq_json(r.t);
    item["vertical_dims"] = hist_json(r.vertical_dims);
    sample_arr.push_back(std::move(item));
  }
  results["samples"] = std::move(sample_arr);

  out.human << "modal (k, l) = (" << survey.k << ", " << survey.l
            << "), maximal_class = " << (survey.maximal_class ? "true" : "false")
            << ", outliers " << survey.outliers << ", rejected " << survey.rejected << "\n";
  for (std::size_t i = 0; i < survey.samples.size(); ++i) {
    const JacobiFlagReport& r = survey.samples[i];
    out.human << "sample " << i << ": (k, l) = (" << r.k << ", " << r.l << "), t = "
              << seq_text(r.t) << (r.maximal_class ? ", maximal" : ", nonmaximal") << "\n";
  }

  if (jacobi_tanaka) {
    const VecQ lambda = sample_covector(model, gens, seed);
    const JTExtract ext = jacobi_tanaka_at(model, gens, lambda);
    ordered_json jt;
    jt["lambda"] = vecq_json(lambda);
    jt["filtration_dims"] = seq_json(ext.filtration_dims);
    jt["graded_dims"] = seq_json(ext.graded_dims);
    jt["algebra"] = algebra_to_json(ext.algebra);
    results["jacobi_tanaka"] = std::move(jt);
    out.human << "extracted filtration " << seq_text(ext.filtration_dims) << ", graded "
              << seq_text(ext.graded_dims) << "\n"
              << algebra_to_text(ext.algebra);
  }

  if (abnormal) {
    for (const char* required : {"x", "e0", "f0"}) {
      const auto& names = alg.basis_names();
      if (std::find(names.begin(), names.end(), required) == names.end())
        throw std::invalid_argument(
            "--abnormal requires the flat (3,6,8) model with basis elements x, e0, f0");
    }
    const AbnormalReport rep = abnormal_report(model, samples, seed);
    ordered_json ab;
    ab["du12_zero"] = rep.du12_zero;
    ab["du31_zero"] = rep.du31_zero;
    ab["du23_identity"] = rep.du23_identity;
    ab["legendre_det_zero"] = rep.legendre_det_zero;
    ab["legendre_nonzero_entry"] = rep.legendre_nonzero_entry;
    ab["base_dim_six_count"] = rep.base_dim_six_count;
    ordered_json abs_arr = ordered_json::array();
    for (const AbnormalSample& s : rep.samples) {
      ordered_json item;
      item["lambda"] = vecq_json(s.lambda);
      item["alpha1"] = to_string(s.alpha1);
      item["alpha2"] = to_string(s.alpha2);
      item["z_dims"] = seq_json(s.z_dims);
      item["z_stable"] = s.z_stable;
      item["base_dim"] = s.base_dim;
      item["a1_rank2"] = s.a1_rank2;
      abs_arr.push_back(std::move(item));
    }
    ab["samples"] = std::move(abs_arr);
    results["abnormal"] = std::move(ab);
    out.human << "abnormal identities: du12 " << (rep.du12_zero ? "zero" : "NONZERO")
              << ", du31 " << (rep.du31_zero ? "zero" : "NONZERO") << ", du23 "
              << (rep.du23_identity ? "matches" : "DIFFERS") << "\n"
              << "legendre: det zero " << (rep.legendre_det_zero ? "yes" : "no")
              << ", nonzero entry " << (rep.legendre_nonzero_entry ? "yes" : "no") << "\n"
              << "projected dimension 6 at " << rep.base_dim_six_count << " of "
              << rep.samples.size() << " samples\n";
  }

  out.doc["results"] = std::move(results);
  return emit(out, true);
}

int cmd_octonion_suite(Output& out, int samples, std::uint64_t seed) {
  out.doc["seed"] = seed;
  out.doc["samples"] = samples;
  const CriterionResult c = octonion_checks(seed, samples);
  ordered_json results;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& r : c.checks) {
    ordered_json item;
    item["label"] = r.label;
    item["passed"] = r.passed;
    item["detail"] = r.detail;
    checks.push_back(std::move(item));
    out.human << (r.passed ? "pass  " : "FAIL  ") << r.label;
    if (!r.passed && !r.detail.empty()) out.human << " [" << r.detail << "]";
    out.human << "\n";
  }
  results["checks"] = std::move(checks);
  results["all_passed"] = c.passed;
  out.doc["results"] = std::move(results);
  out.human << (c.passed ? "octonion suite: pass\n" : "octonion suite: FAIL\n");
  return emit(out, c.passed);
}

MatrixQ parse_plane_matrix(const nlohmann::json& entry, const std::string& key) {
  if (!entry.is_array() || entry.size() != 3)
    throw std::invalid_argument("plane file: \"" + key + "\" must be a 3x3 array");
  MatrixQ m(3, 3);
  for (int r = 0; r < 3; ++r) {
    const nlohmann::json& row = entry[r];
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("plane file: \"" + key + "\" must be a 3x3 array");
    for (int c = 0; c < 3; ++c) {
      if (!row[c].is_string())
        throw std::invalid_argument("plane file: entries must be rational strings");
      m.at(r, c) = parse_rational(row[c].get<std::string>());
    }
  }
  return m;
}

MatrixPlane parse_plane_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("plane file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p1") || !doc.contains("p2"))
    throw std::invalid_argument("plane file: expected an object with \"p1\" and \"p2\"");
  return {parse_plane_matrix(doc["p1"], "p1"), parse_plane_matrix(doc["p2"], "p2")};
}

int cmd_atlas(Output& out, bool pi1, bool pi2, const std::string& plane_path,
              const std::string& pair, bool do_prolong, const std::string& out_path) {
  const int sources = (pi1 ? 1 : 0) + (pi2 ? 1 : 0) + (plane_path.empty() ? 0 : 1) +
                      (pair.empty() ? 0 : 1);
  if (sources != 1)
    throw std::invalid_argument("choose exactly one of --pi1, --pi2, --plane, --pair");

  GradedLieAlgebra alg;
  bool from_plane = false;
  if (!pair.empty()) {
    alg = catalog(pair == "a1" ? "a1_symbol" : "a2_symbol");
    ordered_json input;
    input["builtin"] = "pair " + pair;
    out.doc["input"] = std::move(input);
  } else if (pi1 || pi2) {
    alg = symbol_from_plane(pi1 ? plane_pi1() : plane_pi2(),
                            pi1 ? "pi1_symbol" : "pi2_symbol");
    from_plane = true;
    ordered_json input;
    input["builtin"] = pi1 ? "pi1" : "pi2";
    out.doc["input"] = std::move(input);
  } else {
    const std::string bytes = read_file_bytes(plane_path);
    ordered_json input;
    input["path"] = plane_path;
    input["digest"] = fnv1a_hex(bytes);
    out.doc["input"] = std::move(input);
    alg = symbol_from_plane(parse_plane_text(bytes), "plane_symbol");
    from_plane = true;
  }

  ordered_json results;
  results["algebra"] = algebra_to_json(alg);
  const std::vector<std::size_t> g = growth_vector(alg);
  results["growth"] = seq_json(g);
  out.human << algebra_to_text(alg) << "growth " << seq_text(g) << "\n";

  bool passed = true;
  if (from_plane) {
    const MatrixPlane back = plane_from_symbol(alg);
    const MatrixQ cert = plane_roundtrip_certificate(alg);
    const bool certified =
        check_iso_certificate(symbol_from_plane(back, "back"), alg, cert);
    results["roundtrip_certified"] = certified;
    out.human << "roundtrip certified: " << (certified ? "yes" : "NO") << "\n";
    passed = certified;
  }

  if (do_prolong) {
    const ProlongationResult r = prolong(alg);
    results["prolongation"] = prolongation_json(r);
    prolongation_text(out.human, r);
  }
  if (!out_path.empty()) {
    save_algebra(alg, out_path);
    results["wrote"] = out_path;
    out.human << "wrote " << out_path << "\n";
  }

  out.doc["results"] = std::move(results);
  return emit(out, passed);
}

int cmd_paper_suite(Output& out, std::uint64_t seed) {
  out.doc["seed"] = seed;
  const SuiteResult result = run_suite(seed);
  out.doc["results"] = suite_json(result);
  out.human << suite_table(result);
  return emit(out, result.all_passed());
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TANAKA_LAB_THREADS")) {
    // Accepted as an interface knob and validated; every computation here is
    // serial, so any positive cap is honored as written.
    char* end = nullptr;
    const long threads = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || threads <= 0) {
      std::cerr << "error: TANAKA_LAB_THREADS must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"Exact computational toolkit for graded nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_op, algebra_file, algebra_element, algebra_negative, algebra_out;
  CLI::App* algebra_cmd = app.add_subcommand("algebra", "verify or analyze an algebra file");
  algebra_cmd->add_option("op", algebra_op, "verify, growth, fingerprint, or regrade")
      ->required()
      ->check(CLI::IsMember({"verify", "growth", "fingerprint", "regrade"}));
  algebra_cmd->add_option("file", algebra_file, "algebra JSON file")->required();
  algebra_cmd->add_option("--element", algebra_element,
                          "comma-separated rational coordinates of a grading element");
  algebra_cmd->add_option("--negative-part", algebra_negative,
                          "also emit the negative part under the new grading, with this name");
  algebra_cmd->add_option("--out", algebra_out, "write the emitted algebra to a file");

  std::string prolong_file, prolong_out;
  bool prolong_assemble = false;
  int prolong_max_degree = 20;
  CLI::App* prolong_cmd = app.add_subcommand("prolong", "universal prolongation of a symbol");
  prolong_cmd->add_option("file", prolong_file, "algebra JSON file with negative weights")
      ->required();
  prolong_cmd->add_flag("--assemble", prolong_assemble,
                        "assemble the full graded algebra and emit it");
  prolong_cmd->add_option("--max-degree", prolong_max_degree, "truncation degree")
      ->default_val(20);
  prolong_cmd->add_option("--out", prolong_out, "write the assembled algebra to a file");

  std::string sympl_file, sympl_generators;
  int sympl_samples = 25;
  unsigned sympl_seed = 0;
  bool sympl_jt = false, sympl_abnormal = false;
  CLI::App* sympl_cmd =
      app.add_subcommand("symplectify", "flag survey over sampled covectors");
  sympl_cmd->add_option("file", sympl_file, "algebra JSON file")->required();
  sympl_cmd->add_option("--generators", sympl_generators,
                        "comma-separated generator indices (default: weight -1 elements)");
  sympl_cmd->add_option("--samples", sympl_samples, "number of sampled covectors")
      ->default_val(25);
  sympl_cmd->add_option("--seed", sympl_seed, "sampling seed")->default_val(0);
  sympl_cmd->add_flag("--jacobi-tanaka", sympl_jt,
                      "extract the graded algebra at a sampled covector");
  sympl_cmd->add_flag("--abnormal", sympl_abnormal,
                      "report the characteristic field identities and projected flag");

  int oct_samples = 20;
  std::uint64_t oct_seed = 0;
  CLI::App* octonion_cmd = app.add_subcommand("octonion", "split octonion model checks");
  octonion_cmd->require_subcommand(1);
  CLI::App* oct_suite_cmd = octonion_cmd->add_subcommand("suite", "run the model checks");
  oct_suite_cmd->add_option("--samples", oct_samples, "points per rank check")
      ->default_val(20);
  oct_suite_cmd->add_option("--seed", oct_seed, "sampling seed")->default_val(0);

  bool atlas_pi1 = false, atlas_pi2 = false, atlas_prolong = false;
  std::string atlas_plane, atlas_pair, atlas_out;
  CLI::App* atlas_cmd = app.add_subcommand("atlas", "build a symbol from a matrix plane");
  atlas_cmd->add_flag("--pi1", atlas_pi1, "first distinguished plane");
  atlas_cmd->add_flag("--pi2", atlas_pi2, "second distinguished plane");
  atlas_cmd->add_option("--plane", atlas_plane, "JSON file with 3x3 matrices p1, p2");
  atlas_cmd->add_option("--pair", atlas_pair, "pair-built symbol: a1 or a2")
      ->check(CLI::IsMember({"a1", "a2"}));
  atlas_cmd->add_flag("--prolong", atlas_prolong, "also print prolongation dimensions");
  atlas_cmd->add_option("--out", atlas_out, "write the symbol to a file");

  std::uint64_t suite_seed = 0;
  CLI::App* suite_cmd =
      app.add_subcommand("paper-suite", "run the full acceptance criteria battery");
  suite_cmd->add_option("--seed", suite_seed, "shifts every pinned sampling seed")
      ->default_val(0);

  bool want_json = false;
  app.add_flag("--json", want_json, "emit a JSON report instead of text");
  for (CLI::App* sub : {algebra_cmd, prolong_cmd, sympl_cmd, oct_suite_cmd, atlas_cmd,
                        suite_cmd})
    sub->add_flag("--json", want_json, "emit a JSON report instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output out;
  out.json = want_json;
  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo << " ";
    echo << argv[i];
  }
  out.doc["command"] = echo.str();

  try {
    if (algebra_cmd->parsed())
      return cmd_algebra(out, algebra_op, algebra_file, algebra_element, algebra_negative,
                         algebra_out);
    if (prolong_cmd->parsed())
      return cmd_prolong(out, prolong_file, prolong_assemble, prolong_max_degree,
                         prolong_out);
    if (sympl_cmd->parsed())
      return cmd_symplectify(out, sympl_file, sympl_generators, sympl_samples, sympl_seed,
                             sympl_jt, sympl_abnormal);
    if (octonion_cmd->parsed()) return cmd_octonion_suite(out, oct_samples, oct_seed);
    if (atlas_cmd->parsed())
      return cmd_atlas(out, atlas_pi1, atlas_pi2, atlas_plane, atlas_pair, atlas_prolong,
                       atlas_out);
    if (suite_cmd->parsed()) return cmd_paper_suite(out, suite_seed);
  } catch (const std::invalid_argument& e) {
    return fail_with(out, e.what(), 2);
  } catch (const std::exception& e) {
    return fail_with(out, e.what(), 1);
  }
  std::cerr << "error: no command selected\n";
  return 2;
}
