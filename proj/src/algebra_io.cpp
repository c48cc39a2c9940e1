#include "tanaka_lab/algebra_io.hpp"

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tanaka_lab/rational.hpp"

namespace tanaka_lab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("algebra format: " + message);
}

long long require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where + " must be an integer");
  return value.get<long long>();
}

// Strict base-10 index: digits only, no sign, no leading zeros except "0".
int parse_index_key(const std::string& key, long long dim) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos ||
      (key.size() > 1 && key[0] == '0')) {
    fail("coefficient key \"" + key + "\" is not a basis index");
  }
  long long k = -1;
  try {
    k = std::stoll(key);
  } catch (const std::exception&) {
    fail("coefficient key \"" + key + "\" is out of range");
  }
  if (k < 0 || k >= dim) fail("coefficient key \"" + key + "\" is out of range");
  return static_cast<int>(k);
}

}  // namespace

ordered_json algebra_to_json(const GradedLieAlgebra& alg) {
  ordered_json doc;
  doc["name"] = alg.name();
  doc["dim"] = alg.dim();
  doc["basis"] = alg.basis_names();
  doc["weights"] = alg.weights();
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, value] : alg.table()) {
    ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    ordered_json coeffs = ordered_json::object();
    for (const auto& [k, c] : value) coeffs[std::to_string(k)] = to_string(c);
    entry["c"] = coeffs;
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

GradedLieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) fail("top level must be an object");
  for (const char* key : {"name", "dim", "basis", "weights"}) {
    if (!doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
  }
  if (!doc["name"].is_string()) fail("\"name\" must be a string");
  const long long dim = require_int(doc["dim"], "\"dim\"");
  if (dim < 0) fail("\"dim\" must be non-negative");

  if (!doc["basis"].is_array()) fail("\"basis\" must be an array");
  std::vector<std::string> basis;
  for (const json& item : doc["basis"]) {
    if (!item.is_string()) fail("\"basis\" entries must be strings");
    basis.push_back(item.get<std::string>());
  }
  if (static_cast<long long>(basis.size()) != dim) {
    fail("\"basis\" length does not match \"dim\"");
  }
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) fail("\"basis\" names must be distinct");

  if (!doc["weights"].is_array()) fail("\"weights\" must be an array");
  std::vector<int> weights;
  for (const json& item : doc["weights"]) {
    weights.push_back(static_cast<int>(require_int(item, "\"weights\" entry")));
  }
  if (static_cast<long long>(weights.size()) != dim) {
    fail("\"weights\" length does not match \"dim\"");
  }

  GradedLieAlgebra alg(doc["name"].get<std::string>(), basis, weights);

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) fail("\"brackets\" must be an array");
    std::set<std::pair<long long, long long>> placed;
    for (const json& entry : doc["brackets"]) {
      if (!entry.is_object()) fail("bracket entries must be objects");
      for (const char* key : {"i", "j", "c"}) {
        if (!entry.contains(key)) fail(std::string("bracket entry missing \"") + key + "\"");
      }
      const long long i = require_int(entry["i"], "bracket \"i\"");
      const long long j = require_int(entry["j"], "bracket \"j\"");
      if (i < 0 || j < 0 || i >= dim || j >= dim) {
        fail("bracket indices must lie in [0, dim)");
      }
      if (i >= j) fail("bracket entries require i < j");
      if (!placed.insert({i, j}).second) {
        std::ostringstream os;
        os << "duplicate bracket entry (" << i << ", " << j << ")";
        fail(os.str());
      }
      if (!entry["c"].is_object()) fail("bracket \"c\" must be an object");
      SparseVec value;
      for (const auto& [key, coeff] : entry["c"].items()) {
        const int k = parse_index_key(key, dim);
        if (!coeff.is_string()) fail("coefficients must be rational strings");
        value[k] = parse_rational(coeff.get<std::string>());
      }
      alg.set_bracket(static_cast<int>(i), static_cast<int>(j), value);
    }
  }
  return alg;
}

std::string algebra_to_text(const GradedLieAlgebra& alg) {
  return algebra_to_json(alg).dump(2) + "\n";
}

GradedLieAlgebra algebra_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t pos = e.byte > 0 ? static_cast<std::size_t>(e.byte) - 1 : 0;
    if (pos > text.size()) pos = text.size();
    std::size_t line = 1, line_start = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::ostringstream os;
    os << "algebra format: JSON syntax error at line " << line << ", column "
       << (pos - line_start + 1) << ": " << e.what();
    throw std::invalid_argument(os.str());
  }
  return algebra_from_json(doc);
}

GradedLieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return algebra_from_text(buffer.str());
}

void save_algebra(const GradedLieAlgebra& alg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << algebra_to_text(alg);
}

}  // namespace tanaka_lab
