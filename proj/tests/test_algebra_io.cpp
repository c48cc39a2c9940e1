#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <stdexcept>
#include <string>

#include "tanaka_lab/algebra_io.hpp"
#include "tanaka_lab/catalog.hpp"

using namespace tanaka_lab;

TEST_CASE("every catalog algebra serializes and reparses byte stably") {
  for (const std::string& name : catalog_names()) {
    CAPTURE(name);
    GradedLieAlgebra alg = catalog(name);
    const std::string text = algebra_to_text(alg);
    GradedLieAlgebra back = algebra_from_text(text);
    CHECK(back.name() == alg.name());
    CHECK(back.basis_names() == alg.basis_names());
    CHECK(back.weights() == alg.weights());
    CHECK(back.table() == alg.table());
    CHECK(algebra_to_text(back) == text);
  }
}

TEST_CASE("field order and whitespace do not affect the parsed algebra") {
  const char* scrambled = R"({"weights":[-1,-1,-2],
      "brackets":[{"c":{"2":"1"},"j":1,"i":0}],
      "dim":3,"basis":["a","b","c"],"name":"heis"})";
  GradedLieAlgebra alg = algebra_from_text(scrambled);
  CHECK(alg.name() == "heis");
  CHECK(alg.bracket_basis(0, 1)[2] == 1);
  const std::string canon = algebra_to_text(alg);
  CHECK(algebra_to_text(algebra_from_text(canon)) == canon);
}

TEST_CASE("zero coefficients are dropped from the canonical form") {
  nlohmann::json doc = {{"name", "padded"},
                        {"dim", 3},
                        {"basis", {"a", "b", "c"}},
                        {"weights", {-1, -1, -2}},
                        {"brackets", {{{"i", 0}, {"j", 1}, {"c", {{"2", "0/5"}}}}}}};
  GradedLieAlgebra alg = algebra_from_json(doc);
  CHECK(alg.table().empty());
  CHECK(algebra_to_json(alg)["brackets"].empty());
}

namespace {

void expect_reject(const nlohmann::json& doc, const std::string& needle) {
  try {
    algebra_from_json(doc);
    FAIL_CHECK("expected rejection mentioning \"" << needle << "\"");
  } catch (const std::invalid_argument& e) {
    CAPTURE(needle);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("structural violations are rejected with a named field") {
  const nlohmann::json good = {{"name", "a"},
                               {"dim", 2},
                               {"basis", {"x", "y"}},
                               {"weights", {-1, -1}},
                               {"brackets", nlohmann::json::array()}};
  CHECK(algebra_from_json(good).dim() == 2);

  {
    auto d = good;
    d.erase("weights");
    expect_reject(d, "weights");
  }
  {
    auto d = good;
    d["basis"] = {"x"};
    expect_reject(d, "basis");
  }
  {
    auto d = good;
    d["basis"] = {"x", "x"};
    expect_reject(d, "distinct");
  }
  {
    auto d = good;
    d["dim"] = "2";
    expect_reject(d, "dim");
  }
  {
    auto d = good;
    d["weights"] = {-1, "heavy"};
    expect_reject(d, "weights");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 1}, {"j", 0}, {"c", nlohmann::json::object()}}};
    expect_reject(d, "i < j");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 0}, {"j", 5}, {"c", nlohmann::json::object()}}};
    expect_reject(d, "[0, dim)");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 0}, {"j", 1}, {"c", {{"7", "1"}}}}};
    expect_reject(d, "out of range");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 0}, {"j", 1}, {"c", {{"01", "1"}}}}};
    expect_reject(d, "not a basis index");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 0}, {"j", 1}, {"c", {{"1", 1}}}}};
    expect_reject(d, "rational strings");
  }
  {
    auto d = good;
    d["brackets"] = {{{"i", 0}, {"j", 1}, {"c", {{"1", "1"}}}},
                     {{"i", 0}, {"j", 1}, {"c", {{"0", "1"}}}}};
    expect_reject(d, "duplicate");
  }
}

TEST_CASE("a zero denominator is rejected while parsing coefficients") {
  nlohmann::json doc = {{"name", "bad"},
                        {"dim", 2},
                        {"basis", {"x", "y"}},
                        {"weights", {-1, -1}},
                        {"brackets", {{{"i", 0}, {"j", 1}, {"c", {{"1", "1/0"}}}}}}};
  CHECK_THROWS_AS(algebra_from_json(doc), std::invalid_argument);
}

TEST_CASE("syntax errors carry a line and column position") {
  const std::string broken = "{\n  \"name\" nope\n}";
  try {
    algebra_from_text(broken);
    FAIL_CHECK("expected a syntax error");
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find("column") != std::string::npos);
  }
}

TEST_CASE("algebras survive a file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "tanaka_lab_io_roundtrip.json";
  GradedLieAlgebra alg = catalog("g_29");
  save_algebra(alg, path.string());
  GradedLieAlgebra back = load_algebra(path.string());
  CHECK(algebra_to_text(back) == algebra_to_text(alg));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_algebra(path.string()), std::invalid_argument);
}
