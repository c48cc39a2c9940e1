#ifndef TANAKA_LAB_ALGEBRA_IO_HPP
#define TANAKA_LAB_ALGEBRA_IO_HPP

#include <string>

#include "json.hpp"
#include "tanaka_lab/lie_algebra.hpp"

namespace tanaka_lab {

// Interchange format for graded algebras:
//
//   { "name": str, "dim": int, "basis": [str], "weights": [int],
//     "brackets": [ { "i": int, "j": int, "c": { "<k>": "p/q" } } ] }
//
// Indices are 0-based, bracket entries satisfy i < j, omitted entries are
// zero, and coefficients are exact rationals. Emission is canonical: bracket
// entries ascend by (i, j), coefficient keys ascend numerically, rationals
// are in lowest terms, so serialize-parse-serialize is byte stable.
nlohmann::ordered_json algebra_to_json(const GradedLieAlgebra& alg);

// Rebuilds an algebra from the interchange form. Throws std::invalid_argument
// naming the offending field on any structural or numeric violation.
GradedLieAlgebra algebra_from_json(const nlohmann::json& doc);

// Canonical two-space-indented text with a trailing newline.
std::string algebra_to_text(const GradedLieAlgebra& alg);

// Parses JSON text; syntax errors report a 1-based line and column.
GradedLieAlgebra algebra_from_text(const std::string& text);

GradedLieAlgebra load_algebra(const std::string& path);
void save_algebra(const GradedLieAlgebra& alg, const std::string& path);

}  // namespace tanaka_lab

#endif
