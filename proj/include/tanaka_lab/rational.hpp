#ifndef TANAKA_LAB_RATIONAL_HPP
#define TANAKA_LAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace tanaka_lab {

// Exact rational scalar. GMP keeps every value in lowest terms with a
// positive denominator, which is the canonical form used for printing
// and hashing throughout the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using VecQ = std::vector<Rational>;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);

// Parse the canonical form. Throws std::invalid_argument on malformed
// input or a zero denominator, reporting the offending text.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& x);

// Exact conversion for values known to be integers; throws otherwise.
long long to_integer(const Rational& x);

}  // namespace tanaka_lab

#endif
