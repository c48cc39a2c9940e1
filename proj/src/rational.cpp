#include "tanaka_lab/rational.hpp"

#include <stdexcept>

namespace tanaka_lab {

std::string to_string(const Rational& x) {
  return x.str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&text]() {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(text, true);
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(Integer(num), d);
}

bool is_integer(const Rational& x) {
  return denominator(x) == 1;
}

long long to_integer(const Rational& x) {
  if (!is_integer(x)) throw std::invalid_argument("not an integer: " + to_string(x));
  return numerator(x).convert_to<long long>();
}

}  // namespace tanaka_lab
