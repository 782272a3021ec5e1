#include "ellperim/real.hpp"

#include "ellperim/error.hpp"
#include "ellperim/rational.hpp"

#include <ios>
#include <regex>

namespace ellperim {

Real parse_real(const std::string& text) {
  static const std::regex literal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, literal))
    throw Error(ErrorCode::InvalidArgument, "not a decimal number: '" + text + "'");
  return Real(text);
}

std::string to_string(const Real& value, int digits) {
  if (value == 0) return "0";
  return value.str(digits - 1, std::ios_base::scientific);
}

Real to_real(const Rational& value) {
  return Real(value.numerator()) / Real(value.denominator());
}

}  // namespace ellperim
