#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <string>

#ifndef ELLPERIM_REAL_DIGITS
#define ELLPERIM_REAL_DIGITS 50
#endif

static_assert(ELLPERIM_REAL_DIGITS >= 30,
              "the smallest certified constant needs at least 30 digits");

namespace ellperim {

class Rational;

/// Extended-precision working real used for every certified evaluation.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<ELLPERIM_REAL_DIGITS>,
    boost::multiprecision::et_off>;

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

inline Real real_epsilon() { return std::numeric_limits<Real>::epsilon(); }

/// Parses a decimal literal; throws Error(InvalidArgument) on junk.
Real parse_real(const std::string& text);

/// Scientific notation with `digits` significant digits (default 25).
std::string to_string(const Real& value, int digits = 25);

/// Rounds at most three times (numerator, denominator, quotient).
Real to_real(const Rational& value);

}  // namespace ellperim
