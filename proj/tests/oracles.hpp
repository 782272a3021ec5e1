#pragma once

// Test-only reference computations. None of these reuse the library's
// series primitives.

#include "ellperim/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using ellperim::Rational;

// binom(1/2, n) from the falling-factorial product.
inline Rational binom_half(unsigned long n) {
  Rational num(1);
  Rational den(1);
  for (unsigned long i = 0; i < n; ++i) {
    num *= Rational(1, 2) - Rational(static_cast<long>(i));
    den *= Rational(static_cast<long>(i + 1));
  }
  return num / den;
}

// Ivory coefficients as binom(1/2, n)^2.
inline std::vector<Rational> ivory_coeffs(std::size_t order) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= order; ++n) {
    const Rational c = binom_half(n);
    out.push_back(c * c);
  }
  return out;
}

// Coefficients of 1 + 3x / (10 + s(x)) with s^2 = 4 - 3x, s(0) = 2:
// s is found by matching coefficients of s*s, then the quotient by
// long division of power series.
inline std::vector<Rational> ramanujan_coeffs(std::size_t order) {
  std::vector<Rational> s(order + 1, Rational(0));
  s[0] = Rational(2);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational target = n == 1 ? Rational(-3) : Rational(0);
    for (std::size_t i = 1; i < n; ++i) target -= s[i] * s[n - i];
    s[n] = target / (Rational(2) * s[0]);
  }
  std::vector<Rational> den = s;  // 10 + s
  den[0] += Rational(10);
  std::vector<Rational> num(order + 1, Rational(0));  // 3x
  if (order >= 1) num[1] = Rational(3);
  std::vector<Rational> q(order + 1, Rational(0));
  for (std::size_t n = 0; n <= order; ++n) {
    Rational r = num[n];
    for (std::size_t i = 1; i <= n; ++i) r -= den[i] * q[n - i];
    q[n] = r / den[0];
  }
  q[0] += Rational(1);
  return q;
}

}  // namespace oracle
