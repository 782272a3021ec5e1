#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ellperim {

/// Exact rational number in canonical form (denominator > 0, gcd 1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Accepts "p/q" or "p". Throws Error(InvalidArgument).
  static Rational parse(const std::string& text);

  /// 2^exponent for any integer exponent.
  static Rational pow2(long exponent);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  int sign() const;
  Rational abs() const;
  /// Integer power; negative exponents require a nonzero value.
  Rational pow(long exponent) const;

  std::string numerator() const;
  std::string denominator() const;
  /// Always "p/q", including integers ("1/1", "0/1").
  std::string str() const;
  double to_double() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Binomial coefficient C(n, k) as an exact integer.
Rational binomial(unsigned long n, unsigned long k);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace ellperim
