#include "ellperim/rational.hpp"

#include "ellperim/error.hpp"

#include <ostream>
#include <utility>

namespace ellperim {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0)
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::InvalidArgument, "not a rational literal: '" + text + "'");
  return Rational(std::move(q));
}

Rational Rational::pow2(long exponent) {
  mpz_class p = 1;
  const auto e = static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  if (exponent >= 0) return Rational(mpq_class(p));
  return Rational(mpq_class(mpz_class(1), p));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw Error(ErrorCode::Domain, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) {
  return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = mpq_cmp(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int Rational::sign() const { return sgn(value_); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (sign() == 0) throw Error(ErrorCode::Domain, "zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }

std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::string Rational::str() const { return numerator() + "/" + denominator(); }

double Rational::to_double() const { return value_.get_d(); }

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(mpq_class(c));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace ellperim
