#include "ellperim/series.hpp"

#include "ellperim/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ellperim {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(ErrorCode::InvalidArgument, "power series needs at least one coefficient");
}

const Rational& PowerSeries::operator[](std::size_t n) const {
  if (n > order())
    throw Error(ErrorCode::Domain, "coefficient " + std::to_string(n) +
                                       " beyond truncation order " + std::to_string(order()));
  return coeffs_[n];
}

Rational& PowerSeries::operator[](std::size_t n) {
  if (n > order())
    throw Error(ErrorCode::Domain, "coefficient " + std::to_string(n) +
                                       " beyond truncation order " + std::to_string(order()));
  return coeffs_[n];
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const {
  const std::size_t n = std::min(order(), new_order);
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] = lhs[n] + rhs[n];
  return out;
}

PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] = lhs[n] - rhs[n];
  return out;
}

PowerSeries operator*(const Rational& scale, const PowerSeries& series) {
  PowerSeries out(series.order());
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] = scale * series[n];
  return out;
}

PowerSeries ps_mul(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    Rational acc(0);
    for (std::size_t i = 0; i <= n; ++i) acc += lhs[i] * rhs[n - i];
    out[n] = std::move(acc);
  }
  return out;
}

PowerSeries ps_binomial_sqrt(const Rational& c, std::size_t order) {
  // coefficient of x^n is binom(1/2, n) (-c)^n; successive ratio
  // (1/2 - (n-1)) / n * (-c).
  PowerSeries out(order);
  out[0] = Rational(1);
  const Rational half(1, 2);
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational k(static_cast<long>(n));
    out[n] = out[n - 1] * (half - (k - 1)) / k * (-c);
  }
  return out;
}

PowerSeries ps_geom_recip(const Rational& c, std::size_t order) {
  if (c.sign() == 0)
    throw Error(ErrorCode::InvalidArgument, "1/(c + x) has no Maclaurin series at c = 0");
  PowerSeries out(order);
  out[0] = Rational(1) / c;
  const Rational step = -(Rational(1) / c);
  for (std::size_t n = 1; n <= order; ++n) out[n] = out[n - 1] * step;
  return out;
}

PowerSeries ps_shift(const PowerSeries& series) {
  PowerSeries out(series.order());
  for (std::size_t n = 1; n <= out.order(); ++n) out[n] = series[n - 1];
  return out;
}

Rational b_coeff(unsigned long n) {
  const Rational base = binomial(2 * n, n) / Rational::pow2(2 * static_cast<long>(n)) /
                        Rational(2 * static_cast<long>(n) - 1);
  return base * base;
}

PowerSeries b_series(std::size_t order) {
  PowerSeries out(order);
  out[0] = Rational(1);
  for (std::size_t n = 0; n < order; ++n) {
    const Rational r(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n) + 2);
    out[n + 1] = out[n] * r * r;
  }
  return out;
}

PowerSeries a_series_via_composition(std::size_t order) {
  // 10 - sqrt(4 - 3x) = 10 - 2 (1 - 3x/4)^{1/2}
  PowerSeries numerator = Rational(-2) * ps_binomial_sqrt(Rational(3, 4), order);
  numerator[0] += Rational(10);
  PowerSeries out = ps_shift(ps_mul(numerator, ps_geom_recip(Rational(32), order)));
  out[0] += Rational(1);
  return out;
}

Rational a_explicit_term(unsigned long n, unsigned long m) {
  if (m >= n)
    throw Error(ErrorCode::InvalidArgument, "explicit term index must satisfy m < n");
  const Rational tail = Rational(-1, 32).pow(static_cast<long>(n - 1 - m));
  if (m == 0) return Rational(4, 16) * tail;
  const long ml = static_cast<long>(m);
  return binomial(2 * m, m) * Rational(3).pow(ml) /
         (Rational(2 * ml - 1) * Rational::pow2(4 * (ml + 1))) * tail;
}

std::vector<Rational> a_explicit_terms(unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "explicit formula starts at n = 1");
  std::vector<Rational> terms;
  terms.reserve(n);
  for (unsigned long m = 0; m < n; ++m) terms.push_back(a_explicit_term(n, m));
  return terms;
}

Rational a_coeff_explicit(unsigned long n) {
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "A_0 = 1 by definition; explicit formula starts at n = 1");
  Rational sum(0);
  for (const Rational& t : a_explicit_terms(n)) sum += t;
  return sum;
}

Rational delta_coeff(unsigned long n) {
  if (n == 0) return Rational(0);
  return b_coeff(n) - a_coeff_explicit(n);
}

std::vector<CoefficientRow> coefficient_table(std::size_t n_max) {
  const PowerSeries a = a_series_via_composition(n_max);
  const PowerSeries b = b_series(n_max);
  std::vector<CoefficientRow> rows;
  rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    rows.push_back({static_cast<unsigned long>(n), a[n], b[n], b[n] - a[n]});
  return rows;
}

}  // namespace ellperim
