#pragma once

// Exact coefficient generation for the Ramanujan function
//   A(x) = 1 + 3x / (10 + sqrt(4 - 3x))
// and Ivory's series
//   B(x) = sum_n [C(2n,n) / (4^n (2n - 1))]^2 x^n,
// plus the small amount of truncated power-series algebra the composition
// route needs.

#include "ellperim/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ellperim {

/// Truncated power series sum_{n=0}^{order} c_n x^n with exact coefficients.
class PowerSeries {
 public:
  /// Zero series of the given truncation order.
  explicit PowerSeries(std::size_t order);
  /// Takes ownership of coeffs; order = coeffs.size() - 1. Empty is rejected.
  explicit PowerSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Bounds-checked; reading past the truncation order throws.
  const Rational& operator[](std::size_t n) const;
  Rational& operator[](std::size_t n);

  /// Copy truncated to min(order(), new_order).
  PowerSeries truncated(std::size_t new_order) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator*(const Rational& scale, const PowerSeries& series);

/// Cauchy product, truncated to min of the operand orders.
PowerSeries ps_mul(const PowerSeries& lhs, const PowerSeries& rhs);

/// (1 - c x)^{1/2} by the binomial series.
PowerSeries ps_binomial_sqrt(const Rational& c, std::size_t order);

/// 1 / (c + x) as a geometric series. Throws Error(InvalidArgument) for c = 0.
PowerSeries ps_geom_recip(const Rational& c, std::size_t order);

/// x * series, keeping the truncation order (the top coefficient falls off).
PowerSeries ps_shift(const PowerSeries& series);

/// B_n = [C(2n,n) / (4^n (2n-1))]^2. At n = 0 the (2n-1) factor is -1.
Rational b_coeff(unsigned long n);

/// B_0 .. B_order by the term ratio B_{n+1}/B_n = ((2n-1)/(2n+2))^2.
PowerSeries b_series(std::size_t order);

/// Maclaurin series of A(x) from A(x) = 1 + x (10 - sqrt(4-3x)) / (32 + x),
/// expanding sqrt(4-3x) = 2 (1 - 3x/4)^{1/2} and 1/(32+x) separately.
PowerSeries a_series_via_composition(std::size_t order);

/// The m-th summand of the explicit formula A_n = a_0 + ... + a_{n-1}:
///   a_0 = (4/16) (-1/32)^{n-1}
///   a_m = C(2m,m) 3^m / ((2m-1) 16^{m+1}) (-1/32)^{n-1-m},  1 <= m <= n-1.
/// Requires 0 <= m < n.
Rational a_explicit_term(unsigned long n, unsigned long m);

/// All summands a_0 .. a_{n-1} for a given n >= 1.
std::vector<Rational> a_explicit_terms(unsigned long n);

/// A_n from the explicit alternating sum. Rejects n = 0.
Rational a_coeff_explicit(unsigned long n);

/// delta_n = B_n - A_n (zero for n <= 4).
Rational delta_coeff(unsigned long n);

/// One row per n in 0..n_max, both A and B from their series routes.
struct CoefficientRow {
  unsigned long n;
  Rational a;
  Rational b;
  Rational delta;
};

std::vector<CoefficientRow> coefficient_table(std::size_t n_max);

}  // namespace ellperim
