#pragma once

// Certified evaluation of Ivory's series B(x), the Ramanujan function A(x),
// and the perimeter formulas
//   p   = pi (a+b) B(lambda^2)
//   p_R = pi (a+b) A(lambda^2),   lambda = (a-b)/(a+b).

#include "ellperim/real.hpp"

#include <cstddef>
#include <string>

namespace ellperim {

/// Which bound closed the series tail.
enum class TailRegime {
  Exact,      // no tail (x = 0 or a circle)
  Geometric,  // B_{N+1} x^{N+1} / (1 - x)
  Algebraic,  // x^{N+1} / pi * (1/(2N-1) + ln(1 - 1/(2N)))
};

std::string to_string(TailRegime regime);

/// Interval guaranteed to contain the true value.
struct Enclosure {
  Real lo;
  Real hi;
  TailRegime regime = TailRegime::Exact;
  std::size_t terms = 0;

  Real mid() const { return (lo + hi) / 2; }
  Real width() const { return hi - lo; }
  bool contains(const Real& x) const { return lo <= x && x <= hi; }
};

/// Multiplies by a positive factor known to relative accuracy rel, widening
/// outward by that amount.
Enclosure scale_outward(const Enclosure& in, const Real& factor, const Real& rel);

class Ellipse {
 public:
  /// Semi-axes in any order; a reversed pair is swapped and the swap recorded.
  /// Requires finite a, b >= 0 and max(a, b) > 0.
  static Ellipse from_axes(const Real& a, const Real& b);
  /// Semi-major axis a > 0 and eccentricity e in [0, 1].
  static Ellipse from_eccentricity(const Real& a, const Real& e);

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  bool swapped() const { return swapped_; }

  Real lambda() const;
  Real eccentricity() const;

 private:
  Ellipse(Real a, Real b, bool swapped) : a_(std::move(a)), b_(std::move(b)), swapped_(swapped) {}

  Real a_;
  Real b_;
  bool swapped_ = false;
};

/// lambda = e^2 / (1 + sqrt(1 - e^2))^2
Real lambda_from_eccentricity(const Real& e);
/// e^2 = 4 lambda / (1 + lambda)^2
Real eccentricity_from_lambda(const Real& lambda);

inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/// Partial sum of B plus a rigorous tail bound; width <= tol. Throws
/// Error(Domain) for x outside [0, 1] and Error(Tolerance) if max_terms
/// terms are not enough.
Enclosure eval_B(const Real& x, const Real& tol, std::size_t max_terms = kDefaultMaxTerms);

/// 1 + 3x / (10 + sqrt(4 - 3x)) on [0, 1].
Real eval_A(const Real& x);

/// (1/pi) int_0^pi sqrt(1 + 2 sqrt(x) cos 2phi + x) dphi by adaptive
/// quadrature, split at pi/2 (where the x = 1 integrand has its kink).
double ivory_integral(double x, double abs_tol = 1e-12);

/// 4 int_0^{pi/2} sqrt(a^2 sin^2 phi + b^2 cos^2 phi) dphi by quadrature.
double arclength_integral(double a, double b, double abs_tol = 1e-12);

/// pi (a+b) B(lambda^2) with width <= tol.
Enclosure perimeter(const Ellipse& e, const Real& tol, std::size_t max_terms = kDefaultMaxTerms);

/// pi {(a+b) + 3(a-b)^2 / (10(a+b) + sqrt(a^2 + 14ab + b^2))}
Real perimeter_ramanujan(const Ellipse& e);

/// pi (a+b) A(lambda^2); algebraically identical to perimeter_ramanujan.
Real perimeter_ramanujan_normalized(const Ellipse& e);

struct Discrepancy {
  Enclosure delta;       // B(x) - A(x)
  Enclosure normalized;  // (B(x) - A(x)) / x^5
};

/// Enclosure of B(x) - A(x) for 0 < x <= 1; tol bounds the width of the
/// enclosure of B(x) - A(x). For x <= 1/2 the exact differences B_n - A_n are
/// summed directly and tol bounds the width of the normalized enclosure.
Discrepancy discrepancy(const Real& x, const Real& tol, std::size_t max_terms = kDefaultMaxTerms);

}  // namespace ellperim
