#pragma once

// Two-sided certified enclosures of the defect eps = p - p_R of Ramanujan's
// approximation, in the lambda normalisation
//   eps = pi (a+b) theta(lambda) lambda^10,  3/2^17 < theta <= 4/pi - 14/11,
// and the eccentricity normalisation
//   eps = a delta(e) (2 / (1 + sqrt(1-e^2)))^19 e^20,  delta = pi theta / 2^19.

#include "ellperim/perimeter.hpp"
#include "ellperim/rational.hpp"
#include "ellperim/real.hpp"

#include <optional>
#include <string>

namespace ellperim {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

std::string to_string(Verdict v);

/// Margin factor applied to enclosure widths before a strict inequality is
/// declared to hold.
inline constexpr int kStrictnessMargin = 10;

/// value > bound: Pass if mid - bound > 10 width, Fail if hi <= bound.
Verdict check_strictly_above(const Enclosure& value, const Real& bound);
/// value < bound: Pass if bound - mid > 10 width, Fail if lo >= bound.
Verdict check_strictly_below(const Enclosure& value, const Real& bound);
/// value <= bound where equality may be attained: Pass if lo <= bound.
Verdict check_at_most(const Enclosure& value, const Real& bound);

struct ThetaBounds {
  Rational lower;        // 3/2^17
  Real upper;            // 4/pi - 14/11
  Real printed_upper;    // (14/11)(22/7 - pi), equal to pi * upper
  Real identity_residual;
  bool identity_ok = false;  // residual < 1e-15
};

struct DeltaEBounds {
  Real lower;  // 3 pi / 2^36
  Real upper;  // (7/11)(22/7 - pi) / 2^18
  Real ratio_residual;        // |upper/lower - theta_upper/theta_lower|
  bool normalization_ok = false;
};

ThetaBounds theta_bounds();
DeltaEBounds delta_e_bounds();

struct ErrorReport {
  Real a;
  Real b;
  bool swapped = false;
  Real lambda;
  Real eccentricity;
  Real tolerance;

  Enclosure p;
  Real p_ramanujan;
  Enclosure epsilon;         // p - p_R, tightest available enclosure
  Enclosure epsilon_direct;  // p - p_R from the two perimeter values
  Real lower_bound;   // pi (a+b) 3/2^17 lambda^10
  Real upper_bound;   // pi (a+b) (4/pi - 14/11) lambda^10
  Enclosure theta;
  Enclosure delta_e;
  Enclosure epsilon_lambda_form;
  Enclosure epsilon_e_form;
  Real ramanujan_estimate;  // 3 a e^20 / 2^36
  bool forms_consistent = false;

  Verdict underestimate = Verdict::NotApplicable;  // p_R < p
  Verdict lower_check = Verdict::NotApplicable;
  Verdict upper_check = Verdict::NotApplicable;
  Verdict estimate_check = Verdict::NotApplicable;
  std::string bound_form_note;

  /// All applicable verdicts pass and the three forms of eps agree.
  bool passed() const;
};

/// Tolerance used when the caller has no preference: fine enough for the
/// strictness checks except in the slowly converging regime near lambda = 1.
Real auto_tolerance(const Ellipse& e);

/// tol bounds the width of the perimeter enclosure (and hence of eps).
ErrorReport error_report(const Ellipse& e, const Real& tol,
                         std::size_t max_terms = kDefaultMaxTerms);

/// theta and delta(e) at a given shape, with their containment verdicts.
struct BoundsQuery {
  ThetaBounds theta_limits;
  DeltaEBounds delta_limits;
  bool has_point = false;
  Real lambda;
  Real eccentricity;
  Enclosure theta;
  Enclosure delta_e;
  Verdict theta_lower = Verdict::NotApplicable;
  Verdict theta_upper = Verdict::NotApplicable;
  Verdict delta_lower = Verdict::NotApplicable;
  Verdict delta_upper = Verdict::NotApplicable;

  bool passed() const;
};

BoundsQuery bounds_query();
/// lambda in (0, 1]; tol bounds the enclosure of B(lambda^2).
BoundsQuery bounds_query_lambda(const Real& lambda, const std::optional<Real>& tol = std::nullopt);
/// e in (0, 1].
BoundsQuery bounds_query_eccentricity(const Real& e, const std::optional<Real>& tol = std::nullopt);

/// Quadrature value of Ivory's integral against the series enclosure.
struct IvoryCheck {
  double x = 0.0;
  double quadrature_tolerance = 0.0;
  double quadrature = 0.0;
  Enclosure series;
  double residual = 0.0;  // |quadrature - mid(series)|
  double allowed = 0.0;   // quadrature_tolerance + width(series) + rounding
  bool passed = false;
};

IvoryCheck ivory_check(double x, double quadrature_tolerance = 1e-12);

}  // namespace ellperim
