#include "ellperim/bounds.hpp"

#include "ellperim/error.hpp"

#include <algorithm>
#include <cmath>

namespace ellperim {

namespace mp = boost::multiprecision;

namespace {

const char* const kBoundFormNote =
    "theta is normalised by eps = pi(a+b) theta lambda^10, so its upper limit is "
    "4/pi - 14/11 (attained at lambda = 1); the equivalent constant "
    "(14/11)(22/7 - pi) = pi (4/pi - 14/11) bounds pi*theta, i.e. eps/((a+b) lambda^10)";

Real theta_upper_value() { return 4 / real_pi() - Real(14) / 11; }

Real theta_lower_value() { return Real(3) / Real(131072); }

Real pow2(int e) { return mp::ldexp(Real(1), e); }

bool overlaps(const Enclosure& x, const Enclosure& y, const Real& slack) {
  return x.lo - slack <= y.hi + slack && y.lo - slack <= x.hi + slack;
}

Enclosure point(const Real& v) {
  Enclosure e;
  e.lo = e.hi = v;
  return e;
}

Real default_series_tolerance(const Real& x) {
  return x <= Real("0.999") ? Real("1e-32") : Real("1e-13");
}

BoundsQuery query_at(const Real& lambda, const std::optional<Real>& tol) {
  if (!mp::isfinite(lambda) || lambda <= 0 || lambda > 1)
    throw Error(ErrorCode::Domain, "bounds: lambda (or e) must lie in (0, 1]");
  BoundsQuery q = bounds_query();
  q.has_point = true;
  q.lambda = lambda;
  q.eccentricity = eccentricity_from_lambda(lambda);
  const Real x = lambda * lambda;
  const Discrepancy d = discrepancy(x, tol ? *tol : default_series_tolerance(x));
  q.theta = d.normalized;
  q.delta_e = scale_outward(q.theta, real_pi() / pow2(19), 8 * real_epsilon());
  const bool endpoint = (lambda == 1);
  q.theta_lower = check_strictly_above(q.theta, theta_lower_value());
  q.theta_upper = endpoint ? check_at_most(q.theta, q.theta_limits.upper)
                           : check_strictly_below(q.theta, q.theta_limits.upper);
  q.delta_lower = check_strictly_above(q.delta_e, q.delta_limits.lower);
  q.delta_upper = endpoint ? check_at_most(q.delta_e, q.delta_limits.upper)
                           : check_strictly_below(q.delta_e, q.delta_limits.upper);
  return q;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::NotApplicable:
      return "n/a";
  }
  return "unknown";
}

Verdict check_strictly_above(const Enclosure& value, const Real& bound) {
  if (value.hi <= bound) return Verdict::Fail;
  if (value.lo > bound && value.mid() - bound > kStrictnessMargin * value.width()) return Verdict::Pass;
  return Verdict::Inconclusive;
}

Verdict check_strictly_below(const Enclosure& value, const Real& bound) {
  if (value.lo >= bound) return Verdict::Fail;
  if (value.hi < bound && bound - value.mid() > kStrictnessMargin * value.width()) return Verdict::Pass;
  return Verdict::Inconclusive;
}

Verdict check_at_most(const Enclosure& value, const Real& bound) {
  // The bound is computed to a few ulps; allow that much.
  const Real slack = 16 * real_epsilon() * mp::abs(bound);
  return value.lo <= bound + slack ? Verdict::Pass : Verdict::Fail;
}

ThetaBounds theta_bounds() {
  ThetaBounds t;
  t.lower = Rational(3) / Rational::pow2(17);
  t.upper = theta_upper_value();
  t.printed_upper = Real(14) / 11 * (Real(22) / 7 - real_pi());
  t.identity_residual = mp::abs(t.printed_upper - real_pi() * t.upper);
  t.identity_ok = t.identity_residual < Real("1e-15");
  return t;
}

DeltaEBounds delta_e_bounds() {
  DeltaEBounds d;
  d.lower = 3 * real_pi() / pow2(36);
  d.upper = Real(7) / 11 * (Real(22) / 7 - real_pi()) / pow2(18);
  const Real scale = real_pi() / pow2(19);
  const Real tol("1e-40");
  const bool lower_ok = mp::abs(d.lower - scale * theta_lower_value()) <= tol * d.lower;
  const bool upper_ok = mp::abs(d.upper - scale * theta_upper_value()) <= tol * d.upper;
  d.ratio_residual = mp::abs(d.upper / d.lower - theta_upper_value() / theta_lower_value());
  d.normalization_ok = lower_ok && upper_ok && d.ratio_residual < Real("1e-12");
  return d;
}

bool ErrorReport::passed() const {
  auto ok = [](Verdict v) { return v == Verdict::Pass || v == Verdict::NotApplicable; };
  return forms_consistent && ok(underestimate) && ok(lower_check) && ok(upper_check) &&
         ok(estimate_check);
}

Real auto_tolerance(const Ellipse& e) {
  const Real lambda = e.lambda();
  const Real scale = real_pi() * (e.a() + e.b());
  return (lambda * lambda <= Real("0.999") ? Real("1e-30") : Real("1e-12")) * scale;
}

ErrorReport error_report(const Ellipse& e, const Real& tol, std::size_t max_terms) {
  ErrorReport r;
  r.a = e.a();
  r.b = e.b();
  r.swapped = e.swapped();
  r.lambda = e.lambda();
  r.eccentricity = e.eccentricity();
  r.tolerance = tol;
  r.bound_form_note = kBoundFormNote;

  r.p = perimeter(e, tol, max_terms);
  r.p_ramanujan = perimeter_ramanujan(e);

  if (r.lambda == 0) {
    r.epsilon = r.epsilon_direct = r.theta = r.delta_e = r.epsilon_lambda_form = r.epsilon_e_form = point(0);
    r.lower_bound = r.upper_bound = r.ramanujan_estimate = 0;
    r.forms_consistent = r.p.contains(r.p_ramanujan) ||
                         mp::abs(r.p.mid() - r.p_ramanujan) <= 16 * real_epsilon() * r.p_ramanujan;
    return r;
  }

  const Real scale = real_pi() * (r.a + r.b);
  const Real eps = real_epsilon();
  const Real pr_slack = 16 * eps * r.p_ramanujan;
  r.epsilon_direct.lo = r.p.lo - r.p_ramanujan - pr_slack;
  r.epsilon_direct.hi = r.p.hi - r.p_ramanujan + pr_slack;
  r.epsilon_direct.regime = r.p.regime;
  r.epsilon_direct.terms = r.p.terms;

  const Real lambda10 = mp::pow(r.lambda, 10);
  r.lower_bound = scale * theta_lower_value() * lambda10;
  r.upper_bound = scale * theta_upper_value() * lambda10;

  const Discrepancy d = discrepancy(r.lambda * r.lambda, tol / (2 * scale), max_terms);
  r.theta = d.normalized;
  r.delta_e = scale_outward(r.theta, real_pi() / pow2(19), 8 * eps);
  r.epsilon_lambda_form = scale_outward(r.theta, scale * lambda10, 32 * eps);

  const Real& ecc = r.eccentricity;
  const Real s = mp::sqrt((1 - ecc) * (1 + ecc));
  const Real e20 = mp::pow(ecc, 20);
  const Real shape = mp::pow(2 / (1 + s), 19);
  r.epsilon_e_form = scale_outward(r.delta_e, r.a * shape * e20, 256 * eps);
  r.ramanujan_estimate = 3 * r.a * e20 / pow2(36);

  // p - p_R loses relative accuracy for nearly circular shapes while the
  // lambda form does not; both are enclosures, so eps lies in their overlap.
  const Real slack = 1024 * eps * r.p.mid();
  r.forms_consistent = overlaps(r.epsilon_direct, r.epsilon_lambda_form, slack) &&
                       overlaps(r.epsilon_lambda_form, r.epsilon_e_form, slack);
  r.epsilon = r.epsilon_direct;
  r.epsilon.lo = std::max(r.epsilon_direct.lo, r.epsilon_lambda_form.lo);
  r.epsilon.hi = std::min(r.epsilon_direct.hi, r.epsilon_lambda_form.hi);
  if (r.epsilon.lo > r.epsilon.hi) r.epsilon = r.epsilon_direct;

  r.underestimate = check_strictly_above(r.epsilon, Real(0));  // p_R < p
  r.lower_check = check_strictly_above(r.epsilon, r.lower_bound);
  r.upper_check = r.lambda == 1 ? check_at_most(r.epsilon, r.upper_bound)
                                : check_strictly_below(r.epsilon, r.upper_bound);
  r.estimate_check = check_strictly_above(r.epsilon, r.ramanujan_estimate);
  return r;
}

bool BoundsQuery::passed() const {
  if (!theta_limits.identity_ok || !delta_limits.normalization_ok) return false;
  if (!has_point) return true;
  auto ok = [](Verdict v) { return v == Verdict::Pass; };
  return ok(theta_lower) && ok(theta_upper) && ok(delta_lower) && ok(delta_upper);
}

BoundsQuery bounds_query() {
  BoundsQuery q;
  q.theta_limits = theta_bounds();
  q.delta_limits = delta_e_bounds();
  return q;
}

BoundsQuery bounds_query_lambda(const Real& lambda, const std::optional<Real>& tol) {
  return query_at(lambda, tol);
}

BoundsQuery bounds_query_eccentricity(const Real& e, const std::optional<Real>& tol) {
  if (!mp::isfinite(e) || e <= 0 || e > 1)
    throw Error(ErrorCode::Domain, "bounds: e must lie in (0, 1]");
  BoundsQuery q = query_at(lambda_from_eccentricity(e), tol);
  q.eccentricity = e;
  return q;
}

IvoryCheck ivory_check(double x, double quadrature_tolerance) {
  if (!(quadrature_tolerance > 0.0))
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  IvoryCheck c;
  c.x = x;
  c.quadrature_tolerance = quadrature_tolerance;
  c.quadrature = ivory_integral(x, quadrature_tolerance);
  const Real xr(x);
  c.series = eval_B(xr, xr <= Real("0.999") ? Real("1e-16") : Real("1e-9"));
  c.residual = std::abs(c.quadrature - static_cast<double>(c.series.mid()));
  c.allowed = quadrature_tolerance + static_cast<double>(c.series.width()) + 1e-14;
  c.passed = c.residual <= c.allowed;
  return c;
}

}  // namespace ellperim
