#include "ellperim/perimeter.hpp"

#include "ellperim/error.hpp"
#include "ellperim/quadrature.hpp"

#include "ellperim/series.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

namespace ellperim {

namespace mp = boost::multiprecision;

namespace {

// Rounding allowance for quantities computed with a handful of operations.
Real few_ulps(const Real& magnitude) { return 16 * real_epsilon() * mp::abs(magnitude); }

void check_unit_interval(const Real& x, const char* what) {
  if (!mp::isfinite(x) || x < 0 || x > 1)
    throw Error(ErrorCode::Domain, std::string(what) + ": argument must lie in [0, 1]");
}

// Sum_{n>N} B_n x^n <= x^{N+1} sum_{n>N} 1/(pi n (2n-1)^2)
//                  <= x^{N+1} / pi * int_N^inf dt / (t (2t-1)^2),
// using C(2n,n)/4^n <= 1/sqrt(pi n).
Real algebraic_tail(const Real& x_pow_next, std::size_t n) {
  const Real nn(static_cast<unsigned long long>(n));
  const Real integral = 1 / (2 * nn - 1) + mp::log1p(-1 / (2 * nn));
  return x_pow_next * integral / real_pi();
}

// delta_n = B_n - A_n and B_n as working-precision values, grown on demand.
class DeltaCache {
 public:
  // Ensures indices 0..n are available and returns copies of both tables.
  void ensure(std::size_t n, std::vector<Real>& delta, std::vector<Real>& b) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (delta_.size() <= n) {
      std::size_t order = std::max<std::size_t>(64, 2 * delta_.size());
      while (order <= n) order *= 2;
      const PowerSeries bs = b_series(order);
      const PowerSeries as = a_series_via_composition(order);
      delta_.assign(order + 1, Real(0));
      b_.assign(order + 1, Real(0));
      for (std::size_t k = 0; k <= order; ++k) {
        delta_[k] = to_real(bs[k] - as[k]);
        b_[k] = to_real(bs[k]);
      }
    }
    delta = delta_;
    b = b_;
  }

 private:
  std::mutex mutex_;
  std::vector<Real> delta_;
  std::vector<Real> b_;
};

DeltaCache& delta_cache() {
  static DeltaCache cache;
  return cache;
}

// (B(x) - A(x)) / x^5 = sum_{n>=5} delta_n x^{n-5}, summed directly for
// x <= 1/2 so that small x does not lose everything to cancellation. Every
// delta_n with n >= 5 is positive. For n >= 7 the explicit terms of A_n shrink
// by a factor of at least 6 away from the last one, |a_0| = |a_1|/3 and
// |a_{n-1}| = f(n) B_n < B_n, so |A_n| < 2 B_n and delta_n < 3 B_n; B_n is
// decreasing, giving the tail bound 3 B_{N+1} x^{N-4} / (1 - x).
Enclosure normalized_discrepancy_series(const Real& x, const Real& tol, std::size_t max_terms) {
  const Real eps = real_epsilon();
  std::vector<Real> delta;
  std::vector<Real> b;
  std::size_t have = 0;
  Real sum = 0;
  Real x_pow = 1;  // x^{n-5}
  for (std::size_t n = 5;; ++n) {
    if (n + 1 >= have) {
      delta_cache().ensure(std::max<std::size_t>(n + 1, 2 * have), delta, b);
      have = delta.size();
    }
    sum += delta[n] * x_pow;
    x_pow *= x;  // x^{n-4}
    if (n >= 7) {
      const Real tail = 3 * b[n + 1] * x_pow / (1 - x) * (1 + Real("1e-9"));
      const Real rounding = Real(8 * n + 16) * eps * sum;
      if (tail + 2 * rounding <= tol) {
        Enclosure out;
        out.lo = sum - rounding;
        out.hi = sum + tail + rounding;
        out.regime = TailRegime::Geometric;
        out.terms = n - 4;
        return out;
      }
    }
    if (n + 1 >= max_terms)
      throw Error(ErrorCode::Tolerance,
                  "series tolerance not reachable within " + std::to_string(max_terms) + " terms");
  }
}

}  // namespace

Enclosure scale_outward(const Enclosure& in, const Real& factor, const Real& rel) {
  Enclosure out = in;
  const Real lo = in.lo * factor;
  const Real hi = in.hi * factor;
  out.lo = lo - mp::abs(lo) * rel;
  out.hi = hi + mp::abs(hi) * rel;
  return out;
}

std::string to_string(TailRegime regime) {
  switch (regime) {
    case TailRegime::Exact:
      return "exact";
    case TailRegime::Geometric:
      return "geometric";
    case TailRegime::Algebraic:
      return "algebraic";
  }
  return "unknown";
}

Ellipse Ellipse::from_axes(const Real& a, const Real& b) {
  if (!mp::isfinite(a) || !mp::isfinite(b))
    throw Error(ErrorCode::InvalidArgument, "semi-axes must be finite");
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "semi-axes must be non-negative");
  if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "at least one semi-axis must be positive");
  if (b > a) return Ellipse(b, a, true);
  return Ellipse(a, b, false);
}

Ellipse Ellipse::from_eccentricity(const Real& a, const Real& e) {
  if (!mp::isfinite(a) || a <= 0)
    throw Error(ErrorCode::InvalidArgument, "semi-major axis must be positive");
  check_unit_interval(e, "eccentricity");
  return Ellipse(a, a * mp::sqrt((1 - e) * (1 + e)), false);
}

Real Ellipse::lambda() const { return (a_ - b_) / (a_ + b_); }

Real Ellipse::eccentricity() const { return mp::sqrt((a_ - b_) * (a_ + b_)) / a_; }

Real lambda_from_eccentricity(const Real& e) {
  check_unit_interval(e, "eccentricity");
  const Real d = 1 + mp::sqrt((1 - e) * (1 + e));
  return e * e / (d * d);
}

Real eccentricity_from_lambda(const Real& lambda) {
  check_unit_interval(lambda, "lambda");
  return 2 * mp::sqrt(lambda) / (1 + lambda);
}

Enclosure eval_B(const Real& x, const Real& tol, std::size_t max_terms) {
  check_unit_interval(x, "eval_B");
  if (!mp::isfinite(tol) || tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (tol < 64 * real_epsilon())
    throw Error(ErrorCode::Tolerance, "tolerance below the working-precision floor");

  Enclosure out;
  if (x == 0) {
    out.lo = out.hi = 1;
    out.terms = 1;
    return out;
  }

  const bool unit = (x == 1);
  const Real geometric_factor = unit ? Real(0) : 1 / (1 - x);
  const Real eps = real_epsilon();
  // Every term is positive, so the accumulated relative rounding error of the
  // partial sum is bounded by a multiple of N eps.
  const Real tail_inflation = 1 + Real("1e-9");

  Real coeff = 1;  // B_n
  Real x_pow = 1;  // x^n
  Real sum = 1;
  for (std::size_t n = 0;; ++n) {
    // n terms 0..n are in `sum`; prepare term n+1.
    const Real r = Real(2 * static_cast<long long>(n) - 1) / Real(2 * static_cast<long long>(n) + 2);
    coeff *= r * r;
    x_pow *= x;
    const Real next = coeff * x_pow;
    const Real rounding = Real(8 * n + 16) * eps * sum;

    Real tail = -1;
    TailRegime regime = TailRegime::Geometric;
    if (!unit) tail = next * geometric_factor;
    // The algebraic bound costs a logarithm, so it is only tried periodically
    // and only where it can beat the geometric one.
    if (n >= 1 && n % 32 == 0 && (unit || x > Real("0.9"))) {
      const Real alg = algebraic_tail(x_pow, n);
      if (tail < 0 || alg < tail) {
        tail = alg;
        regime = TailRegime::Algebraic;
      }
    }
    if (tail >= 0) {
      tail *= tail_inflation;
      if (tail + 2 * rounding <= tol) {
        out.lo = sum - rounding;
        out.hi = sum + tail + rounding;
        out.regime = regime;
        out.terms = n + 1;
        return out;
      }
    }
    if (n + 1 >= max_terms)
      throw Error(ErrorCode::Tolerance,
                  "series tolerance not reachable within " + std::to_string(max_terms) + " terms");
    sum += next;
  }
}

Real eval_A(const Real& x) {
  check_unit_interval(x, "eval_A");
  return 1 + 3 * x / (10 + mp::sqrt(4 - 3 * x));
}

double ivory_integral(double x, double abs_tol) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0)
    throw Error(ErrorCode::Domain, "ivory_integral: argument must lie in [0, 1]");
  const double s = std::sqrt(x);
  auto integrand = [s, x](double phi) {
    return std::sqrt(std::max(0.0, 1.0 + 2.0 * s * std::cos(2.0 * phi) + x));
  };
  const double half_pi = std::numbers::pi / 2.0;
  const QuadratureOptions opts{abs_tol * std::numbers::pi / 2.0, 4096};
  const double left = integrate_adaptive(integrand, 0.0, half_pi, opts).value;
  const double right = integrate_adaptive(integrand, half_pi, std::numbers::pi, opts).value;
  return (left + right) / std::numbers::pi;
}

double arclength_integral(double a, double b, double abs_tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0)
    throw Error(ErrorCode::InvalidArgument, "semi-axes must be finite and non-negative");
  auto integrand = [a, b](double phi) {
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    return std::sqrt(a * a * s * s + b * b * c * c);
  };
  const QuadratureOptions opts{abs_tol / 4.0, 4096};
  return 4.0 * integrate_adaptive(integrand, 0.0, std::numbers::pi / 2.0, opts).value;
}

Enclosure perimeter(const Ellipse& e, const Real& tol, std::size_t max_terms) {
  if (!mp::isfinite(tol) || tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const Real scale = real_pi() * (e.a() + e.b());
  const Real lambda = e.lambda();
  Enclosure b = eval_B(lambda * lambda, tol / (2 * scale), max_terms);
  // x = lambda^2 is itself rounded; B' <= B'(1) < 1 on [0, 1], so a shift of
  // a few ulps in x moves B by at most a few ulps.
  b.lo -= few_ulps(1);
  b.hi += few_ulps(1);
  return scale_outward(b, scale, 8 * real_epsilon());
}

Real perimeter_ramanujan(const Ellipse& e) {
  const Real& a = e.a();
  const Real& b = e.b();
  const Real s = a + b;
  const Real d = a - b;
  return real_pi() * (s + 3 * d * d / (10 * s + mp::sqrt(a * a + 14 * a * b + b * b)));
}

Real perimeter_ramanujan_normalized(const Ellipse& e) {
  const Real lambda = e.lambda();
  return real_pi() * (e.a() + e.b()) * eval_A(lambda * lambda);
}

Discrepancy discrepancy(const Real& x, const Real& tol, std::size_t max_terms) {
  if (!mp::isfinite(x) || x <= 0 || x > 1)
    throw Error(ErrorCode::Domain, "discrepancy: argument must lie in (0, 1]");
  const Real x2 = x * x;
  const Real x5 = x2 * x2 * x;
  Discrepancy out;
  if (x <= Real("0.5")) {
    out.normalized = normalized_discrepancy_series(x, tol, max_terms);
    out.delta = scale_outward(out.normalized, x5, 8 * real_epsilon());
    return out;
  }

  const Enclosure b = eval_B(x, tol, max_terms);
  const Real a = eval_A(x);
  const Real slack = few_ulps(a);

  out.delta = b;
  out.delta.lo = b.lo - a - slack;
  out.delta.hi = b.hi - a + slack;
  out.normalized = scale_outward(out.delta, 1 / x5, 8 * real_epsilon());
  return out;
}

}  // namespace ellperim
