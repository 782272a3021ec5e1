#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellperim/error.hpp"
#include "ellperim/perimeter.hpp"
#include "ellperim/series.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ellperim;
namespace mp = boost::multiprecision;

namespace {

Real four_over_pi() { return 4 / real_pi(); }

}  // namespace

TEST_CASE("eval_B endpoints") {
  const Enclosure zero = eval_B(Real(0), Real("1e-12"));
  CHECK(zero.lo == 1);
  CHECK(zero.hi == 1);
  CHECK(zero.regime == TailRegime::Exact);

  const Enclosure one = eval_B(Real(1), Real("1e-8"));
  CHECK(one.contains(four_over_pi()));
  CHECK(one.width() <= Real("1e-8"));
  CHECK(one.regime == TailRegime::Algebraic);
}

TEST_CASE("eval_B errors") {
  CHECK_THROWS_AS(eval_B(Real("-0.1"), Real("1e-12")), Error);
  CHECK_THROWS_AS(eval_B(Real("1.01"), Real("1e-12")), Error);
  CHECK_THROWS_AS(eval_B(Real("0.5"), Real(0)), Error);
  try {
    eval_B(Real(1), Real("1e-12"), 1000);
    FAIL("expected a tolerance error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Tolerance);
  }
  try {
    eval_B(Real("0.5"), Real("1e-70"));
    FAIL("expected a precision-floor error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Tolerance);
  }
}

TEST_CASE("eval_B widths honour the tolerance") {
  for (const char* x : {"0.01", "0.3", "0.9", "0.99", "0.9995"}) {
    const Real tol("1e-11");
    const Enclosure e = eval_B(Real(x), tol);
    CHECK(e.width() <= tol);
    CHECK(e.lo <= e.hi);
  }
  CHECK(eval_B(Real(1), Real("1e-6")).regime == TailRegime::Algebraic);
  CHECK(eval_B(Real("0.3"), Real("1e-11")).regime == TailRegime::Geometric);
}

TEST_CASE("eval_B against exact partial sums") {
  // x = 1/2: exact rational partial sum to 200 terms plus a generous tail.
  const PowerSeries bs = b_series(200);
  Rational sum(0);
  Rational xp(1);
  for (std::size_t n = 0; n <= 200; ++n) {
    sum += bs[n] * xp;
    xp *= Rational(1, 2);
  }
  const Enclosure e = eval_B(Real("0.5"), Real("1e-40"));
  CHECK(e.contains(to_real(sum)));
  CHECK(mp::abs(e.mid() - to_real(sum)) < Real("1e-40"));
}

TEST_CASE("eval_A closed form") {
  CHECK(eval_A(Real(0)) == 1);
  CHECK(mp::abs(eval_A(Real(1)) - Real(14) / 11) < Real("1e-48"));
  CHECK_THROWS_AS(eval_A(Real(2)), Error);

  // Against its own Maclaurin series at x = 1/2 (radius of convergence 4/3).
  const PowerSeries as = a_series_via_composition(160);
  Real partial = 0;
  Real xp = 1;
  for (std::size_t n = 0; n <= 160; ++n) {
    partial += to_real(as[n]) * xp;
    xp /= 2;
  }
  CHECK(mp::abs(partial - eval_A(Real("0.5"))) < Real("1e-12"));
}

TEST_CASE("Ivory quadrature") {
  CHECK(std::abs(ivory_integral(0.0) - 1.0) < 1e-14);
  CHECK(std::abs(ivory_integral(1.0) - 4.0 / std::numbers::pi) < 1e-12);
  CHECK_THROWS_AS(ivory_integral(1.5), Error);

  const Enclosure b25 = eval_B(Real("0.25"), Real("1e-12"));
  const double q25 = ivory_integral(0.25);
  CHECK(static_cast<double>(b25.lo) - 1e-12 <= q25);
  CHECK(q25 <= static_cast<double>(b25.hi) + 1e-12);

  const Enclosure b7 = eval_B(Real("0.7"), Real("1e-12"));
  CHECK(std::abs(ivory_integral(0.7) - static_cast<double>(b7.mid())) < 2e-12);
}

TEST_CASE("oracle agreement across the grid") {
  for (int i = 0; i <= 20; ++i) {
    const double x = 0.05 * i;
    const Real tol = i == 20 ? Real("1e-9") : Real("1e-13");
    const Enclosure b = eval_B(Real(x), tol);
    const double q = ivory_integral(x);
    CHECK_MESSAGE(std::abs(q - static_cast<double>(b.mid())) <= 1e-12 + static_cast<double>(b.width()) + 1e-14,
                  "x = " << x);
  }
}

TEST_CASE("ellipse construction") {
  const Ellipse e = Ellipse::from_axes(Real(1), Real(3));
  CHECK(e.swapped());
  CHECK(e.a() == 3);
  CHECK(e.b() == 1);
  CHECK(mp::abs(e.lambda() - Real("0.5")) < Real("1e-49"));
  CHECK_THROWS_AS(Ellipse::from_axes(Real(-1), Real(1)), Error);
  CHECK_THROWS_AS(Ellipse::from_axes(Real(0), Real(0)), Error);
  CHECK_THROWS_AS(Ellipse::from_eccentricity(Real(1), Real("1.5")), Error);

  const Ellipse flat = Ellipse::from_axes(Real(1), Real(0));
  CHECK(flat.lambda() == 1);
  CHECK(flat.eccentricity() == 1);
}

TEST_CASE("lambda and eccentricity conversions") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Real e(u(rng));
    const Ellipse el = Ellipse::from_eccentricity(Real(1), e);
    const Real lam = lambda_from_eccentricity(e);
    CHECK(mp::abs(lam - el.lambda()) < Real("1e-45"));
    CHECK(mp::abs(eccentricity_from_lambda(lam) - e) < Real("1e-45"));
    CHECK(lam >= 0);
    CHECK(lam <= 1);
  }
  // small e keeps full relative accuracy
  const Real tiny("1e-20");
  CHECK(mp::abs(lambda_from_eccentricity(tiny) / (tiny * tiny / 4) - 1) < Real("1e-35"));
}

TEST_CASE("perimeter special cases") {
  const Enclosure circle = perimeter(Ellipse::from_axes(Real(1), Real(1)), Real("1e-12"));
  CHECK(circle.contains(2 * real_pi()));
  CHECK(circle.width() < Real("1e-12"));

  const Enclosure flat = perimeter(Ellipse::from_axes(Real(1), Real(0)), Real("1e-6"));
  CHECK(flat.contains(Real(4)));
  CHECK(flat.width() < Real("1e-5"));

  const Enclosure p21 = perimeter(Ellipse::from_axes(Real(2), Real(1)), Real("1e-12"));
  const double arc = arclength_integral(2.0, 1.0);
  CHECK(static_cast<double>(p21.lo) - 1e-11 <= arc);
  CHECK(arc <= static_cast<double>(p21.hi) + 1e-11);
}

TEST_CASE("Ramanujan perimeter forms") {
  const Ellipse circle = Ellipse::from_axes(Real(1), Real(1));
  CHECK(mp::abs(perimeter_ramanujan(circle) - 2 * real_pi()) < Real("1e-48"));
  CHECK(mp::abs(perimeter_ramanujan_normalized(circle) - 2 * real_pi()) < Real("1e-48"));

  const Ellipse flat = Ellipse::from_axes(Real(1), Real(0));
  CHECK(mp::abs(perimeter_ramanujan(flat) - 14 * real_pi() / 11) < Real("1e-45"));

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  const Real ulp = real_epsilon();
  for (int i = 0; i < 200; ++i) {
    const Ellipse e = Ellipse::from_axes(Real(u(rng)) + Real("0.001"), Real(u(rng)));
    const Real direct = perimeter_ramanujan(e);
    CHECK(mp::abs(direct - perimeter_ramanujan_normalized(e)) <= 8 * ulp * direct);
  }
}

TEST_CASE("perimeter scale equivariance and oracle soundness") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 5.0);
  for (int i = 0; i < 25; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double s = u(rng);
    const Enclosure p = perimeter(Ellipse::from_axes(Real(a), Real(b)), Real("1e-20"));
    const Enclosure ps = perimeter(Ellipse::from_axes(Real(a) * s, Real(b) * s), Real("1e-20"));
    const Real scaled_lo = p.lo * s;
    const Real scaled_hi = p.hi * s;
    CHECK(ps.lo <= scaled_hi + Real("1e-40"));
    CHECK(scaled_lo <= ps.hi + Real("1e-40"));

    const double arc = arclength_integral(a, b);
    CHECK(static_cast<double>(p.lo) - 1e-11 <= arc);
    CHECK(arc <= static_cast<double>(p.hi) + 1e-11);
  }
}

TEST_CASE("discrepancy") {
  const Discrepancy at_one = discrepancy(Real(1), Real("1e-9"));
  CHECK(at_one.delta.contains(4 / real_pi() - Real(14) / 11));

  const Discrepancy small = discrepancy(Real("1e-4"), Real("1e-45"));
  const Real delta5 = Real(3) / 131072;
  CHECK(mp::abs(small.normalized.mid() - delta5) < Real("1e-8"));
  CHECK(small.normalized.mid() > delta5);

  const Discrepancy half = discrepancy(Real("0.5"), Real("1e-40"));
  const Real x5 = mp::pow(Real("0.5"), 5);
  CHECK(half.delta.lo > delta5 * x5);
  CHECK(half.delta.hi < (4 / real_pi() - Real(14) / 11) * x5);

  CHECK_THROWS_AS(discrepancy(Real(0), Real("1e-12")), Error);
}

TEST_CASE("discrepancy matches the exact delta series") {
  // Delta(x) = sum delta_n x^n with delta_n >= 0 exact.
  const auto rows = coefficient_table(300);
  const Real x("0.3");
  Real sum = 0;
  Real xp = 1;
  for (const auto& r : rows) {
    sum += to_real(r.delta) * xp;
    xp *= x;
  }
  const Discrepancy d = discrepancy(x, Real("1e-40"));
  CHECK(mp::abs(d.delta.mid() - sum) < Real("1e-38"));
}

TEST_CASE("both discrepancy routes agree near the switch-over") {
  const auto rows = coefficient_table(400);
  for (const char* xs : {"0.5", "0.7"}) {
    const Real x(xs);
    Real sum = 0;
    Real xp = 1;
    for (const auto& r : rows) {
      sum += to_real(r.delta) * xp;
      xp *= x;
    }
    const Discrepancy d = discrepancy(x, Real("1e-44"));
    CHECK(mp::abs(d.delta.mid() - sum) < Real("1e-42"));
  }
  const Real x("0.5");
  const Enclosure b = eval_B(x, Real("1e-45"));
  const Real subtractive = b.mid() - eval_A(x);
  CHECK(mp::abs(subtractive - discrepancy(x, Real("1e-45")).delta.mid()) < Real("1e-44"));
}
