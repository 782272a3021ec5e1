#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellperim/error.hpp"
#include "ellperim/series.hpp"
#include "oracles.hpp"

using namespace ellperim;

TEST_CASE("rational canonical form and exact arithmetic") {
  const Rational r(6, -8);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(1).str() == "1/1");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(-1, 32).pow(3) == Rational(-1, 32768));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational::pow2(-17) == Rational(1, 131072));
  CHECK(Rational::parse("882/2097152") == Rational(441, 1048576));
  CHECK(binomial(12, 6) == Rational(924));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
}

TEST_CASE("series primitives") {
  const PowerSeries one_plus_x(std::vector<Rational>{1, 1, 0});
  const PowerSeries one_minus_x(std::vector<Rational>{1, -1, 0});
  CHECK(ps_mul(one_plus_x, one_minus_x) == PowerSeries(std::vector<Rational>{1, 0, -1}));

  CHECK(ps_binomial_sqrt(Rational(3, 4), 1) == PowerSeries(std::vector<Rational>{1, Rational(-3, 8)}));
  CHECK(ps_geom_recip(Rational(32), 2) ==
        PowerSeries(std::vector<Rational>{Rational(1, 32), Rational(-1, 1024), Rational(1, 32768)}));
  CHECK_THROWS_AS(ps_geom_recip(Rational(0), 3), Error);

  // (1 - cx)^{1/2} squared is 1 - cx.
  const PowerSeries s = ps_binomial_sqrt(Rational(5, 7), 12);
  const PowerSeries sq = ps_mul(s, s);
  CHECK(sq[0] == Rational(1));
  CHECK(sq[1] == Rational(-5, 7));
  for (std::size_t n = 2; n <= 12; ++n) CHECK(sq[n] == Rational(0));

  // Orders: min of operands; reading past the order throws.
  const PowerSeries shorter(2);
  CHECK(ps_mul(s, shorter).order() == 2);
  CHECK_THROWS_AS(shorter[3], Error);
  CHECK_THROWS_AS(PowerSeries(std::vector<Rational>{}), Error);
}

TEST_CASE("Ivory coefficients B_n") {
  CHECK(b_coeff(0) == Rational(1));
  CHECK(b_coeff(1) == Rational(1, 4));
  // The commonly printed 1/16, 1/64, 25/4096 for n = 2..4 are 4x too large.
  CHECK(b_coeff(2) == Rational(1, 64));
  CHECK(b_coeff(3) == Rational(1, 256));
  CHECK(b_coeff(4) == Rational(25, 16384));
  CHECK(b_coeff(5) == Rational(49) / Rational::pow2(16));
  CHECK(b_coeff(6) == Rational(882) / Rational::pow2(21));

  const auto ref = oracle::ivory_coeffs(60);
  const PowerSeries bs = b_series(60);
  for (unsigned long n = 0; n <= 60; ++n) {
    CHECK(b_coeff(n) == ref[n]);
    CHECK(bs[n] == ref[n]);
  }
}

TEST_CASE("Ramanujan coefficients A_n by composition") {
  const PowerSeries a4 = a_series_via_composition(4);
  CHECK(a4 == PowerSeries(std::vector<Rational>{1, Rational(1, 4), Rational(1, 64), Rational(1, 256),
                                                Rational(25, 16384)}));
  const PowerSeries a7 = a_series_via_composition(7);
  CHECK(a7[5] == Rational(95) / Rational::pow2(17));
  CHECK(a7[6] == Rational(803) / Rational::pow2(21));
  CHECK(a7[7] == Rational(7253) / Rational::pow2(25));

  const auto ref = oracle::ramanujan_coeffs(80);
  const PowerSeries a80 = a_series_via_composition(80);
  for (unsigned long n = 0; n <= 80; ++n) CHECK(a80[n] == ref[n]);
}

TEST_CASE("explicit alternating formula agrees with composition") {
  CHECK_THROWS_AS(a_coeff_explicit(0), Error);
  CHECK(a_coeff_explicit(1) == Rational(1, 4));
  // leading term for n = 7: C(12,6) 3^6 / (11 16^8)
  CHECK(a_explicit_term(7, 6) == Rational(924 * 729) / (Rational(11) * Rational::pow2(28)));
  CHECK(a_explicit_term(7, 0) == Rational(1, 4) * Rational(-1, 32).pow(6));

  const PowerSeries as = a_series_via_composition(60);
  for (unsigned long n = 1; n <= 60; ++n) CHECK(a_coeff_explicit(n) == as[n]);
}

TEST_CASE("discrepancy coefficients") {
  for (unsigned long n = 0; n <= 4; ++n) CHECK(delta_coeff(n) == Rational(0));
  CHECK(delta_coeff(5) == Rational(3) / Rational::pow2(17));
  CHECK(delta_coeff(6) == Rational(79) / Rational::pow2(21));
  for (unsigned long n = 5; n <= 60; ++n) CHECK(delta_coeff(n).sign() > 0);
}

TEST_CASE("coefficient table rows are consistent and deterministic") {
  const auto rows = coefficient_table(30);
  REQUIRE(rows.size() == 31);
  for (const auto& r : rows) CHECK(r.delta == r.b - r.a);
  const auto again = coefficient_table(30);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].a.str() == again[i].a.str());
    CHECK(rows[i].b.str() == again[i].b.str());
  }
}
