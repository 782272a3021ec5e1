#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellperim/error.hpp"
#include "ellperim/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace ellperim;

TEST_CASE("smooth integrands") {
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::abs(r.value - 2.0) < 1e-13);
  const auto e = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::abs(e.value - (std::exp(1.0) - 1.0)) < 1e-13);
}

TEST_CASE("kinks and endpoint singularities refine until tolerance") {
  const auto k = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                                    {1e-11, 4096});
  CHECK(std::abs(k.value - (0.045 + 0.245)) < 1e-10);
  CHECK(k.panels > 1);
  const auto s = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, {1e-10, 4096});
  CHECK(std::abs(s.value - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("budget and argument errors") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / std::sqrt(x + 1e-300); }, 0.0, 1.0,
                                     {1e-14, 8}),
                  Error);
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, {0.0, 10}), Error);
}
