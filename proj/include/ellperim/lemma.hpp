#pragma once

// Exact verification of the coefficient inequality A_n < B_n (n >= 5), the
// equalities A_n = B_n (n <= 4), and the f/g monotonicity argument behind it.

#include "ellperim/rational.hpp"
#include "ellperim/real.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ellperim {

/// First failing check, with the exact quantities that failed it.
struct Counterexample {
  std::string check;
  unsigned long n = 0;
  std::map<std::string, std::string> witness;
};

struct GMinAnalysis {
  Real location;             // (7 + sqrt 41) / 4
  Real value_closed_form;    // 1 + (37 - sqrt 41) / (399 + 69 sqrt 41)
  Real value_direct;         // g evaluated at location
  bool forms_agree = false;  // |closed - direct| <= 1e-12
  bool derivative_signs_ok = false;
  bool finite_difference_ok = false;
  Real asymptote_probe;      // g(1e6)
};

struct LemmaCertificate {
  unsigned long n_max = 0;
  bool equalities_ok = false;       // A_n = B_n, 1 <= n <= 4
  bool inequalities_ok = false;     // A_n < B_n, 5 <= n <= n_max
  bool route_equivalence_ok = false;
  std::vector<unsigned long> sampled_n;
  Rational claim1_worst_ratio;      // max |a_{m-1}/a_m| over m >= 2
  Rational claim1_a0_a1_ratio;      // |a_0/a_1|
  bool claim1_ok = false;
  bool claim2_ok = false;
  bool dominance_ok = false;        // 0 < A_n < a_{n-1}, 7 <= n <= n_max
  bool leading_term_ok = false;     // a_{n-1} < B_n
  bool chain_ok = false;            // a_{n-1}/B_n = f(n), both sides of f(n) < 1
  Rational f7_value;
  bool f7_below_one = false;
  std::pair<unsigned long, unsigned long> f_monotone_range{0, 0};
  bool f_monotone_ok = false;
  bool g_above_one_ok = false;      // g(k) > 1 for 2 <= k <= n_max
  bool g_above_minimum_ok = false;  // g(k) > 10363/10000
  bool g_closed_form_ok = false;    // f(k)/f(k+1) = closed form
  GMinAnalysis g_min;
  std::vector<std::string> typos_noted;
  std::optional<Counterexample> first_counterexample;

  bool all_ok() const;
};

/// Runs every exact check up to n_max (>= 7). Failures are recorded in the
/// certificate, never thrown.
LemmaCertificate verify_fundamental_lemma(unsigned long n_max);

/// f(n) = (n/2)(2n-1)/(2n-3) / C(2n,n) * 3^{n-1}, n >= 2.
Rational f_val(unsigned long n);

/// g(k) = f(k)/f(k+1), cross-checked against 2k/(6k-9) ((2k-1)/(k+1))^2.
Rational g_val(unsigned long k);

/// The closed-form rational function g at an integer point.
Rational g_closed_form(unsigned long k);

GMinAnalysis g_min_analysis();

/// g(x) = 2x/(6x-9) ((2x-1)/(x+1))^2 and its derivative, for real x > 3/2.
Real g_real(const Real& x);
Real g_derivative(const Real& x);

/// Deterministic JSON rendering (stable field order).
std::string to_json(const LemmaCertificate& cert, int indent = 2);

}  // namespace ellperim
