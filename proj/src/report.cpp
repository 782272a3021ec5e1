#include "ellperim/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace ellperim {

using nlohmann::ordered_json;

namespace {

ordered_json enclosure_json(const Enclosure& e) {
  ordered_json j;
  j["lo"] = to_string(e.lo);
  j["hi"] = to_string(e.hi);
  j["mid"] = to_string(e.mid());
  j["width"] = to_string(e.width(), 6);
  j["regime"] = to_string(e.regime);
  j["terms"] = e.terms;
  return j;
}

std::string enclosure_text(const Enclosure& e) {
  return "[" + to_string(e.lo) + ", " + to_string(e.hi) + "]  (width " + to_string(e.width(), 4) + ")";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string coefficients_csv(const std::vector<CoefficientRow>& rows) {
  std::ostringstream out;
  out << "n,A,B,delta\n";
  for (const CoefficientRow& r : rows)
    out << r.n << ',' << r.a.str() << ',' << r.b.str() << ',' << r.delta.str() << '\n';
  return out.str();
}

std::string coefficients_json(const std::vector<CoefficientRow>& rows, int indent) {
  ordered_json j;
  j["n_max"] = rows.empty() ? 0 : rows.back().n;
  ordered_json arr = ordered_json::array();
  for (const CoefficientRow& r : rows) {
    ordered_json row;
    row["n"] = r.n;
    row["A"] = r.a.str();
    row["B"] = r.b.str();
    row["delta"] = r.delta.str();
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j.dump(indent);
}

std::string to_json(const ErrorReport& r, int indent) {
  ordered_json j;
  j["a"] = to_string(r.a);
  j["b"] = to_string(r.b);
  j["swapped"] = r.swapped;
  j["lambda"] = to_string(r.lambda);
  j["eccentricity"] = to_string(r.eccentricity);
  j["tolerance"] = to_string(r.tolerance, 6);
  j["p_enclosure"] = enclosure_json(r.p);
  j["p_R"] = to_string(r.p_ramanujan);
  j["epsilon_enclosure"] = enclosure_json(r.epsilon);
  j["epsilon_direct"] = enclosure_json(r.epsilon_direct);
  j["lower_bound"] = to_string(r.lower_bound);
  j["upper_bound"] = to_string(r.upper_bound);
  j["theta"] = enclosure_json(r.theta);
  j["delta_e"] = enclosure_json(r.delta_e);
  j["epsilon_lambda_form"] = enclosure_json(r.epsilon_lambda_form);
  j["epsilon_e_form"] = enclosure_json(r.epsilon_e_form);
  j["ramanujan_estimate"] = to_string(r.ramanujan_estimate);
  j["forms_consistent"] = r.forms_consistent;
  ordered_json checks;
  checks["underestimate"] = to_string(r.underestimate);
  checks["lower_bound"] = to_string(r.lower_check);
  checks["upper_bound"] = to_string(r.upper_check);
  checks["ramanujan_estimate"] = to_string(r.estimate_check);
  j["checks"] = checks;
  j["passed"] = r.passed();
  j["bound_form_note"] = r.bound_form_note;
  return j.dump(indent);
}

std::string to_text(const ErrorReport& r) {
  std::ostringstream out;
  out << "a                  = " << to_string(r.a) << (r.swapped ? "  (axes swapped)" : "") << '\n'
      << "b                  = " << to_string(r.b) << '\n'
      << "lambda             = " << to_string(r.lambda) << '\n'
      << "e                  = " << to_string(r.eccentricity) << '\n'
      << "p                  in " << enclosure_text(r.p) << "  [" << to_string(r.p.regime) << ", "
      << r.p.terms << " terms]\n"
      << "p_R                = " << to_string(r.p_ramanujan) << '\n'
      << "eps = p - p_R      in " << enclosure_text(r.epsilon) << '\n'
      << "lower bound        = " << to_string(r.lower_bound) << "  " << to_string(r.lower_check) << '\n'
      << "upper bound        = " << to_string(r.upper_bound) << "  " << to_string(r.upper_check) << '\n'
      << "theta(lambda)      in " << enclosure_text(r.theta) << '\n'
      << "delta(e)           in " << enclosure_text(r.delta_e) << '\n'
      << "3 a e^20 / 2^36    = " << to_string(r.ramanujan_estimate) << "  " << to_string(r.estimate_check)
      << '\n'
      << "p_R < p            " << to_string(r.underestimate) << '\n'
      << "eps forms agree    " << (r.forms_consistent ? "yes" : "NO") << '\n';
  return out.str();
}

std::string to_json(const BoundsQuery& q, int indent) {
  ordered_json j;
  ordered_json theta;
  theta["lower"] = q.theta_limits.lower.str();
  theta["lower_decimal"] = to_string(to_real(q.theta_limits.lower));
  theta["upper"] = to_string(q.theta_limits.upper);
  theta["scaled_upper"] = to_string(q.theta_limits.printed_upper);
  theta["identity_residual"] = to_string(q.theta_limits.identity_residual, 6);
  theta["identity_ok"] = q.theta_limits.identity_ok;
  j["theta_bounds"] = theta;
  ordered_json delta;
  delta["lower"] = to_string(q.delta_limits.lower);
  delta["upper"] = to_string(q.delta_limits.upper);
  delta["ratio_residual"] = to_string(q.delta_limits.ratio_residual, 6);
  delta["normalization_ok"] = q.delta_limits.normalization_ok;
  j["delta_e_bounds"] = delta;
  if (q.has_point) {
    ordered_json pt;
    pt["lambda"] = to_string(q.lambda);
    pt["eccentricity"] = to_string(q.eccentricity);
    pt["theta"] = enclosure_json(q.theta);
    pt["delta_e"] = enclosure_json(q.delta_e);
    pt["theta_lower"] = to_string(q.theta_lower);
    pt["theta_upper"] = to_string(q.theta_upper);
    pt["delta_lower"] = to_string(q.delta_lower);
    pt["delta_upper"] = to_string(q.delta_upper);
    j["point"] = pt;
  } else {
    j["point"] = nullptr;
  }
  j["passed"] = q.passed();
  return j.dump(indent);
}

std::string to_text(const BoundsQuery& q) {
  std::ostringstream out;
  out << "theta lower        = " << q.theta_limits.lower.str() << " = "
      << to_string(to_real(q.theta_limits.lower)) << '\n'
      << "theta upper        = 4/pi - 14/11 = " << to_string(q.theta_limits.upper) << '\n'
      << "(14/11)(22/7 - pi) = " << to_string(q.theta_limits.printed_upper)
      << "  = pi * theta upper (residual " << to_string(q.theta_limits.identity_residual, 3) << ")\n"
      << "delta(e) lower     = 3 pi / 2^36 = " << to_string(q.delta_limits.lower) << '\n'
      << "delta(e) upper     = (7/11)(22/7 - pi) / 2^18 = " << to_string(q.delta_limits.upper) << '\n'
      << "normalisation      " << (q.delta_limits.normalization_ok ? "ok" : "MISMATCH") << '\n';
  if (q.has_point) {
    out << "lambda             = " << to_string(q.lambda) << '\n'
        << "e                  = " << to_string(q.eccentricity) << '\n'
        << "theta(lambda)      in " << enclosure_text(q.theta) << "  lower " << to_string(q.theta_lower)
        << ", upper " << to_string(q.theta_upper) << '\n'
        << "delta(e)           in " << enclosure_text(q.delta_e) << "  lower " << to_string(q.delta_lower)
        << ", upper " << to_string(q.delta_upper) << '\n';
  }
  return out.str();
}

std::string to_json(const IvoryCheck& c, int indent) {
  ordered_json j;
  j["x"] = fmt_double(c.x);
  j["quadrature"] = fmt_double(c.quadrature);
  j["quadrature_tolerance"] = fmt_double(c.quadrature_tolerance);
  j["series"] = enclosure_json(c.series);
  j["residual"] = fmt_double(c.residual);
  j["allowed"] = fmt_double(c.allowed);
  j["passed"] = c.passed;
  return j.dump(indent);
}

std::string to_text(const IvoryCheck& c) {
  std::ostringstream out;
  out << "x                  = " << fmt_double(c.x) << '\n'
      << "quadrature         = " << fmt_double(c.quadrature) << '\n'
      << "series B(x)        in " << enclosure_text(c.series) << "  [" << to_string(c.series.regime) << ", "
      << c.series.terms << " terms]\n"
      << "residual           = " << fmt_double(c.residual) << "  (allowed " << fmt_double(c.allowed) << ")\n"
      << (c.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_text(const LemmaCertificate& c) {
  auto yn = [](bool b) { return b ? "ok" : "FAILED"; };
  std::ostringstream out;
  out << "A_n = B_n, n <= 4              " << yn(c.equalities_ok) << '\n'
      << "A_n < B_n, 5 <= n <= " << c.n_max << "       " << yn(c.inequalities_ok) << '\n'
      << "explicit = composition         " << yn(c.route_equivalence_ok) << " (" << c.sampled_n.size()
      << " sampled n)\n"
      << "term ratios (worst " << c.claim1_worst_ratio.str() << ", |a0/a1| = " << c.claim1_a0_a1_ratio.str()
      << ")  " << yn(c.claim1_ok) << '\n'
      << "sign alternation               " << yn(c.claim2_ok) << '\n'
      << "0 < A_n < a_{n-1}              " << yn(c.dominance_ok) << '\n'
      << "a_{n-1} < B_n                  " << yn(c.leading_term_ok) << '\n'
      << "a_{n-1}/B_n = f(n)             " << yn(c.chain_ok) << '\n'
      << "f(7) = " << c.f7_value.str() << " < 1       " << yn(c.f7_below_one) << '\n'
      << "f decreasing on [" << c.f_monotone_range.first << ", " << c.f_monotone_range.second << "]      "
      << yn(c.f_monotone_ok) << '\n'
      << "g(k) > 1, g(k) > 1.0363        " << yn(c.g_above_one_ok && c.g_above_minimum_ok) << '\n'
      << "g(k) = f(k)/f(k+1)             " << yn(c.g_closed_form_ok) << '\n'
      << "g minimum at " << to_string(c.g_min.location) << " = " << to_string(c.g_min.value_closed_form)
      << "  " << yn(c.g_min.forms_agree && c.g_min.derivative_signs_ok && c.g_min.finite_difference_ok)
      << '\n';
  if (c.first_counterexample)
    out << "first counterexample: " << c.first_counterexample->check << " at n = "
        << c.first_counterexample->n << '\n';
  out << (c.all_ok() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
  return out.str();
}

}  // namespace ellperim
