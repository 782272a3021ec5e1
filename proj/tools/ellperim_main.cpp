// Command-line front end; talks to the library only through the C API.

#include "ellperim/ellperim.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int report_status(elp_status status) {
  std::cerr << "ellperim: " << elp_status_string(status) << ": " << elp_last_error() << '\n';
  switch (status) {
    case ELP_ERR_INVALID_ARGUMENT:
    case ELP_ERR_DOMAIN:
    case ELP_ERR_TOLERANCE:
    case ELP_ERR_NULL_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailed;
  }
}

const char* opt_cstr(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

int run_verify(uint32_t max_n, const std::optional<std::string>& json_path) {
  elp_certificate* cert = nullptr;
  if (const elp_status st = elp_verify_lemma(max_n, &cert); st != ELP_OK) return report_status(st);
  const bool ok = elp_certificate_passed(cert) != 0;
  if (json_path) {
    std::ofstream out(*json_path);
    if (!out) {
      std::cerr << "ellperim: cannot write " << *json_path << '\n';
      elp_certificate_destroy(cert);
      return kExitUsage;
    }
    out << elp_certificate_json(cert) << '\n';
    std::cout << elp_certificate_text(cert);
  } else {
    std::cout << elp_certificate_json(cert) << '\n';
  }
  if (!ok) std::cerr << "ellperim: verification failed\n";
  elp_certificate_destroy(cert);
  return ok ? kExitOk : kExitFailed;
}

int run_coeffs(uint32_t n, const std::string& format) {
  elp_coeff_table* table = nullptr;
  if (const elp_status st = elp_coeff_table_create(n, &table); st != ELP_OK) return report_status(st);
  if (format == "json")
    std::cout << elp_coeff_table_json(table) << '\n';
  else
    std::cout << elp_coeff_table_csv(table);
  elp_coeff_table_destroy(table);
  return kExitOk;
}

int run_perimeter(const std::string& a, const std::string& b, const std::optional<std::string>& tol,
                  bool json) {
  elp_error_report* report = nullptr;
  if (const elp_status st = elp_error_report_create(a.c_str(), b.c_str(), opt_cstr(tol), &report); st != ELP_OK)
    return report_status(st);
  std::cout << (json ? elp_error_report_json(report) : elp_error_report_text(report));
  if (json) std::cout << '\n';
  const bool ok = elp_error_report_passed(report) != 0;
  elp_error_report_destroy(report);
  return ok ? kExitOk : kExitFailed;
}

int run_bounds(const std::optional<std::string>& e, const std::optional<std::string>& lambda,
               const std::optional<std::string>& tol, bool json) {
  elp_shape_param param = ELP_PARAM_NONE;
  const char* value = nullptr;
  if (e) {
    param = ELP_PARAM_ECCENTRICITY;
    value = e->c_str();
  } else if (lambda) {
    param = ELP_PARAM_LAMBDA;
    value = lambda->c_str();
  }
  elp_bounds_report* report = nullptr;
  if (const elp_status st = elp_bounds_report_create(param, value, opt_cstr(tol), &report); st != ELP_OK)
    return report_status(st);
  std::cout << (json ? elp_bounds_report_json(report) : elp_bounds_report_text(report));
  if (json) std::cout << '\n';
  const bool ok = elp_bounds_report_passed(report) != 0;
  elp_bounds_report_destroy(report);
  return ok ? kExitOk : kExitFailed;
}

int run_ivory(double x, double tol, bool json) {
  elp_ivory_check* check = nullptr;
  if (const elp_status st = elp_ivory_check_create(x, tol, &check); st != ELP_OK) return report_status(st);
  std::cout << (json ? elp_ivory_check_json(check) : elp_ivory_check_text(check));
  if (json) std::cout << '\n';
  const bool ok = elp_ivory_check_passed(check) != 0;
  elp_ivory_check_destroy(check);
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified ellipse perimeters and Ramanujan's approximation error"};
  app.set_version_flag("--version", std::string(elp_version()));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-lemma", "Exactly verify the coefficient inequalities up to N");
  uint32_t max_n = 0;
  std::optional<std::string> json_path;
  verify->add_option("--max-n", max_n, "Largest coefficient index (>= 7)")->required();
  verify->add_option("--json", json_path, "Write the certificate to PATH (summary goes to stdout)");

  auto* coeffs = app.add_subcommand("coeffs", "Table of A_n, B_n, delta_n as exact rationals");
  uint32_t coeff_n = 0;
  std::string format = "csv";
  coeffs->add_option("--n", coeff_n, "Largest index")->required();
  coeffs->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* perim = app.add_subcommand("perimeter", "Perimeter enclosure, p_R and the error report");
  std::string a, b;
  std::optional<std::string> tol;
  bool json = false;
  perim->add_option("--a", a, "Semi-axis a")->required();
  perim->add_option("--b", b, "Semi-axis b")->required();
  perim->add_option("--tol", tol, "Width of the perimeter enclosure (default: automatic)");
  perim->add_flag("--json", json, "Emit JSON");

  auto* bounds = app.add_subcommand("bounds", "theta / delta(e) limits and containment at a shape");
  std::optional<std::string> ecc, lambda;
  std::optional<std::string> bounds_tol;
  bool bounds_json = false;
  auto* e_opt = bounds->add_option("--e", ecc, "Eccentricity in (0, 1]");
  auto* l_opt = bounds->add_option("--lambda", lambda, "(a-b)/(a+b) in (0, 1]");
  e_opt->excludes(l_opt);
  bounds->add_option("--tol", bounds_tol, "Width of the B(x) enclosure (default: automatic)");
  bounds->add_flag("--json", bounds_json, "Emit JSON");

  auto* ivory = app.add_subcommand("ivory-check", "Quadrature of Ivory's integral against the series");
  double x = 0.0;
  double quad_tol = 1e-12;
  bool ivory_json = false;
  ivory->add_option("--x", x, "Argument in [0, 1]")->required();
  ivory->add_option("--tol", quad_tol, "Quadrature absolute tolerance");
  ivory->add_flag("--json", ivory_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) return run_verify(max_n, json_path);
  if (*coeffs) return run_coeffs(coeff_n, format);
  if (*perim) return run_perimeter(a, b, tol, json);
  if (*bounds) return run_bounds(ecc, lambda, bounds_tol, bounds_json);
  if (*ivory) return run_ivory(x, quad_tol, ivory_json);
  return kExitUsage;
}
