#include "ellperim/ellperim.h"

#include "ellperim/bounds.hpp"
#include "ellperim/error.hpp"
#include "ellperim/lemma.hpp"
#include "ellperim/perimeter.hpp"
#include "ellperim/report.hpp"
#include "ellperim/series.hpp"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct elp_certificate {
  ellperim::LemmaCertificate cert;
  std::string json;
  std::string text;
};

struct elp_coeff_table {
  std::vector<ellperim::CoefficientRow> rows;
  std::vector<std::string> strings;  // 3 per row: A, B, delta
  std::string csv;
  std::string json;
};

struct elp_error_report {
  ellperim::ErrorReport report;
  std::string json;
  std::string text;
};

struct elp_bounds_report {
  ellperim::BoundsQuery query;
  std::string json;
  std::string text;
};

struct elp_ivory_check {
  ellperim::IvoryCheck check;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

elp_status status_for(ellperim::ErrorCode code) {
  switch (code) {
    case ellperim::ErrorCode::InvalidArgument:
      return ELP_ERR_INVALID_ARGUMENT;
    case ellperim::ErrorCode::Domain:
      return ELP_ERR_DOMAIN;
    case ellperim::ErrorCode::Tolerance:
      return ELP_ERR_TOLERANCE;
  }
  return ELP_ERR_INTERNAL;
}

template <class Fn>
elp_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return ELP_OK;
  } catch (const ellperim::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ELP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ELP_ERR_INTERNAL;
  }
}

elp_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return ELP_ERR_NULL_ARGUMENT;
}

std::optional<ellperim::Real> optional_real(const char* text) {
  if (text == nullptr) return std::nullopt;
  return ellperim::parse_real(text);
}

}  // namespace

extern "C" {

const char* elp_version(void) { return "0.1.0"; }

const char* elp_status_string(elp_status status) {
  switch (status) {
    case ELP_OK:
      return "ok";
    case ELP_ERR_NULL_ARGUMENT:
      return "null argument";
    case ELP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ELP_ERR_DOMAIN:
      return "argument outside domain";
    case ELP_ERR_TOLERANCE:
      return "tolerance not reachable";
    case ELP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* elp_last_error(void) { return last_error.c_str(); }

elp_status elp_verify_lemma(uint32_t n_max, elp_certificate** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<elp_certificate>(elp_certificate{ellperim::verify_fundamental_lemma(n_max), {}, {}});
    c->json = ellperim::to_json(c->cert);
    c->text = ellperim::to_text(c->cert);
    *out = c.release();
  });
}

int elp_certificate_passed(const elp_certificate* cert) { return cert && cert->cert.all_ok() ? 1 : 0; }

const char* elp_certificate_json(const elp_certificate* cert) {
  return cert ? cert->json.c_str() : "";
}

const char* elp_certificate_text(const elp_certificate* cert) {
  return cert ? cert->text.c_str() : "";
}

void elp_certificate_destroy(elp_certificate* cert) { delete cert; }

elp_status elp_coeff_table_create(uint32_t n_max, elp_coeff_table** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto t = std::make_unique<elp_coeff_table>();
    t->rows = ellperim::coefficient_table(n_max);
    t->strings.reserve(3 * t->rows.size());
    for (const auto& r : t->rows) {
      t->strings.push_back(r.a.str());
      t->strings.push_back(r.b.str());
      t->strings.push_back(r.delta.str());
    }
    t->csv = ellperim::coefficients_csv(t->rows);
    t->json = ellperim::coefficients_json(t->rows);
    *out = t.release();
  });
}

uint32_t elp_coeff_table_rows(const elp_coeff_table* table) {
  return table ? static_cast<uint32_t>(table->rows.size()) : 0;
}

const char* elp_coeff_table_entry(const elp_coeff_table* table, uint32_t n, elp_coeff_kind kind) {
  if (table == nullptr || n >= table->rows.size()) return nullptr;
  const int k = static_cast<int>(kind);
  if (k < 0 || k > 2) return nullptr;
  return table->strings[3 * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)].c_str();
}

const char* elp_coeff_table_csv(const elp_coeff_table* table) { return table ? table->csv.c_str() : ""; }

const char* elp_coeff_table_json(const elp_coeff_table* table) { return table ? table->json.c_str() : ""; }

void elp_coeff_table_destroy(elp_coeff_table* table) { delete table; }

elp_status elp_error_report_create(const char* a, const char* b, const char* tol, elp_error_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (a == nullptr) return null_argument("a");
  if (b == nullptr) return null_argument("b");
  return guarded([&] {
    const auto ellipse = ellperim::Ellipse::from_axes(ellperim::parse_real(a), ellperim::parse_real(b));
    const auto t = optional_real(tol);
    if (t && !(*t > 0)) throw ellperim::Error(ellperim::ErrorCode::InvalidArgument, "tolerance must be positive");
    auto r = std::make_unique<elp_error_report>(elp_error_report{
        ellperim::error_report(ellipse, t ? *t : ellperim::auto_tolerance(ellipse)), {}, {}});
    r->json = ellperim::to_json(r->report);
    r->text = ellperim::to_text(r->report);
    *out = r.release();
  });
}

int elp_error_report_passed(const elp_error_report* report) { return report && report->report.passed() ? 1 : 0; }

elp_status elp_error_report_perimeter(const elp_error_report* report, double* lo, double* hi,
                                      double* p_ramanujan) {
  if (report == nullptr) return null_argument("report");
  const auto& r = report->report;
  if (lo) *lo = static_cast<double>(r.p.lo);
  if (hi) *hi = static_cast<double>(r.p.hi);
  if (p_ramanujan) *p_ramanujan = static_cast<double>(r.p_ramanujan);
  return ELP_OK;
}

elp_status elp_error_report_epsilon(const elp_error_report* report, double* lo, double* hi) {
  if (report == nullptr) return null_argument("report");
  if (lo) *lo = static_cast<double>(report->report.epsilon.lo);
  if (hi) *hi = static_cast<double>(report->report.epsilon.hi);
  return ELP_OK;
}

const char* elp_error_report_json(const elp_error_report* report) { return report ? report->json.c_str() : ""; }

const char* elp_error_report_text(const elp_error_report* report) { return report ? report->text.c_str() : ""; }

void elp_error_report_destroy(elp_error_report* report) { delete report; }

elp_status elp_bounds_report_create(elp_shape_param param, const char* value, const char* tol,
                                    elp_bounds_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (param != ELP_PARAM_NONE && value == nullptr) return null_argument("value");
  return guarded([&] {
    ellperim::BoundsQuery q;
    const auto t = optional_real(tol);
    switch (param) {
      case ELP_PARAM_NONE:
        q = ellperim::bounds_query();
        break;
      case ELP_PARAM_ECCENTRICITY:
        q = ellperim::bounds_query_eccentricity(ellperim::parse_real(value), t);
        break;
      case ELP_PARAM_LAMBDA:
        q = ellperim::bounds_query_lambda(ellperim::parse_real(value), t);
        break;
      default:
        throw ellperim::Error(ellperim::ErrorCode::InvalidArgument, "unknown shape parameter");
    }
    auto r = std::make_unique<elp_bounds_report>(elp_bounds_report{std::move(q), {}, {}});
    r->json = ellperim::to_json(r->query);
    r->text = ellperim::to_text(r->query);
    *out = r.release();
  });
}

int elp_bounds_report_passed(const elp_bounds_report* report) { return report && report->query.passed() ? 1 : 0; }

const char* elp_bounds_report_json(const elp_bounds_report* report) { return report ? report->json.c_str() : ""; }

const char* elp_bounds_report_text(const elp_bounds_report* report) { return report ? report->text.c_str() : ""; }

void elp_bounds_report_destroy(elp_bounds_report* report) { delete report; }

elp_status elp_ivory_check_create(double x, double quadrature_tol, elp_ivory_check** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto c = std::make_unique<elp_ivory_check>(elp_ivory_check{ellperim::ivory_check(x, quadrature_tol), {}, {}});
    c->json = ellperim::to_json(c->check);
    c->text = ellperim::to_text(c->check);
    *out = c.release();
  });
}

int elp_ivory_check_passed(const elp_ivory_check* check) { return check && check->check.passed ? 1 : 0; }

double elp_ivory_check_residual(const elp_ivory_check* check) { return check ? check->check.residual : -1.0; }

const char* elp_ivory_check_json(const elp_ivory_check* check) { return check ? check->json.c_str() : ""; }

const char* elp_ivory_check_text(const elp_ivory_check* check) { return check ? check->text.c_str() : ""; }

void elp_ivory_check_destroy(elp_ivory_check* check) { delete check; }

elp_status elp_perimeter_ramanujan(double a, double b, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = static_cast<double>(ellperim::perimeter_ramanujan(ellperim::Ellipse::from_axes(a, b)));
  });
}

elp_status elp_ivory_integral(double x, double abs_tol, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = ellperim::ivory_integral(x, abs_tol); });
}

}  // extern "C"
