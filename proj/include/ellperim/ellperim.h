#ifndef ELLPERIM_ELLPERIM_H
#define ELLPERIM_ELLPERIM_H

/*
 * C interface to the ellperim library: certified ellipse perimeters,
 * Ramanujan's approximation and its error enclosure, and the exact coefficient
 * verifier.
 *
 * Conventions:
 *  - Every fallible call returns an elp_status; on failure a message is
 *    available from elp_last_error() on the same thread.
 *  - Objects are opaque and owned by the caller; release each with its
 *    matching *_destroy function (NULL is accepted).
 *  - Strings returned from an object stay valid until it is destroyed.
 *  - Real-valued inputs are decimal strings so that they reach the
 *    extended-precision core unrounded.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ELLPERIM_BUILDING)
#    define ELLPERIM_API __declspec(dllexport)
#  else
#    define ELLPERIM_API __declspec(dllimport)
#  endif
#else
#  define ELLPERIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum elp_status {
  ELP_OK = 0,
  ELP_ERR_NULL_ARGUMENT = 1,
  ELP_ERR_INVALID_ARGUMENT = 2,
  ELP_ERR_DOMAIN = 3,
  ELP_ERR_TOLERANCE = 4,
  ELP_ERR_INTERNAL = 5
} elp_status;

typedef enum elp_coeff_kind { ELP_COEFF_A = 0, ELP_COEFF_B = 1, ELP_COEFF_DELTA = 2 } elp_coeff_kind;

typedef enum elp_shape_param { ELP_PARAM_NONE = 0, ELP_PARAM_ECCENTRICITY = 1, ELP_PARAM_LAMBDA = 2 } elp_shape_param;

typedef struct elp_certificate elp_certificate;
typedef struct elp_coeff_table elp_coeff_table;
typedef struct elp_error_report elp_error_report;
typedef struct elp_bounds_report elp_bounds_report;
typedef struct elp_ivory_check elp_ivory_check;

ELLPERIM_API const char* elp_version(void);
ELLPERIM_API const char* elp_status_string(elp_status status);
/* Message of the last failure on this thread, "" if none. */
ELLPERIM_API const char* elp_last_error(void);

/* Exact verification for 7 <= n_max. */
ELLPERIM_API elp_status elp_verify_lemma(uint32_t n_max, elp_certificate** out);
ELLPERIM_API int elp_certificate_passed(const elp_certificate* cert);
ELLPERIM_API const char* elp_certificate_json(const elp_certificate* cert);
ELLPERIM_API const char* elp_certificate_text(const elp_certificate* cert);
ELLPERIM_API void elp_certificate_destroy(elp_certificate* cert);

/* A_n, B_n, delta_n for n = 0..n_max as "p/q" strings. */
ELLPERIM_API elp_status elp_coeff_table_create(uint32_t n_max, elp_coeff_table** out);
ELLPERIM_API uint32_t elp_coeff_table_rows(const elp_coeff_table* table);
/* NULL when n is out of range. */
ELLPERIM_API const char* elp_coeff_table_entry(const elp_coeff_table* table, uint32_t n, elp_coeff_kind kind);
ELLPERIM_API const char* elp_coeff_table_csv(const elp_coeff_table* table);
ELLPERIM_API const char* elp_coeff_table_json(const elp_coeff_table* table);
ELLPERIM_API void elp_coeff_table_destroy(elp_coeff_table* table);

/* tol may be NULL for the automatic tolerance. */
ELLPERIM_API elp_status elp_error_report_create(const char* a, const char* b, const char* tol,
                                                elp_error_report** out);
ELLPERIM_API int elp_error_report_passed(const elp_error_report* report);
/* Perimeter enclosure and Ramanujan value rounded to double. */
ELLPERIM_API elp_status elp_error_report_perimeter(const elp_error_report* report, double* lo, double* hi,
                                                   double* p_ramanujan);
ELLPERIM_API elp_status elp_error_report_epsilon(const elp_error_report* report, double* lo, double* hi);
ELLPERIM_API const char* elp_error_report_json(const elp_error_report* report);
ELLPERIM_API const char* elp_error_report_text(const elp_error_report* report);
ELLPERIM_API void elp_error_report_destroy(elp_error_report* report);

/* value is ignored (may be NULL) for ELP_PARAM_NONE; tol may be NULL. */
ELLPERIM_API elp_status elp_bounds_report_create(elp_shape_param param, const char* value, const char* tol,
                                                 elp_bounds_report** out);
ELLPERIM_API int elp_bounds_report_passed(const elp_bounds_report* report);
ELLPERIM_API const char* elp_bounds_report_json(const elp_bounds_report* report);
ELLPERIM_API const char* elp_bounds_report_text(const elp_bounds_report* report);
ELLPERIM_API void elp_bounds_report_destroy(elp_bounds_report* report);

ELLPERIM_API elp_status elp_ivory_check_create(double x, double quadrature_tol, elp_ivory_check** out);
ELLPERIM_API int elp_ivory_check_passed(const elp_ivory_check* check);
ELLPERIM_API double elp_ivory_check_residual(const elp_ivory_check* check);
ELLPERIM_API const char* elp_ivory_check_json(const elp_ivory_check* check);
ELLPERIM_API const char* elp_ivory_check_text(const elp_ivory_check* check);
ELLPERIM_API void elp_ivory_check_destroy(elp_ivory_check* check);

/* Plain double-precision conveniences. */
ELLPERIM_API elp_status elp_perimeter_ramanujan(double a, double b, double* out);
ELLPERIM_API elp_status elp_ivory_integral(double x, double abs_tol, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ELLPERIM_ELLPERIM_H */
