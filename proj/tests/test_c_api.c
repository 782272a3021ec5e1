/* Exercises the shared library through its C header only. */
#include "ellperim/ellperim.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

int main(void) {
  elp_certificate* cert = NULL;
  EXPECT(elp_verify_lemma(30, &cert) == ELP_OK);
  EXPECT(elp_certificate_passed(cert) == 1);
  EXPECT(strstr(elp_certificate_json(cert), "\"f7_value\": \"1701/1936\"") != NULL);
  elp_certificate_destroy(cert);

  cert = NULL;
  EXPECT(elp_verify_lemma(6, &cert) == ELP_ERR_INVALID_ARGUMENT);
  EXPECT(cert == NULL);
  EXPECT(strlen(elp_last_error()) > 0);
  EXPECT(elp_verify_lemma(10, NULL) == ELP_ERR_NULL_ARGUMENT);

  elp_coeff_table* table = NULL;
  EXPECT(elp_coeff_table_create(6, &table) == ELP_OK);
  EXPECT(elp_coeff_table_rows(table) == 7);
  EXPECT(strcmp(elp_coeff_table_entry(table, 6, ELP_COEFF_A), "803/2097152") == 0);
  EXPECT(strcmp(elp_coeff_table_entry(table, 5, ELP_COEFF_DELTA), "3/131072") == 0);
  EXPECT(elp_coeff_table_entry(table, 7, ELP_COEFF_A) == NULL);
  EXPECT(strncmp(elp_coeff_table_csv(table), "n,A,B,delta", 11) == 0);
  elp_coeff_table_destroy(table);

  elp_error_report* report = NULL;
  EXPECT(elp_error_report_create("2", "1", NULL, &report) == ELP_OK);
  EXPECT(elp_error_report_passed(report) == 1);
  double lo = 0, hi = 0, pr = 0;
  EXPECT(elp_error_report_perimeter(report, &lo, &hi, &pr) == ELP_OK);
  EXPECT(fabs(lo - 9.688448220547676) < 1e-12);
  EXPECT(pr < hi);
  double elo = 0, ehi = 0;
  EXPECT(elp_error_report_epsilon(report, &elo, &ehi) == ELP_OK);
  EXPECT(elo > 0 && ehi >= elo);
  EXPECT(strstr(elp_error_report_json(report), "\"p_enclosure\"") != NULL);
  elp_error_report_destroy(report);

  report = NULL;
  EXPECT(elp_error_report_create("abc", "1", NULL, &report) == ELP_ERR_INVALID_ARGUMENT);
  EXPECT(report == NULL);
  EXPECT(elp_error_report_create("1", "-1", NULL, &report) == ELP_ERR_INVALID_ARGUMENT);
  EXPECT(elp_error_report_create("1", "0", "1e-80", &report) == ELP_ERR_TOLERANCE);
  EXPECT(elp_error_report_create(NULL, "0", NULL, &report) == ELP_ERR_NULL_ARGUMENT);

  elp_bounds_report* bounds = NULL;
  EXPECT(elp_bounds_report_create(ELP_PARAM_NONE, NULL, NULL, &bounds) == ELP_OK);
  EXPECT(elp_bounds_report_passed(bounds) == 1);
  elp_bounds_report_destroy(bounds);
  bounds = NULL;
  EXPECT(elp_bounds_report_create(ELP_PARAM_LAMBDA, "0.5", NULL, &bounds) == ELP_OK);
  EXPECT(elp_bounds_report_passed(bounds) == 1);
  elp_bounds_report_destroy(bounds);
  bounds = NULL;
  EXPECT(elp_bounds_report_create(ELP_PARAM_ECCENTRICITY, "2", NULL, &bounds) == ELP_ERR_DOMAIN);

  elp_ivory_check* check = NULL;
  EXPECT(elp_ivory_check_create(0.5, 1e-12, &check) == ELP_OK);
  EXPECT(elp_ivory_check_passed(check) == 1);
  EXPECT(elp_ivory_check_residual(check) < 1e-11);
  elp_ivory_check_destroy(check);

  double v = 0;
  EXPECT(elp_perimeter_ramanujan(1.0, 1.0, &v) == ELP_OK);
  EXPECT(fabs(v - 2.0 * 3.141592653589793) < 1e-14);
  EXPECT(elp_ivory_integral(1.0, 1e-12, &v) == ELP_OK);
  EXPECT(fabs(v - 4.0 / 3.141592653589793) < 1e-12);
  EXPECT(elp_ivory_integral(2.0, 1e-12, &v) == ELP_ERR_DOMAIN);

  EXPECT(strcmp(elp_status_string(ELP_ERR_TOLERANCE), "tolerance not reachable") == 0);

  elp_certificate_destroy(NULL);
  elp_error_report_destroy(NULL);

  if (failures == 0) printf("c api: all expectations met\n");
  return failures == 0 ? 0 : 1;
}
