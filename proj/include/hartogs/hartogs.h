/*
 * C interface to the Hartogs-domain Kahler geometry library.
 *
 * All functions return a hartogs_status; on failure the thread-local message
 * from hartogs_last_error() describes the cause. Handles are opaque and
 * owned by the caller, who releases them with the matching *_destroy.
 *
 * Points of C^n are passed as 2n doubles, interleaved (re z_0, im z_0,
 * re z_1, im z_1, ...). n x n complex matrices are 2 n^2 doubles, row-major,
 * each entry interleaved the same way.
 */
#ifndef HARTOGS_HARTOGS_H
#define HARTOGS_HARTOGS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HARTOGS_BUILDING_LIBRARY)
#    define HARTOGS_API __declspec(dllexport)
#  else
#    define HARTOGS_API __declspec(dllimport)
#  endif
#else
#  define HARTOGS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hartogs_status {
  HARTOGS_OK = 0,
  HARTOGS_E_DOMAIN = 1,
  HARTOGS_E_SINGULAR = 2,
  HARTOGS_E_NUMERIC = 3,
  HARTOGS_E_USAGE = 4,
  HARTOGS_E_PARSE = 5,
  HARTOGS_E_SAMPLING = 6,
  HARTOGS_E_IO = 7,
  HARTOGS_E_INVARIANT = 8,
  HARTOGS_E_NULL = 9,
  HARTOGS_E_INTERNAL = 10
} hartogs_status;

typedef struct hartogs_profile hartogs_profile;
typedef struct hartogs_field hartogs_field;
typedef struct hartogs_report hartogs_report;

typedef struct hartogs_scan_options {
  size_t n;
  size_t samples;
  uint64_t seed;
  double min_margin;
} hartogs_scan_options;

HARTOGS_API const char* hartogs_version(void);
HARTOGS_API const char* hartogs_status_name(hartogs_status status);
/* Message for the last failing call on this thread; "" if none. */
HARTOGS_API const char* hartogs_last_error(void);
/* n = 2, samples = 50, seed = 1, min_margin = 0.05 */
HARTOGS_API hartogs_scan_options hartogs_default_scan_options(void);

/* ---- profiles: `affine:c1,c2`, `powercap:p`, `expdecay:a`, `rational` ---- */
HARTOGS_API hartogs_status hartogs_profile_parse(const char* text, hartogs_profile** out);
HARTOGS_API void hartogs_profile_destroy(hartogs_profile* profile);
/* Canonical text form; owned by the handle. */
HARTOGS_API const char* hartogs_profile_id(const hartogs_profile* profile);
/* x0, possibly +inf. */
HARTOGS_API hartogs_status hartogs_profile_x0(const hartogs_profile* profile, double* out);
/* F^{(order)}(x), order 0..4. */
HARTOGS_API hartogs_status hartogs_profile_eval(const hartogs_profile* profile, double x,
                                                int order, double* out);
/* -(x F'/F)'(x) */
HARTOGS_API hartogs_status hartogs_profile_margin(const hartogs_profile* profile, double x,
                                                  double* out);
HARTOGS_API hartogs_status hartogs_check_pseudoconvex(const hartogs_profile* profile,
                                                      size_t grid_size, double tol,
                                                      int* passed, double* worst_margin,
                                                      double* worst_x);

/* ---- pointwise geometry ---- */
/* h: 2 n^2 doubles (may be NULL); det may be NULL. */
HARTOGS_API hartogs_status hartogs_metric(const hartogs_profile* profile, size_t n,
                                          const double* z, double* h, double* det);
/* rho: n doubles (may be NULL). */
HARTOGS_API hartogs_status hartogs_curvature(const hartogs_profile* profile, size_t n,
                                             const double* z, double* scal, double* rho);
HARTOGS_API hartogs_status hartogs_extremal_residual(const hartogs_profile* profile, size_t n,
                                                     const double* z, double* out);
HARTOGS_API hartogs_status hartogs_einstein_residual(const hartogs_profile* profile, size_t n,
                                                     const double* z, double* out);

/* Polynomial vector field: components separated by '|', monomials by ';',
 * each monomial `re,im:e0,...,e{n-1}`. */
HARTOGS_API hartogs_status hartogs_field_parse(const char* text, size_t n, int max_degree,
                                               hartogs_field** out);
HARTOGS_API void hartogs_field_destroy(hartogs_field* field);
/* field may be NULL for X = 0. */
HARTOGS_API hartogs_status hartogs_soliton_residual(const hartogs_profile* profile, size_t n,
                                                    const double* z, double lambda,
                                                    const hartogs_field* field, double* out);

HARTOGS_API hartogs_status hartogs_hyperbolic_isometry(double c1, double c2, size_t n,
                                                       const double* z, double* w);
HARTOGS_API hartogs_status hartogs_pullback_check(double c1, double c2, size_t n,
                                                  const double* z, double* out);

/* ---- batch scans, returning tabular reports ---- */
HARTOGS_API hartogs_status hartogs_curvature_scan(const hartogs_profile* profile,
                                                  const hartogs_scan_options* options,
                                                  hartogs_report** out);
HARTOGS_API hartogs_status hartogs_levi_scan(const hartogs_profile* profile,
                                             const hartogs_scan_options* options,
                                             hartogs_report** out);
HARTOGS_API hartogs_status hartogs_extremal_scan(const hartogs_profile* profile,
                                                 const hartogs_scan_options* options,
                                                 hartogs_report** out);
HARTOGS_API hartogs_status hartogs_soliton_scan(const hartogs_profile* profile,
                                                const hartogs_scan_options* options,
                                                double lambda, const hartogs_field* field,
                                                hartogs_report** out);
/* Least-squares (lambda, X) over polynomial X of total degree <= max_degree. */
HARTOGS_API hartogs_status hartogs_soliton_sweep(const hartogs_profile* profile,
                                                 const hartogs_scan_options* options,
                                                 int max_degree, double* lambda,
                                                 double* residual_floor);
/* Check table (check, status, value, threshold, detail); all_passed may be NULL. */
HARTOGS_API hartogs_status hartogs_verify_theorems(const hartogs_profile* profile,
                                                   const hartogs_scan_options* options,
                                                   hartogs_report** out, int* all_passed);

HARTOGS_API size_t hartogs_report_rows(const hartogs_report* report);
HARTOGS_API size_t hartogs_report_cols(const hartogs_report* report);
HARTOGS_API const char* hartogs_report_column(const hartogs_report* report, size_t col);
/* Column index by name; HARTOGS_E_USAGE if absent. */
HARTOGS_API hartogs_status hartogs_report_find(const hartogs_report* report, const char* name,
                                               size_t* col);
HARTOGS_API hartogs_status hartogs_report_number(const hartogs_report* report, size_t row,
                                                 size_t col, double* out);
/* Formatted cell text; owned by the report, valid until the next call on it. */
HARTOGS_API const char* hartogs_report_text(const hartogs_report* report, size_t row,
                                            size_t col);
/* path "-" writes to stdout. */
HARTOGS_API hartogs_status hartogs_report_write_csv(const hartogs_report* report,
                                                    const char* path);
HARTOGS_API void hartogs_report_destroy(hartogs_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HARTOGS_HARTOGS_H */
