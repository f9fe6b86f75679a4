/*
 * polycert C API: exact positivity-certificate searches on sparse rational
 * polynomials behind opaque handles.
 *
 * Conventions:
 *   - every function returns a pc_status; out-parameters are written only
 *     on PC_OK (and, for the pc_run_* commands, also on PC_NEGATIVE, which
 *     is the scriptable "certified negative / budget exhausted" outcome);
 *   - strings returned through char** are heap-allocated; release them with
 *     pc_string_free;
 *   - polynomials use the text grammar "x1^2 - 3/2*x1*x2 + x2^2";
 *   - command results are deterministic JSON certificate documents.
 */

#ifndef POLYCERT_H
#define POLYCERT_H

#include <stddef.h>

#ifdef _WIN32
#define PC_API __declspec(dllexport)
#else
#define PC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_NEGATIVE = 2,          /* explicit negative result, with document */
  PC_ERR_ARGUMENT = -1,     /* null or ill-formed argument */
  PC_ERR_PARSE = -2,        /* text grammar or JSON violation */
  PC_ERR_DIMENSION = -3,    /* variable-count mismatch */
  PC_ERR_PRECONDITION = -4, /* operation precondition violated */
  PC_ERR_INTERNAL = -5      /* broken invariant inside the library */
} pc_status;

PC_API const char* pc_version(void);
PC_API void pc_string_free(char* s);

/* ---- polynomial handles ---- */

typedef struct pc_poly pc_poly;

/* nvars <= 0 infers the variable count from the largest index mentioned */
PC_API pc_status pc_poly_parse(const char* text, int nvars, pc_poly** out,
                               char** errmsg);
PC_API pc_status pc_poly_print(const pc_poly* p, char** out);
PC_API pc_status pc_poly_nvars(const pc_poly* p, int* out);
/* degree of the zero polynomial reports -1 */
PC_API pc_status pc_poly_degree(const pc_poly* p, long* out);
PC_API pc_status pc_poly_add(const pc_poly* a, const pc_poly* b, pc_poly** out);
PC_API pc_status pc_poly_sub(const pc_poly* a, const pc_poly* b, pc_poly** out);
PC_API pc_status pc_poly_mul(const pc_poly* a, const pc_poly* b, pc_poly** out);
PC_API pc_status pc_poly_pow(const pc_poly* p, unsigned long k, pc_poly** out);
/* coords: ncoords rational strings; the exact value comes back as a string */
PC_API pc_status pc_poly_eval(const pc_poly* p, const char* const* coords,
                              size_t ncoords, char** value_out);
/* result: 1 when every coefficient is >= 0, else 0 with a witness monomial
 * (exponent tuple as a comma-separated string) */
PC_API pc_status pc_poly_is_nonneg(const pc_poly* p, int* result,
                                   char** witness_out);
PC_API void pc_poly_free(pc_poly* p);

/* ---- command runners: JSON certificate document on stdout-style out ----
 *
 * Return PC_OK for a certified positive outcome, PC_NEGATIVE for a certified
 * or explicit negative outcome (document still written), or an error code
 * (errmsg written). Exit-code mapping for shells: PC_OK -> 0,
 * PC_NEGATIVE -> 2, errors -> 1.
 */

PC_API pc_status pc_run_polya(const char* f_text, long max_k, char** doc,
                              char** errmsg);
/* identity_text: one "g ; h" line per pair; ignored when positive != 0 */
PC_API pc_status pc_run_certify(const char* f_text, const char* identity_text,
                                int positive, long max_shift, long max_k,
                                char** doc, char** errmsg);
PC_API pc_status pc_run_powers(const char* f_text, long max_power, char** doc,
                               char** errmsg);
/* generators_text: one polynomial per line */
PC_API pc_status pc_run_member(const char* target_text,
                               const char* generators_text, long degree,
                               char** doc, char** errmsg);
PC_API pc_status pc_run_newton(const char* f_text, char** doc, char** errmsg);
/* w_csv: comma-separated rationals, or NULL/empty for all proper parts */
PC_API pc_status pc_run_initial(const char* f_text, const char* w_csv,
                                char** doc, char** errmsg);
PC_API pc_status pc_run_frobenius(long l1, long l2, long k, char** doc,
                                  char** errmsg);
/* re-checks any emitted document; PC_OK iff every claim verifies */
PC_API pc_status pc_run_verify(const char* document_json, char** report,
                               char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POLYCERT_H */
