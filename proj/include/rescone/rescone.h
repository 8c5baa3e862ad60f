/* C interface to the rescone library. All handles are opaque; every fallible
 * call returns a rescone_status and records the error name and message for the
 * calling thread. Strings returned through char** must be released with
 * rescone_string_free. */
#ifndef RESCONE_RESCONE_H
#define RESCONE_RESCONE_H

#include <stddef.h>

#if defined(RESCONE_BUILDING_LIBRARY)
#define RESCONE_API __attribute__((visibility("default")))
#else
#define RESCONE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rescone_status {
  RESCONE_OK = 0,
  RESCONE_ERR_USAGE = 2,   /* bad input format or unsupported output format */
  RESCONE_ERR_DOMAIN = 3,  /* mathematical precondition failed */
  RESCONE_ERR_INTERNAL = 4
} rescone_status;

typedef enum rescone_format {
  RESCONE_FORMAT_JSON = 0,
  RESCONE_FORMAT_TABLE = 1,
  RESCONE_FORMAT_CSV = 2
} rescone_format;

typedef enum rescone_basis_kind {
  RESCONE_BASIS_BOUNDARY = 0,
  RESCONE_BASIS_KAPRANOV = 1
} rescone_basis_kind;

typedef struct rescone_matrix rescone_matrix;
typedef struct rescone_result rescone_result;

RESCONE_API const char* rescone_version(void);

/* Error name (kebab-case, e.g. "bad-sum") and full message of the last failure
 * on this thread. Empty strings after a successful call. */
RESCONE_API const char* rescone_last_error_name(void);
RESCONE_API const char* rescone_last_error_message(void);

RESCONE_API void rescone_string_free(char* s);

RESCONE_API rescone_status rescone_parse_format(const char* name, rescone_format* out);

/* Matrices */
RESCONE_API rescone_status rescone_matrix_from_csv(const char* text, rescone_matrix** out);
RESCONE_API rescone_status rescone_matrix_load_fixture(const char* name, rescone_matrix** out);
RESCONE_API size_t rescone_matrix_rows(const rescone_matrix* m);
RESCONE_API size_t rescone_matrix_cols(const rescone_matrix* m);
RESCONE_API rescone_status rescone_matrix_rank(const rescone_matrix* m, size_t* out);
RESCONE_API rescone_status rescone_matrix_kernel_dimension(const rescone_matrix* m, size_t* out);
/* Entry (r, c) as "p/q" or an integer string. */
RESCONE_API rescone_status rescone_matrix_entry(const rescone_matrix* m, size_t r, size_t c, char** out);
RESCONE_API rescone_status rescone_matrix_equal(const rescone_matrix* a, const rescone_matrix* b, int* out);
RESCONE_API rescone_status rescone_matrix_to_csv(const rescone_matrix* m, char** out);
RESCONE_API void rescone_matrix_free(rescone_matrix* m);

/* Pipelines. Signatures are passed as integer arrays; an anchor of 0 selects
 * the default (the last marking). */
RESCONE_API rescone_status rescone_basis(int n, int boundary_sets, rescone_result** out);
RESCONE_API rescone_status rescone_convert(int n, const int* t, size_t t_len, rescone_result** out);
RESCONE_API rescone_status rescone_dmu(const int* mu, size_t mu_len, int anchor, rescone_basis_kind basis,
                                       rescone_result** out);
RESCONE_API rescone_status rescone_dmus(const int* mu, size_t mu_len, const int* s, size_t s_len, int anchor,
                                        rescone_basis_kind basis, rescone_result** out);
/* With anchor == 0 all two-level graphs with min..max vertices; otherwise the
 * graphs carrying the anchor below the top level. */
RESCONE_API rescone_status rescone_graphs(const int* mu, size_t mu_len, int min_vertices, int max_vertices,
                                          int anchor, int allow_horizontal, rescone_result** out);
/* points: rational strings, one per marking; scale may be NULL. */
RESCONE_API rescone_status rescone_residues(const int* mu, size_t mu_len, const char* const* points,
                                            size_t n_points, const char* scale, int membership,
                                            rescone_result** out);
RESCONE_API rescone_status rescone_components(const int* mu, size_t mu_len, int monodromy, rescone_result** out);
RESCONE_API rescone_status rescone_audit(const int* mu, size_t mu_len, int report, int anchor,
                                         rescone_result** out);
RESCONE_API rescone_status rescone_fixture(const char* name, rescone_result** out);

RESCONE_API rescone_status rescone_result_render(const rescone_result* r, rescone_format format, char** out);
/* Audit and fixture results expose their matrix; the handle is a copy. */
RESCONE_API rescone_status rescone_result_matrix(const rescone_result* r, rescone_matrix** out);
/* Integer fields of an audit certificate: "n", "rho", "kept", "killed_count",
 * "matrix_rank", "contracted_span_rank", "corank", "boundary_rows_rank",
 * "polyhedral" (1 or 0). */
RESCONE_API rescone_status rescone_certificate_field(const rescone_result* r, const char* field, long* out);
/* Number of items in list-like results (terms, graphs, symbols, residues). */
RESCONE_API rescone_status rescone_result_size(const rescone_result* r, size_t* out);
RESCONE_API void rescone_result_free(rescone_result* r);

#ifdef __cplusplus
}
#endif

#endif
