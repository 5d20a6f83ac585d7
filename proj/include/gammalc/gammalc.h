/* C interface to the gammalc library.
 *
 * Every function returns a glc_status. On failure the thread-local message
 * from glc_last_error() describes the problem. Strings returned through
 * char** out-parameters are heap allocated and owned by the caller; release
 * them with glc_string_free. Handles are released with their *_free
 * function; passing NULL to a *_free function is a no-op.
 *
 * Numbers that can exceed machine range (coefficients, sums, counts) are
 * exchanged as decimal strings. Rationals use the form "p/q", or "p" when
 * q = 1.
 */
#ifndef GAMMALC_H
#define GAMMALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(GLC_BUILDING)
#define GLC_API __attribute__((visibility("default")))
#else
#define GLC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glc_status {
  GLC_OK = 0,
  GLC_ERR_PARSE = 1,
  GLC_ERR_RANGE = 2,
  GLC_ERR_SYMMETRY = 3,
  GLC_ERR_NEGATIVE_ENTRY = 4,
  GLC_ERR_ORDER_TOO_SMALL = 5,
  GLC_ERR_LENGTH_MISMATCH = 6,
  GLC_ERR_HYPOTHESIS = 7,
  GLC_ERR_ENDPOINT_MISMATCH = 8,
  GLC_ERR_CAP_EXCEEDED = 9,
  GLC_ERR_INVARIANT = 10,
  GLC_ERR_NULL_ARGUMENT = 11,
  GLC_ERR_INTERNAL = 12
} glc_status;

typedef enum glc_format { GLC_FORMAT_TEXT = 0, GLC_FORMAT_JSON = 1 } glc_format;

typedef enum glc_parity { GLC_EVEN = 0, GLC_ODD = 1 } glc_parity;

typedef enum glc_predicate {
  GLC_LOG_CONCAVE = 0,
  GLC_ULTRA_LOG_CONCAVE = 1,
  GLC_UNIMODAL = 2,
  GLC_INTERNAL_ZEROS = 3,
  GLC_PAIRWISE_LOG_CONCAVE = 4
} glc_predicate;

typedef enum glc_table_layout {
  GLC_TABLE_FULL = 0,
  GLC_TABLE_COMPACT = 1,
  GLC_TABLE_REGROUPED = 2
} glc_table_layout;

typedef struct glc_seq glc_seq;
typedef struct glc_poly glc_poly;
typedef struct glc_gamma glc_gamma;
typedef struct glc_coeff_table glc_coeff_table;
typedef struct glc_certificate glc_certificate;

/* Default enumeration cap for path operations. */
#define GLC_DEFAULT_PATH_CAP 10000000ULL

GLC_API const char* glc_version(void);
GLC_API const char* glc_status_name(glc_status status);
/* Message of the last failed call on this thread, "" if none. */
GLC_API const char* glc_last_error(void);
GLC_API void glc_string_free(char* s);

/* ---- rational sequences ---- */

/* Parses a comma separated list such as "1,-2/3,4". */
GLC_API glc_status glc_seq_parse(const char* text, glc_seq** out);
/* Parses {"n": int, "coeffs": [...]}; *n_out receives n. */
GLC_API glc_status glc_seq_parse_json(const char* text, long* n_out,
                                      glc_seq** out);
GLC_API size_t glc_seq_length(const glc_seq* seq);
GLC_API glc_status glc_seq_get(const glc_seq* seq, size_t index, char** out);
/* Comma separated, the inverse of glc_seq_parse. */
GLC_API glc_status glc_seq_to_string(const glc_seq* seq, char** out);
GLC_API void glc_seq_free(glc_seq* seq);

/* ---- symmetric polynomials and gamma vectors ---- */

GLC_API glc_status glc_poly_new(long n, const glc_seq* coeffs, glc_poly** out);
GLC_API glc_status glc_gamma_new(long n, const glc_seq* coeffs, glc_gamma** out);
GLC_API glc_status glc_gamma_to_poly(const glc_gamma* gamma, glc_poly** out);
GLC_API glc_status glc_poly_to_gamma(const glc_poly* poly, glc_gamma** out);
GLC_API glc_status glc_poly_coeffs(const glc_poly* poly, glc_seq** out);
GLC_API glc_status glc_gamma_coeffs(const glc_gamma* gamma, glc_seq** out);
GLC_API glc_status glc_poly_json(const glc_poly* poly, char** out);
GLC_API glc_status glc_gamma_json(const glc_gamma* gamma, char** out);
GLC_API void glc_poly_free(glc_poly* poly);
GLC_API void glc_gamma_free(glc_gamma* gamma);

/* h_i in terms of the gammas, one line per distinct h_i. */
GLC_API glc_status glc_render_h_in_gamma(long n, char** out);

/* ---- sequence predicates ---- */

/* `order` is used by GLC_ULTRA_LOG_CONCAVE only. `witness` receives up to
 * three indices and `witness_len` their count (0 when there is none).
 * `json` may be NULL. */
GLC_API glc_status glc_check_sequence(glc_predicate predicate,
                                      const glc_seq* seq, long order,
                                      int* verdict, size_t witness[3],
                                      size_t* witness_len, char** json);

/* Log-concavity transfer: gamma LC without internal zeros implies h LC
 * without internal zeros. `json` may be NULL. */
GLC_API glc_status glc_main_theorem(const glc_gamma* gamma, int* hypothesis,
                                    int* conclusion, char** json);
/* Ultra log-concave transfer, orders floor(n/2) and n. */
GLC_API glc_status glc_ultra_transfer(const glc_gamma* gamma, int* hypothesis,
                                      int* conclusion, char** json);

/* ---- coefficients of h_i^2 - h_{i-1} h_{i+1} ---- */

GLC_API glc_status glc_coeff(long n, long i, long j, long k, char** out);
GLC_API glc_status glc_coeff_oracle(long n, long i, long j, long k, char** out);
GLC_API glc_status glc_coeff_table_new(long n, long i, glc_coeff_table** out);
GLC_API glc_status glc_coeff_table_at(const glc_coeff_table* table, long j,
                                      long k, char** out);
GLC_API glc_status glc_coeff_table_render(const glc_coeff_table* table,
                                          glc_table_layout layout, char** out);
GLC_API glc_status glc_coeff_table_json(const glc_coeff_table* table,
                                        char** out);
GLC_API void glc_coeff_table_free(glc_coeff_table* table);

GLC_API glc_status glc_diagonal(long n, long i, long ell, glc_parity parity,
                                int* tail_sign_ok, glc_format format,
                                char** out);
GLC_API glc_status glc_quadratic(long n, long i, long ell, glc_parity parity,
                                 glc_format format, char** out);
GLC_API glc_status glc_identity(long n, long i, long ell, long j,
                                glc_parity parity, int* holds,
                                glc_format format, char** out);
/* *ok is set when the weighted sum is nonnegative, the summation by parts
 * identity holds and the prefix sums are unimodal and nonnegative. */
GLC_API glc_status glc_abel(const glc_seq* a, const glc_seq* b, int* ok,
                            glc_format format, char** out);
GLC_API glc_status glc_r_sum(long n, long i, long r, char** out);

/* ---- lattice paths ---- */

/* Return nonzero to stop the enumeration early. */
typedef int (*glc_path_visitor)(const char* steps, void* context);

GLC_API glc_status glc_count_paths(long x0, long y0, long x1, long y1,
                                   char** out);
GLC_API glc_status glc_enumerate_paths(long x0, long y0, long x1, long y1,
                                       uint64_t cap, glc_path_visitor visit,
                                       void* context);
/* Both binomial sums and the r-sum, without enumerating paths. */
GLC_API glc_status glc_formula_sums(long n, long i, long r, glc_format format,
                                    char** out);
/* Binomial sums and path sums of both sides. */
GLC_API glc_status glc_path_sums(long n, long i, long r, uint64_t cap,
                                 glc_format format, char** out);
GLC_API glc_status glc_claim1(long n, long i, long r, uint64_t cap, int* holds,
                              glc_format format, char** out);
GLC_API glc_status glc_claim2(long n, long i, long r, uint64_t cap, int* holds,
                              glc_format format, char** out);
GLC_API glc_status glc_involution(long x0, long y0, long x1, long y1,
                                  const char* steps, char** out);
/* `steps` may be NULL for the bare configuration. */
GLC_API glc_status glc_render_grid(long n, long i, long r, const char* steps,
                                   char** out);

GLC_API glc_status glc_certificate_new(long n, long i, long r, uint64_t cap,
                                       int collect_paths,
                                       glc_certificate** out);
GLC_API glc_status glc_certificate_certifies(const glc_certificate* cert,
                                             int* certifies);
GLC_API glc_status glc_certificate_render(const glc_certificate* cert,
                                          int ascii, char** out);
GLC_API glc_status glc_certificate_json(const glc_certificate* cert,
                                        char** out);
GLC_API void glc_certificate_free(glc_certificate* cert);

/* ---- property sweeps ---- */

/* kind: coefficients, diagonals, r-sums, paths, main-theorem,
 * ultra-transfer, abel, predicates. `n_max` is ignored by abel; for
 * predicates it is the maximum sequence length. */
GLC_API glc_status glc_sweep(const char* kind, long n_max, uint64_t cap,
                             int* passed, glc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
