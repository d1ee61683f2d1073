/*
 * C interface to the lucastower library.
 *
 * Every object crosses the boundary as an opaque handle owned by the caller
 * and released with its matching *_free function. Functions report through
 * lt_status; on failure the out-parameters are left untouched and
 * lt_last_error() describes the problem (per thread, valid until the next
 * failing call on that thread). Strings returned through char** are
 * allocated by the library and released with lt_string_free.
 *
 * R-sequences are passed as (rs, rs_len): strictly decreasing positive
 * integers; rs may be NULL when rs_len is 0.
 */
#ifndef LUCASTOWER_H
#define LUCASTOWER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LT_API __declspec(dllexport)
#else
#define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_DOMAIN = 1,   /* precondition violated: n > m, bad R-sequence, ... */
  LT_ERR_PARSE = 2,    /* malformed polynomial text or JSON */
  LT_ERR_ARGUMENT = 3, /* NULL handle, index out of range, small buffer */
  LT_ERR_INTERNAL = 4  /* library defect: two routes disagreed */
} lt_status;

typedef struct lt_poly lt_poly;
typedef struct lt_rational lt_rational;
typedef struct lt_series lt_series;
typedef struct lt_words lt_words;
typedef struct lt_tilings lt_tilings;

LT_API const char *lt_last_error(void);
LT_API void lt_string_free(char *s);

/* ---- polynomials ---- */

LT_API lt_status lt_poly_parse(const char *text, lt_poly **out);
LT_API lt_status lt_poly_from_json(const char *json, lt_poly **out);
LT_API void lt_poly_free(lt_poly *p);
LT_API lt_status lt_poly_to_string(const lt_poly *p, char **out);
LT_API lt_status lt_poly_to_json(const lt_poly *p, char **out);
LT_API size_t lt_poly_term_count(const lt_poly *p);
/* 1 if equal, 0 otherwise (also 0 for NULL arguments). */
LT_API int lt_poly_equal(const lt_poly *a, const lt_poly *b);
/* Variables as parallel (stream, index) arrays in ascending order. Writes
 * the count to *count; fails with LT_ERR_ARGUMENT if capacity is too small. */
LT_API lt_status lt_poly_variables(const lt_poly *p, uint32_t *streams, uint32_t *indices, size_t capacity,
                                   size_t *count);

LT_API lt_status lt_poly_add(const lt_poly *a, const lt_poly *b, lt_poly **out);
LT_API lt_status lt_poly_mul(const lt_poly *a, const lt_poly *b, lt_poly **out);
/* *divisible is set to 1 and *out to the quotient when den divides num,
 * otherwise *divisible = 0 and *out = NULL. */
LT_API lt_status lt_poly_exact_div(const lt_poly *num, const lt_poly *den, lt_poly **out, int *divisible);
LT_API lt_status lt_poly_phi(const lt_poly *p, uint32_t r, lt_poly **out);
LT_API lt_status lt_poly_upsilon(const lt_poly *p, uint32_t stream, lt_poly **out);
/* Exact value as a decimal string. */
LT_API lt_status lt_poly_specialize(const lt_poly *p, const uint32_t *streams, const uint32_t *indices,
                                    const int64_t *values, size_t count, char **out);

/* ---- Lucas polynomials ---- */

LT_API lt_status lt_lucas(uint32_t m, lt_poly **out);
LT_API lt_status lt_lucas_factorial(uint32_t m, lt_poly **out);
LT_API lt_status lt_lucanomial(uint32_t m, uint32_t n, lt_poly **out);
LT_API lt_status lt_lucas_catalan(uint32_t m, lt_poly **out);

/* ---- r-Lucas layer ---- */

LT_API lt_status lt_epsilon(uint32_t m, uint32_t r, uint32_t *out);
LT_API lt_status lt_h_r(uint32_t m, uint32_t r, uint64_t *out);
LT_API lt_status lt_gamma_r(uint32_t m, uint32_t n, uint32_t r, uint64_t *out);
LT_API lt_status lt_r_lucas(uint32_t m, uint32_t r, lt_poly **out);
LT_API lt_status lt_r_lucas_factorial(uint32_t m, uint32_t r, lt_poly **out);
LT_API lt_status lt_r_lucanomial(uint32_t m, uint32_t n, uint32_t r, lt_poly **out);
/* Each array needs room for r entries. *proof_case receives 1..5. */
LT_API lt_status lt_matching(uint32_t m, uint32_t n, uint32_t r, uint32_t *m_star, uint32_t *n_star,
                             uint32_t *k_star, size_t capacity, int *proof_case);
/* *sufficient is 1 when m mod r < r/2. */
LT_API lt_status lt_r_catalan(uint32_t m, uint32_t r, lt_rational **out, int *sufficient);

/* ---- rational verdicts ---- */

LT_API void lt_rational_free(lt_rational *q);
LT_API int lt_rational_is_polynomial(const lt_rational *q);
LT_API lt_status lt_rational_numerator(const lt_rational *q, lt_poly **out);
LT_API lt_status lt_rational_denominator(const lt_rational *q, lt_poly **out);
/* LT_ERR_ARGUMENT when the form is not a polynomial. */
LT_API lt_status lt_rational_quotient(const lt_rational *q, lt_poly **out);

/* ---- R-Lucas tower ---- */

LT_API lt_status lt_m_sub_r(uint32_t m, const uint32_t *rs, size_t rs_len, lt_poly **out);
LT_API lt_status lt_m_sub_r_factorial(uint32_t m, const uint32_t *rs, size_t rs_len, lt_poly **out);
/* Chains of length rs_len + 1; degenerate entries are written as -1. */
LT_API lt_status lt_nu_alpha_beta(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, int64_t *nu,
                                  int64_t *alpha, int64_t *beta, size_t capacity);
LT_API lt_status lt_sufficient_condition(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, int *out);
LT_API lt_status lt_binomial_r(uint32_t m, uint32_t n, const uint32_t *rs, size_t rs_len, lt_rational **out);

/* ---- generating functions ---- */

LT_API lt_status lt_l_series(const uint32_t *rs, size_t rs_len, uint32_t order, lt_series **out);
LT_API lt_status lt_l_series_numerator(const uint32_t *rs, size_t rs_len, lt_series **out);
LT_API void lt_series_free(lt_series *s);
LT_API uint32_t lt_series_order(const lt_series *s);
LT_API lt_status lt_series_coeff(const lt_series *s, uint32_t k, lt_poly **out);

/* ---- enumeration oracles ---- */

LT_API lt_status lt_oracle_delta(uint32_t m, lt_words **out);
LT_API lt_status lt_oracle_delta_r(uint32_t m, uint32_t r, lt_words **out);
LT_API lt_status lt_oracle_delta_R(uint32_t m, const uint32_t *rs, size_t rs_len, lt_words **out);
LT_API void lt_words_free(lt_words *w);
LT_API size_t lt_words_count(const lt_words *w);
/* Number of tiles in word i (0 if out of range). */
LT_API size_t lt_words_length(const lt_words *w, size_t i);
/* Length of tile j of word i (0 if out of range). */
LT_API uint32_t lt_words_tile(const lt_words *w, size_t i, size_t j);
LT_API lt_status lt_words_weight_sum(const lt_words *w, lt_poly **out);

/* r = 1 gives the plain binomial partial tilings of delta_m. */
LT_API lt_status lt_oracle_binomial_tilings(uint32_t m, uint32_t n, uint32_t r, lt_tilings **out);
LT_API void lt_tilings_free(lt_tilings *t);
LT_API size_t lt_tilings_count(const lt_tilings *t);
/* Step string such as "WNNWN"; owned by the handle. NULL if out of range. */
LT_API const char *lt_tilings_path(const lt_tilings *t, size_t i);
LT_API size_t lt_tilings_row_count(const lt_tilings *t, size_t i);
LT_API size_t lt_tilings_row_length(const lt_tilings *t, size_t i, size_t row);
LT_API uint32_t lt_tilings_tile(const lt_tilings *t, size_t i, size_t row, size_t j);
LT_API lt_status lt_tilings_weight_sum(const lt_tilings *t, lt_poly **out);

#ifdef __cplusplus
}
#endif

#endif /* LUCASTOWER_H */
