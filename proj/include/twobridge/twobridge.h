#ifndef TWOBRIDGE_H
#define TWOBRIDGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TB_BUILDING_LIBRARY)
#    define TB_API __declspec(dllexport)
#  else
#    define TB_API __declspec(dllimport)
#  endif
#else
#  define TB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
  TB_OK = 0,
  TB_INVALID_ARGUMENT,
  TB_PARSE_ERROR,
  TB_ODD_LENGTH_WORD,
  TB_DEGENERATE_P,
  TB_NOT_COPRIME,
  TB_EVEN_P,
  TB_EVEN_Q,
  TB_NOT_SYMMETRIZABLE,
  TB_HALF_EXPONENT_AT_NON_SQUARE,
  TB_HALF_EXPONENT_PRESENT,
  TB_DIVISION_BY_ZERO,
  TB_P_TOO_LARGE,
  TB_BUDGET_EXCEEDED,
  TB_BASE_BUDGET_EXCEEDED,
  TB_TRACE_MISMATCH,
  TB_SIZE_TOO_SMALL,
  TB_TOO_LARGE,
  TB_UNEQUAL_P,
  TB_EXPANSION_FAILURE,
  TB_INTERNAL_ERROR
} tb_status;

TB_API const char* tb_status_name(tb_status status);
/* Message of the last failure on this thread; empty after a success. */
TB_API const char* tb_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
TB_API void tb_string_free(char* s);

typedef struct tb_budgets {
  uint64_t alexander_terms;
  uint64_t cross_check;
  uint64_t profile;
  uint64_t direct;
  uint64_t determinant_size;
  uint32_t word_nmax;
  uint32_t alexander_nmax;
} tb_budgets;

TB_API tb_budgets tb_budgets_default(void);

typedef struct tb_poly tb_poly;
typedef struct tb_word tb_word;
typedef struct tb_knot tb_knot;
typedef struct tb_certificate tb_certificate;

/* Laurent polynomials; exponents are doubled so half powers are exact. */
TB_API tb_status tb_poly_from_json(const char* json, tb_poly** out);
TB_API tb_status tb_poly_to_json(const tb_poly* f, char** out);
TB_API tb_status tb_poly_to_string(const tb_poly* f, const char* var, char** out);
TB_API tb_status tb_poly_add(const tb_poly* f, const tb_poly* g, tb_poly** out);
TB_API tb_status tb_poly_mul(const tb_poly* f, const tb_poly* g, tb_poly** out);
TB_API tb_status tb_poly_symmetrize(const tb_poly* f, tb_poly** out);
TB_API tb_status tb_poly_equal_up_to_units(const tb_poly* f, const tb_poly* g, int* out);
/* Value at a rational point "a/b" or "a", written as a decimal fraction string. */
TB_API tb_status tb_poly_evaluate(const tb_poly* f, const char* x, char** out);
TB_API void tb_poly_free(tb_poly* f);

TB_API tb_status tb_word_parse(const char* text, tb_word** out);
TB_API tb_status tb_word_to_string(const tb_word* w, char** out);
TB_API tb_status tb_word_is_fibered(const tb_word* w, int* out);
TB_API tb_status tb_word_evaluate(const tb_word* w, tb_knot** out);
TB_API tb_status tb_word_alexander(const tb_word* w, tb_poly** out);
TB_API void tb_word_free(tb_word* w);

/* p and q are decimal strings. */
TB_API tb_status tb_knot_normalize(const char* p, const char* q, tb_knot** out);
TB_API tb_status tb_knot_parse(const char* text, tb_knot** out);
TB_API tb_status tb_knot_to_string(const tb_knot* k, char** out);
TB_API tb_status tb_knot_p(const tb_knot* k, char** out);
TB_API tb_status tb_knot_q(const tb_knot* k, char** out);
TB_API tb_status tb_knot_equivalent(const tb_knot* a, const tb_knot* b, int* out);
TB_API tb_status tb_knot_mirror(const tb_knot* k, tb_knot** out);
TB_API tb_status tb_knot_even_expansion(const tb_knot* k, tb_word** out);
TB_API tb_status tb_knot_alexander(const tb_knot* k, const tb_budgets* budgets, tb_poly** out);
TB_API tb_status tb_knot_diagonal(const tb_knot* k, const tb_budgets* budgets, int64_t* out);
TB_API void tb_knot_free(tb_knot* k);

TB_API tb_status tb_certify(const tb_knot* a, const tb_knot* b, const tb_budgets* budgets, tb_certificate** out);
/* 1 when distinguished, 0 when inconclusive. */
TB_API tb_status tb_certificate_distinguished(const tb_certificate* c, int* out);
TB_API tb_status tb_certificate_to_json(const tb_certificate* c, char** out);
TB_API void tb_certificate_free(tb_certificate* c);

TB_API tb_status tb_laplacian_cofactor(size_t m, const int64_t* weights_row_major, char** out);
TB_API tb_status tb_tree_sum(size_t m, const int64_t* weights_row_major, char** out);

TB_API tb_status tb_sw_covering_base(const tb_poly* alex, tb_poly** out);
TB_API tb_status tb_sw_knot_surgery(const tb_poly* base, const tb_poly* alex, tb_poly** out);

/* Subcommand reports as JSON text. budgets may be NULL for the defaults.
   Optional string inputs may be NULL. */
TB_API tb_status tb_cmd_classify(const char* word, const char* pq, const tb_budgets* budgets, char** out);
TB_API tb_status tb_cmd_alex(const char* word, const char* pq, const tb_budgets* budgets, char** out);
TB_API tb_status tb_cmd_covering(const char* pq, int profile, const tb_budgets* budgets, char** out);
/* i < 0 selects every member of the level. */
TB_API tb_status tb_cmd_family(const char* construction, uint32_t n, int64_t i, const tb_budgets* budgets,
                               char** out);
TB_API tb_status tb_cmd_sw(const char* family, uint32_t n, const tb_budgets* budgets, char** out);
TB_API tb_status tb_cmd_certify(const char* left, const char* right, const tb_budgets* budgets, char** out);
TB_API tb_status tb_cmd_report(uint32_t n, const tb_budgets* budgets, char** out);
/* Negative pmax, nmax or n leave the suite default. */
TB_API tb_status tb_cmd_verify(const char* suite, int64_t pmax, int64_t nmax, int64_t n, const tb_budgets* budgets,
                               char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
