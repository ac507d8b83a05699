/*
 * flagmaps C API.
 *
 * Every entry point returns an fm_status. On failure the thread-local
 * message from fm_last_error() describes the problem. Objects returned
 * through out-pointers are owned by the caller and released with the
 * matching *_free function; strings with fm_string_free.
 */
#ifndef FLAGMAPS_H
#define FLAGMAPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FLAGMAPS_BUILDING)
#    define FLAGMAPS_API __declspec(dllexport)
#  else
#    define FLAGMAPS_API __declspec(dllimport)
#  endif
#else
#  define FLAGMAPS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
    FM_OK = 0,
    FM_NOT_CERTIFIED = 1,   /* only from fm_decision_status */
    FM_INPUT_ERROR = 2,
    FM_RESOURCE_ERROR = 3,
    FM_INTERNAL_ERROR = 4
} fm_status;

typedef enum fm_format { FM_FORMAT_TEXT = 0, FM_FORMAT_JSON = 1 } fm_format;

typedef struct fm_limits {
    uint64_t max_terms;   /* support size of a single character */
    uint32_t max_n;       /* largest n for enumeration */
    uint32_t max_rank;
} fm_limits;

typedef struct fm_group fm_group;
typedef struct fm_poly fm_poly;
typedef struct fm_ypoly fm_ypoly;
typedef struct fm_decision fm_decision;

/* Returns nonzero to keep going. */
typedef int (*fm_certificate_visitor)(const char* rendered, void* user);

FLAGMAPS_API const char* fm_version(void);
FLAGMAPS_API const char* fm_last_error(void);
FLAGMAPS_API void fm_string_free(char* s);
FLAGMAPS_API void fm_limits_default(fm_limits* out);

/* Groups: "A2", "G2", "A1xA2", or a JSON integer matrix. */
FLAGMAPS_API fm_status fm_group_from_tag(const char* tag, fm_group** out);
FLAGMAPS_API fm_status fm_group_from_json(const char* json, fm_group** out);
FLAGMAPS_API void fm_group_free(fm_group* g);
FLAGMAPS_API fm_status fm_group_rank(const fm_group* g, size_t* out);
FLAGMAPS_API fm_status fm_group_label(const fm_group* g, char** out);
FLAGMAPS_API fm_status fm_group_positive_root_count(const fm_group* g, size_t* out);

/* Polynomials on the weight lattice, text form "w1^2 + 2 + rho^2". */
FLAGMAPS_API fm_status fm_poly_parse(const char* text, size_t rank, fm_poly** out);
FLAGMAPS_API fm_status fm_poly_render(const fm_poly* p, char** out);
FLAGMAPS_API fm_status fm_poly_rank(const fm_poly* p, size_t* out);
FLAGMAPS_API fm_status fm_poly_term_count(const fm_poly* p, size_t* out);
FLAGMAPS_API fm_status fm_poly_add(const fm_poly* a, const fm_poly* b, fm_poly** out);
FLAGMAPS_API fm_status fm_poly_mul(const fm_poly* a, const fm_poly* b, fm_poly** out);
FLAGMAPS_API fm_status fm_poly_equal(const fm_poly* a, const fm_poly* b, int* out);
/* Decimal string, arbitrary size. */
FLAGMAPS_API fm_status fm_poly_evaluate_at_one(const fm_poly* p, char** out);
FLAGMAPS_API void fm_poly_free(fm_poly* p);

/* Irreducible characters. limits may be NULL for defaults. */
FLAGMAPS_API fm_status fm_character(const fm_group* g, const int64_t* lambda, size_t len,
                                    const fm_limits* limits, fm_poly** out);
FLAGMAPS_API fm_status fm_dimension(const fm_group* g, const int64_t* lambda, size_t len, char** out);

/* Decompositions: FM_OK with a decision object, certified or not. */
FLAGMAPS_API fm_status fm_decompose(const fm_group* g, const fm_poly* p, const fm_limits* limits,
                                    fm_decision** out);
FLAGMAPS_API fm_status fm_is_in_omega_n(const fm_group* g, const fm_poly* p, uint64_t n,
                                        const fm_limits* limits, fm_decision** out);
/* hom_json: {"group": "A2", "n": 3, "rows": [[1,0],[-1,1]]} */
FLAGMAPS_API fm_status fm_realize(const fm_group* g, const char* hom_json, const fm_limits* limits,
                                  fm_decision** out);
/* FM_OK when certified, FM_NOT_CERTIFIED otherwise. */
FLAGMAPS_API fm_status fm_decision_status(const fm_decision* d);
FLAGMAPS_API fm_status fm_decision_render(const fm_decision* d, fm_format format, char** out);
FLAGMAPS_API void fm_decision_free(fm_decision* d);

FLAGMAPS_API fm_status fm_smap(const char* hom_json, fm_poly** out);
/* weights_json: [[1],[-1]] or {"weights": [...]}; *holds set to 0 or 1. */
FLAGMAPS_API fm_status fm_verify_theorem(const fm_group* g, const char* weights_json, int* holds,
                                         char** character, char** smap);

/* Type A: partitions as "2,1,0", y-polynomials over y1..ym. */
FLAGMAPS_API fm_status fm_schur(const char* partition, size_t m, fm_ypoly** out);
FLAGMAPS_API fm_status fm_schur_dim(const char* partition, size_t m, char** out);
FLAGMAPS_API fm_status fm_ypoly_parse(const char* text, size_t nvars, fm_ypoly** out);
FLAGMAPS_API fm_status fm_ypoly_render(const fm_ypoly* q, char** out);
FLAGMAPS_API void fm_ypoly_free(fm_ypoly* q);
/* g must be A_{m-1}; p of rank m-1. */
FLAGMAPS_API fm_status fm_alpha(const fm_group* g, const fm_poly* p, fm_ypoly** out);
FLAGMAPS_API fm_status fm_alpha_inverse(const fm_ypoly* q, fm_poly** out);
/* Report with n, the matrix of f_mu^* and the alpha-s check. */
FLAGMAPS_API fm_status fm_schur_flag_map(const char* partition, size_t m, fm_format format, char** out);

FLAGMAPS_API fm_status fm_omega_enumerate(const fm_group* g, uint32_t n, const fm_limits* limits,
                                          fm_format format, fm_certificate_visitor visit, void* user);

#ifdef __cplusplus
}
#endif

#endif /* FLAGMAPS_H */
