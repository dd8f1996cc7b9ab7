#ifndef ITDIM_H
#define ITDIM_H

/* C interface to the itdim engine. Handles are opaque; every call returns an
 * itdim_status and writes results through out-parameters. The message of the
 * last failing call on the current thread is available from
 * itdim_last_error(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ITDIM_API __declspec(dllexport)
#else
#define ITDIM_API __attribute__((visibility("default")))
#endif

typedef enum itdim_status {
    ITDIM_OK = 0,
    ITDIM_E_INVALID_ARGUMENT = 10,
    ITDIM_E_PARSE = 11,
    ITDIM_E_NON_ADMISSIBLE = 12,
    ITDIM_E_ZERO_MODULE = 13,
    ITDIM_E_RESOLUTION_CUTOFF = 14,
    ITDIM_E_PRIME_TOO_SMALL = 15,
    ITDIM_E_DECOMPOSITION_STUCK = 16,
    ITDIM_E_INTERN_AMBIGUOUS = 17,
    ITDIM_E_CLOSURE_CUTOFF = 18,
    ITDIM_E_ORBIT_CUTOFF = 19,
    ITDIM_E_PD_UNDETERMINED = 20,
    ITDIM_E_CONDITION_A = 21,
    ITDIM_E_INTERNAL = 99
} itdim_status;

typedef struct itdim_config {
    uint64_t prime;
    int32_t cutoff;
    int32_t ext_window;
    int32_t trials;
    uint64_t seed;
    int32_t d_cap;
} itdim_config;

typedef enum itdim_pd_kind { ITDIM_PD_FINITE = 0, ITDIM_PD_INFINITE = 1, ITDIM_PD_AT_LEAST = 2 } itdim_pd_kind;

typedef struct itdim_dim_result {
    itdim_pd_kind kind;
    int32_t value; /* n for finite, the cutoff for at-least, 0 for infinite */
} itdim_dim_result;

/* An algebra file together with its computation session. */
typedef struct itdim_algebra itdim_algebra;

ITDIM_API void itdim_config_default(itdim_config* cfg);
ITDIM_API const char* itdim_status_name(itdim_status s);
ITDIM_API const char* itdim_last_error(void);

ITDIM_API itdim_status itdim_algebra_parse(const char* text, const itdim_config* cfg, itdim_algebra** out);
ITDIM_API void itdim_algebra_free(itdim_algebra* a);
ITDIM_API itdim_status itdim_algebra_dimension(const itdim_algebra* a, int32_t* out);
ITDIM_API itdim_status itdim_algebra_vertices(const itdim_algebra* a, int32_t* out);

/* d_gens: NULL or "" for add Λ, "all" for mod Λ, otherwise a module
 * expression whose syzygy closure is D. */
ITDIM_API itdim_status itdim_phi_d(itdim_algebra* a, const char* module, const char* d_gens, int32_t* out);
ITDIM_API itdim_status itdim_psi_d(itdim_algebra* a, const char* module, const char* d_gens, int32_t* out);
ITDIM_API itdim_status itdim_pd(itdim_algebra* a, const char* module, itdim_dim_result* out);
ITDIM_API itdim_status itdim_injdim(itdim_algebra* a, const char* module, itdim_dim_result* out);
ITDIM_API itdim_status itdim_resdim(itdim_algebra* a, const char* module, const char* d_gens, itdim_dim_result* out);

typedef struct itdim_request {
    const char* module;   /* may be NULL */
    const char* d_gens;   /* may be NULL */
    const char* v;        /* may be NULL */
    int32_t n;
    itdim_config config;
} itdim_request;

/* Runs one command and returns its JSON report (free with itdim_string_free)
 * and the process exit code the report implies. */
ITDIM_API itdim_status itdim_run(const char* command, const char* algebra_text, const itdim_request* req,
                                 char** json_out, int32_t* exit_code);
ITDIM_API void itdim_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
