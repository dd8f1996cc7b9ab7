/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "itdim/itdim.h"

static int failures = 0;

#define EXPECT(cond)                                                     \
    do {                                                                 \
        if (!(cond)) {                                                   \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                  \
        }                                                                \
    } while (0)

static const char* kLoop6 =
    "vertices 6\n"
    "arrow loop: 1 -> 1\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 3\n"
    "arrow c: 1 -> 4\n"
    "arrow d: 4 -> 5\n"
    "arrow e: 5 -> 6\n"
    "relations: J^2\n"
    "module X = simple(1) + simple(2)\n";

int main(void) {
    itdim_config cfg;
    itdim_config_default(&cfg);
    EXPECT(cfg.prime == 10007);
    EXPECT(cfg.cutoff == 64);

    itdim_algebra* a = NULL;
    EXPECT(itdim_algebra_parse(kLoop6, &cfg, &a) == ITDIM_OK);
    if (!a) return 1;

    int32_t n = 0;
    EXPECT(itdim_algebra_dimension(a, &n) == ITDIM_OK && n == 12);
    EXPECT(itdim_algebra_vertices(a, &n) == ITDIM_OK && n == 6);

    EXPECT(itdim_psi_d(a, "X", NULL, &n) == ITDIM_OK && n == 3);
    EXPECT(itdim_psi_d(a, "X", "proj(*)+simple(2)", &n) == ITDIM_OK && n == 1);
    EXPECT(itdim_phi_d(a, "X", "", &n) == ITDIM_OK && n == 1);
    EXPECT(itdim_phi_d(a, "X", "proj(*)+simple(2)", &n) == ITDIM_OK && n == 0);

    itdim_dim_result r;
    EXPECT(itdim_pd(a, "simple(4)", &r) == ITDIM_OK && r.kind == ITDIM_PD_FINITE && r.value == 2);
    EXPECT(itdim_pd(a, "simple(1)", &r) == ITDIM_OK && r.kind == ITDIM_PD_INFINITE);
    EXPECT(itdim_injdim(a, "inj(2)", &r) == ITDIM_OK && r.kind == ITDIM_PD_FINITE && r.value == 0);
    EXPECT(itdim_resdim(a, "simple(2)", "proj(*)+simple(2)", &r) == ITDIM_OK && r.value == 0);

    /* errors surface as codes with a message */
    EXPECT(itdim_pd(a, "simple(7)", &r) != ITDIM_OK);
    EXPECT(strlen(itdim_last_error()) > 0);
    EXPECT(itdim_pd(a, "simple(", &r) == ITDIM_E_PARSE);
    EXPECT(itdim_pd(NULL, "simple(1)", &r) == ITDIM_E_INVALID_ARGUMENT);
    EXPECT(strcmp(itdim_status_name(ITDIM_OK), "Ok") == 0);
    itdim_algebra_free(a);

    itdim_algebra* bad = NULL;
    EXPECT(itdim_algebra_parse("vertices 1\narrow x: 1 -> 1\n", &cfg, &bad) == ITDIM_E_NON_ADMISSIBLE);
    EXPECT(bad == NULL);
    itdim_config small = cfg;
    small.prime = 9;
    EXPECT(itdim_algebra_parse(kLoop6, &small, &bad) == ITDIM_E_INVALID_ARGUMENT);

    itdim_request req;
    memset(&req, 0, sizeof req);
    req.module = "X";
    req.config = cfg;
    char* json = NULL;
    int32_t exit_code = -1;
    EXPECT(itdim_run("psi", kLoop6, &req, &json, &exit_code) == ITDIM_OK);
    EXPECT(exit_code == 0);
    EXPECT(json != NULL && strstr(json, "\"provenance\"") != NULL);
    itdim_string_free(json);

    if (failures) {
        fprintf(stderr, "%d C API expectation(s) failed\n", failures);
        return 1;
    }
    printf("C API: all expectations met\n");
    return 0;
}
