/* alegeo C API: invariants of ALE spaces and the orbifold obstruction. */
#ifndef ALEGEO_H
#define ALEGEO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(ALEGEO_BUILDING_LIBRARY)
#define ALEGEO_API __attribute__((visibility("default")))
#else
#define ALEGEO_API
#endif

typedef enum alegeo_status {
  ALEGEO_OK = 0,
  ALEGEO_ERR_INVALID_ARGUMENT = 1,
  ALEGEO_ERR_INVALID_DIMENSION = 2,
  ALEGEO_ERR_INVALID_PARAMETER = 3,
  ALEGEO_ERR_DIMENSION_MISMATCH = 4,
  ALEGEO_ERR_GROUP_MISMATCH = 5,
  ALEGEO_ERR_OUT_OF_DOMAIN = 6,
  ALEGEO_ERR_SINGULAR_METRIC = 7,
  ALEGEO_ERR_NOT_EINSTEIN = 8,
  ALEGEO_ERR_NOT_WEYL = 9,
  ALEGEO_ERR_POSITIVE_EINSTEIN_CONSTANT = 10,
  ALEGEO_ERR_QUADRATURE_FAILURE = 11,
  ALEGEO_ERR_SCHEDULE_TOO_SHORT = 12,
  ALEGEO_ERR_FIT_ILL_CONDITIONED = 13,
  ALEGEO_ERR_NON_DECAYING_INPUT = 14,
  ALEGEO_ERR_ODE_FAILURE = 15,
  ALEGEO_ERR_INNER_BOUNDARY_ILL_POSED = 16,
  ALEGEO_ERR_EXPANSION_FIT_FAILURE = 17,
  ALEGEO_ERR_NO_CONVERGENCE = 18,
  ALEGEO_ERR_GRID_TOO_COARSE = 19,
  ALEGEO_ERR_INTERNAL = 100
} alegeo_status;

typedef enum alegeo_verdict {
  ALEGEO_VERDICT_OBSTRUCTED = 0,
  ALEGEO_VERDICT_UNOBSTRUCTED = 1,
  ALEGEO_VERDICT_INCONCLUSIVE = 2
} alegeo_verdict;

typedef struct alegeo_config alegeo_config;
typedef struct alegeo_report alegeo_report;
typedef struct alegeo_model alegeo_model;
typedef struct alegeo_orbifold alegeo_orbifold;
typedef struct alegeo_invariants alegeo_invariants;

ALEGEO_API const char* alegeo_version(void);
/* Message of the most recent failed call on this thread ("" if none). Successful
   calls leave it unchanged. */
ALEGEO_API const char* alegeo_last_error(void);
ALEGEO_API const char* alegeo_status_name(alegeo_status status);
/* Nonzero for bad inputs and unmet hypotheses, zero for numerical failures. */
ALEGEO_API int alegeo_status_is_input_error(alegeo_status status);
/* Frees strings returned through char** out-parameters. */
ALEGEO_API void alegeo_string_free(char* s);

/* Run configuration. Keys are "section.key" as in the INI text. */
ALEGEO_API alegeo_status alegeo_config_new(alegeo_config** out);
ALEGEO_API alegeo_status alegeo_config_parse(const char* ini_text, alegeo_config** out);
ALEGEO_API alegeo_status alegeo_config_merge(alegeo_config* cfg, const char* ini_text);
ALEGEO_API alegeo_status alegeo_config_set(alegeo_config* cfg, const char* key, const char* value);
/* Current value as text; "" for unset optional keys. */
ALEGEO_API alegeo_status alegeo_config_get(const alegeo_config* cfg, const char* key, char** out);
ALEGEO_API alegeo_status alegeo_config_to_ini(const alegeo_config* cfg, char** out);
ALEGEO_API alegeo_status alegeo_config_validate(const alegeo_config* cfg);
ALEGEO_API void alegeo_config_free(alegeo_config* cfg);

/* Validates the config and runs its command. Verification failures still return
   ALEGEO_OK with exit status 1 on the report. */
ALEGEO_API alegeo_status alegeo_run(const alegeo_config* cfg, alegeo_report** out);
ALEGEO_API const char* alegeo_report_json(const alegeo_report* report);
ALEGEO_API const char* alegeo_report_summary(const alegeo_report* report);
ALEGEO_API int alegeo_report_exit_status(const alegeo_report* report);
ALEGEO_API size_t alegeo_report_table_count(const alegeo_report* report);
ALEGEO_API const char* alegeo_report_table_name(const alegeo_report* report, size_t index);
ALEGEO_API const char* alegeo_report_table_csv(const alegeo_report* report, size_t index);
ALEGEO_API void alegeo_report_free(alegeo_report* report);

/* Models. */
ALEGEO_API alegeo_status alegeo_model_eguchi_hanson(double a, alegeo_model** out);
ALEGEO_API alegeo_status alegeo_model_flat_cone(int dim, int group_order, alegeo_model** out);
ALEGEO_API int alegeo_model_dim(const alegeo_model* model);
ALEGEO_API int alegeo_model_group_order(const alegeo_model* model);
/* Largest |Ric| entry over sphere samples at the given radii. */
ALEGEO_API alegeo_status alegeo_model_ricci_residual(const alegeo_model* model, const double* radii,
                                                     size_t n, double* out);
/* Renormalized volume from the Poisson coefficient b, and b itself. */
ALEGEO_API alegeo_status alegeo_model_poisson_volume(const alegeo_model* model, double* volume,
                                                     double* b);
ALEGEO_API void alegeo_model_free(alegeo_model* model);

/* Invariants; radii may be NULL for the default schedule. */
ALEGEO_API alegeo_status alegeo_invariants_compute(const alegeo_model* model, const double* radii,
                                                   size_t n, alegeo_invariants** out);
ALEGEO_API alegeo_status alegeo_invariants_volume(const alegeo_invariants* inv, double* value,
                                                  double* error);
/* Writes the dim^4 components of W_inf, row-major; len must be dim^4. */
ALEGEO_API alegeo_status alegeo_invariants_weyl(const alegeo_invariants* inv, double* out, size_t len);
ALEGEO_API alegeo_status alegeo_invariants_gauge_residual(const alegeo_invariants* inv, double* out);
ALEGEO_API void alegeo_invariants_free(alegeo_invariants* inv);

/* Orbifold data at the singular point; weyl may be NULL for W(0) = 0. */
ALEGEO_API alegeo_status alegeo_orbifold_hyperbolic(int dim, int group_order, alegeo_orbifold** out);
ALEGEO_API alegeo_status alegeo_orbifold_custom(int dim, double mu, const double* weyl, size_t len,
                                                int group_order, alegeo_orbifold** out);
ALEGEO_API void alegeo_orbifold_free(alegeo_orbifold* orb);

/* Obstruction value, its error bar and verdict from the closed form. */
ALEGEO_API alegeo_status alegeo_obstruction_value(const alegeo_orbifold* orb,
                                                  const alegeo_invariants* inv, double* value,
                                                  double* error, alegeo_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif /* ALEGEO_H */
