/* bws - one-dimensional Boussinesq wave tank with a bottom-sliding solid.
 *
 * C interface to the simulator: opaque handles, integer status codes,
 * JSON in and out. Every object returned through an out-parameter is
 * owned by the caller and released with the matching *_free function;
 * strings are released with bws_string_free.
 *
 * Thread safety: handles are not shared between threads; distinct
 * handles may be used concurrently. bws_last_error is thread local.
 */
#ifndef BWS_H
#define BWS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bws_status {
    BWS_OK = 0,
    BWS_ERR_INVALID_ARGUMENT = 1, /* bad parameter or configuration value */
    BWS_ERR_PARSE = 2,            /* malformed JSON configuration */
    BWS_ERR_CFL = 3,              /* stability guard refused the step sizes */
    BWS_ERR_IO = 4,               /* file system failure */
    BWS_ERR_INTERNAL = 5          /* solver failure */
} bws_status;

typedef struct bws_config bws_config;
typedef struct bws_result bws_result;

/* Version string of the library. */
const char* bws_version(void);

/* Human-readable description of the most recent failure on this thread. */
const char* bws_last_error(void);

/* Frees a string returned by this API. NULL is allowed. */
void bws_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

bws_status bws_config_from_json(const char* json_text, bws_config** out);
bws_status bws_config_from_file(const char* path, bws_config** out);
void bws_config_free(bws_config* cfg);

/* Full effective configuration (defaults applied) as JSON. */
bws_status bws_config_to_json(const bws_config* cfg, char** out_json);

/* Command line overrides. */
bws_status bws_config_set_override_cfl(bws_config* cfg, int enabled);
bws_status bws_config_set_snapshot_stride(bws_config* cfg, int stride);

/* ---- single scenario --------------------------------------------------- */

/* Runs the scenario to t_end or an earlier halt. Halt conditions (wave
 * breaking, loss of positive fluid height, the solid reaching a wall,
 * contact loss) are reported in the summary, not as errors. */
bws_status bws_run_scenario(const bws_config* cfg, bws_result** out);
void bws_result_free(bws_result* result);

/* Summary JSON: configuration echo, derived parameters, diagnostics. */
bws_status bws_result_summary_json(const bws_result* result, char** out_json);

/* Writes snapshots.csv, solid.csv, energy.csv and summary.json to dir. */
bws_status bws_result_write_outputs(const bws_result* result, const char* dir);

/* Scalar diagnostics. */
bws_status bws_result_amplitude_ratio(const bws_result* result, double* out);
bws_status bws_result_max_abs_x(const bws_result* result, double* out);
bws_status bws_result_final_x(const bws_result* result, double* out);
/* Name of the halt condition ("none" for a completed run); static string. */
const char* bws_result_halt_reason(const bws_result* result);

/* ---- studies ----------------------------------------------------------- */

/* axis: "space" | "time"; mode: "exact" | "relative".
 * Writes convergence.csv/.json into dir when dir is non-NULL; the study
 * summary JSON is returned through out_json when non-NULL. */
bws_status bws_run_convergence(const bws_config* cfg, const char* axis, const char* mode,
                               const char* dir, char** out_json);

bws_status bws_run_amplitude_study(const bws_config* cfg, const char* dir, char** out_json);

bws_status bws_run_breaking_study(const bws_config* cfg, const char* dir, char** out_json);

/* mode: "sweep" | "single" | "train" | "ablation". */
bws_status bws_run_displacement_study(const bws_config* cfg, const char* mode, const char* dir,
                                      char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BWS_H */
