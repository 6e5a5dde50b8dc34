/* C API for the fogcell library: fog-cell vehicular network delay and
 * throughput experiments behind opaque handles and integer status codes.
 *
 * Typical use:
 *   fc_config* cfg = fc_config_new();
 *   fc_config_load_file(cfg, "run.cfg");
 *   fc_config_set(cfg, "seed", "7");
 *   fc_status rc = fc_run_delay_sweep(cfg, "sweep.csv");
 *   if (rc != FC_OK) fprintf(stderr, "%s\n", fc_last_error());
 *   fc_config_free(cfg);
 *
 * All functions are deterministic for a given config. Error messages are
 * stored per thread and remain valid until the next failing call on the
 * same thread.
 */
#ifndef FOGCELL_H
#define FOGCELL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed config */
  FC_ERR_MODEL = 2,            /* model failure, e.g. nothing reachable */
  FC_ERR_IO = 3                /* file open/write failure */
} fc_status;

typedef struct fc_config fc_config;

const char* fc_version(void);
const char* fc_last_error(void);

/* Config lifecycle. fc_config_new starts from built-in defaults. */
fc_config* fc_config_new(void);
void fc_config_free(fc_config* cfg);
fc_status fc_config_load_file(fc_config* cfg, const char* path);
fc_status fc_config_set(fc_config* cfg, const char* key, const char* value);
/* Returns NULL for unknown keys. The pointer stays valid until the next
 * call that mutates or queries this config. */
const char* fc_config_get(fc_config* cfg, const char* key);

/* Experiment commands; each writes its deterministic output file(s). */
fc_status fc_run_delay_sweep(const fc_config* cfg, const char* out_csv);
fc_status fc_run_throughput(const fc_config* cfg, const char* out_csv);
fc_status fc_run_fogsim(const fc_config* cfg, const char* events_csv,
                        const char* summary_path);
fc_status fc_run_calibrate(const fc_config* cfg, const char* report_path,
                           const char* fragment_path);

/* Point queries against the configured model. */
fc_status fc_p_hop(const fc_config* cfg, double delta_m, double* p_out);
fc_status fc_expected_delay(const fc_config* cfg, double la_m, double rho,
                            double* delay_s_out, int* reachable_out,
                            int* hops_out);

#ifdef __cplusplus
}
#endif

#endif /* FOGCELL_H */
