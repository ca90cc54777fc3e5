/* Copyright 2026 The smqc Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of libsmqc. Objects are opaque handles owned by the caller
 * and released with the matching *_free function. Every call that can fail
 * returns an smqc_status; the message of the last failure on the calling
 * thread is available from smqc_last_error().
 */
#ifndef SMQC_SMQC_H_
#define SMQC_SMQC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SMQC_API __declspec(dllexport)
#else
#define SMQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smqc_status {
  SMQC_OK = 0,
  SMQC_ERR_INTERNAL = 1,
  SMQC_ERR_USAGE = 2,      /* invalid argument, config or domain error */
  SMQC_ERR_IO = 3,
  SMQC_ERR_VALIDATION = 4, /* corrupt or tampered file */
  SMQC_ERR_NONCONVERGENCE = 5
} smqc_status;

typedef struct smqc_config smqc_config;
typedef struct smqc_label smqc_label;

typedef void (*smqc_progress_fn)(size_t done, size_t total, void* user);

#define SMQC_TEXT_CAP 16

SMQC_API const char* smqc_version(void);
/* Message of the last failed call on this thread; "" when none. */
SMQC_API const char* smqc_last_error(void);
SMQC_API void smqc_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

SMQC_API smqc_status smqc_config_default(smqc_config** out);
SMQC_API smqc_status smqc_config_load(const char* path, smqc_config** out);
SMQC_API smqc_status smqc_config_parse(const char* text, smqc_config** out);
/* Sets "section.key" from a value literal in config syntax. */
SMQC_API smqc_status smqc_config_set(smqc_config* config, const char* key,
                                     const char* value);
/* Commented default configuration; release with smqc_string_free. */
SMQC_API smqc_status smqc_config_default_text(char** out);
SMQC_API void smqc_config_free(smqc_config* config);

/* ---- labels ----------------------------------------------------------- */

typedef struct smqc_label_info {
  char glyph[SMQC_TEXT_CAP];
  int read_count;
  int reusable; /* 1 for the quench-inhibited stack */
  uint64_t mask_area;
  uint64_t molecules;
  uint64_t molecules_alive;
  uint64_t interference;
  double illumination_time;
  uint64_t seed;
} smqc_label_info;

SMQC_API smqc_status smqc_forge(const smqc_config* config, const char* text,
                                smqc_label** out);
SMQC_API smqc_status smqc_label_load(const char* path, smqc_label** out);
SMQC_API smqc_status smqc_label_save(const smqc_label* label, const char* path);
SMQC_API smqc_status smqc_label_info_get(const smqc_label* label,
                                         smqc_label_info* out);
SMQC_API void smqc_label_free(smqc_label* label);

/* ---- reading ---------------------------------------------------------- */

/* Output paths; NULL skips the file. */
typedef struct smqc_read_outputs {
  const char* time_pgm;
  const char* freq_pgm;
  const char* raw_csv;
  const char* photon_dump;
} smqc_read_outputs;

typedef struct smqc_decode {
  int no_signal;
  char label[SMQC_TEXT_CAP];
  double score;
  char runner_up[SMQC_TEXT_CAP];
  double runner_up_score;
} smqc_decode;

typedef struct smqc_read_report {
  int read_index;
  uint64_t molecules_at_start;
  uint64_t molecules_after;
  uint64_t signal_photons;
  uint64_t interference_photons;
  uint64_t dark_photons;
  double illumination_at_start;
  smqc_decode frequency;
  smqc_decode time;
  double contrast_frequency;
  double contrast_time;
} smqc_read_report;

/* One read cycle; bleaches and advances `label` in place. */
SMQC_API smqc_status smqc_read(const smqc_config* config, smqc_label* label,
                               const smqc_read_outputs* outputs,
                               smqc_read_report* report);

typedef struct smqc_spectrum_report {
  uint64_t molecule_photons;
  uint64_t background_photons;
  double molecule_peak_hz;
  double background_peak_hz;
  double molecule_at_mod;   /* magnitude at the grid point nearest f_mod */
  double background_at_mod;
} smqc_spectrum_report;

/* Non-destructive probe; writes frequency_hz,magnitude,normalized CSVs. */
SMQC_API smqc_status smqc_spectrum(const smqc_config* config,
                                   const smqc_label* label,
                                   const char* molecule_csv,
                                   const char* background_csv,
                                   smqc_spectrum_report* report);

/* ---- experiments ------------------------------------------------------ */

typedef struct smqc_sweep_row {
  int mean_n;
  uint64_t trials;
  uint64_t correct;
  double accuracy;
  double ci_low;
  double ci_high;
} smqc_sweep_row;

/* Runs the configured sweep. Writes `out_csv` when non-NULL and copies up
 * to `capacity` rows into `rows`; `row_count` receives the full count. */
SMQC_API smqc_status smqc_sweep(const smqc_config* config, const char* out_csv,
                                smqc_sweep_row* rows, size_t capacity,
                                size_t* row_count, smqc_progress_fn progress,
                                void* user);

typedef struct smqc_fit_result {
  double beta;
  double k_dis;
  double c;
  double alpha_p;
  int c_fixed;
  int alpha_p_fixed;
  double residual_r2;
} smqc_fit_result;

/* Fits the accuracy model to a sweep CSV (t = 0 for every row). */
SMQC_API smqc_status smqc_fit(const smqc_config* config, const char* sweep_csv,
                              const char* out_json, int free_c,
                              smqc_fit_result* out);

SMQC_API smqc_status smqc_export_dataset(const smqc_config* config, size_t count,
                                         const char* out_dir, int include_time,
                                         smqc_progress_fn progress, void* user);

/* ---- physics ---------------------------------------------------------- */

SMQC_API double smqc_relative_phase(double t, double mod_frequency);
SMQC_API smqc_status smqc_excited_population(double theta, double delta_phi,
                                             double visibility, double* out);
SMQC_API smqc_status smqc_excited_population_general(double theta1, double theta2,
                                                     double delta_phi, double* out);
SMQC_API smqc_status smqc_visibility(double delta_t, double dephasing_time,
                                     double* out);
/* geometry: 0 single axis, 1 isotropic three axes. */
SMQC_API smqc_status smqc_dephasing_time(int geometry, double noise_density,
                                         double* out);
SMQC_API double smqc_dft_magnitude(const double* times, size_t n, double omega);
SMQC_API smqc_status smqc_estimate_visibility(double magnitude, double photons,
                                              double modulation_periods,
                                              double* out, int* clamped);

#ifdef __cplusplus
}
#endif

#endif /* SMQC_SMQC_H_ */
