/* attentive — C API for the attentive-robot simulation library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an atn_status; on failure a human-readable
 * message is available from atn_last_error() (thread-local).
 */
#ifndef ATTENTIVE_ATTENTIVE_H
#define ATTENTIVE_ATTENTIVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ATN_API __declspec(dllexport)
#else
#define ATN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define ATN_SECTOR_COUNT 8
#define ATN_BEAM_COUNT 180

typedef enum atn_status {
  ATN_OK = 0,
  ATN_ERROR_INVALID_ARGUMENT = 1,
  ATN_ERROR_PARSE = 2,
  ATN_ERROR_VALIDATION = 3,
  ATN_ERROR_IO = 4,
  ATN_ERROR_UNKNOWN_PRESET = 5,
} atn_status;

typedef struct atn_scenario atn_scenario;
typedef struct atn_trace atn_trace;

/* Per-sector series recorded at every tick. */
typedef enum atn_series {
  ATN_SERIES_COMBINED = 0,   /* combined feature map, in [0,1] */
  ATN_SERIES_MODULATION = 1, /* attentional modulation, in [-1,1] */
  ATN_SERIES_SALIENCY = 2,   /* saliency map, >= 0 */
} atn_series;

typedef struct atn_winner {
  double time_s;
  int sector;      /* 0..7 */
  double saliency; /* value at selection time */
  int top_down;    /* 1 if the winning evidence was goal-driven */
} atn_winner;

ATN_API const char* atn_version(void);

/* Message for the most recent failure on this thread. Never NULL. */
ATN_API const char* atn_last_error(void);

/* ---- scenarios ---- */

ATN_API size_t atn_preset_count(void);
ATN_API const char* atn_preset_name(size_t index); /* NULL if out of range */

ATN_API atn_status atn_scenario_from_preset(const char* name, atn_scenario** out);
ATN_API atn_status atn_scenario_load_file(const char* path, atn_scenario** out);
ATN_API atn_status atn_scenario_load_string(const char* json_text, atn_scenario** out);
ATN_API void atn_scenario_free(atn_scenario* scenario);

ATN_API atn_status atn_scenario_set_seed(atn_scenario* scenario, uint64_t seed);
ATN_API atn_status atn_scenario_set_noise_enabled(atn_scenario* scenario, int enabled);
ATN_API atn_status atn_scenario_set_wta_threshold(atn_scenario* scenario, double threshold);

/* ATN_OK, or ATN_ERROR_VALIDATION with every violation listed in atn_last_error(). */
ATN_API atn_status atn_scenario_validate(const atn_scenario* scenario);

/* ---- runs ---- */

ATN_API atn_status atn_run(const atn_scenario* scenario, atn_trace** out);
ATN_API void atn_trace_free(atn_trace* trace);

ATN_API size_t atn_trace_tick_count(const atn_trace* trace);
ATN_API double atn_trace_time_at(const atn_trace* trace, size_t tick);
ATN_API atn_status atn_trace_sector_values(const atn_trace* trace, atn_series series,
                                           size_t tick, double out[ATN_SECTOR_COUNT]);

ATN_API size_t atn_trace_winner_count(const atn_trace* trace);
ATN_API atn_status atn_trace_get_winner(const atn_trace* trace, size_t index, atn_winner* out);

/* Writes the CSV trace files (observations, feature maps, combined,
 * attentional, saliency, winners, long-format plot data) into out_dir,
 * creating it if needed. */
ATN_API atn_status atn_trace_export_csv(const atn_trace* trace, const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ATTENTIVE_ATTENTIVE_H */
