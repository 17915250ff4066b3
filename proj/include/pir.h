/* C interface to the basketball performance index library.
 *
 * All functions that can fail return a pir_status; PIR_OK means success and
 * anything else leaves a human-readable message in pir_last_error() for the
 * calling thread. Out-parameters are written only on success. Every handle
 * returned through an out-parameter is owned by the caller and released
 * with the matching *_free function; freeing NULL is a no-op.
 */
#ifndef PIR_H
#define PIR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PIR_API
#if defined(_WIN32)
#define PIR_API __declspec(dllexport)
#else
#define PIR_API __attribute__((visibility("default")))
#endif
#endif

typedef enum pir_status {
    PIR_OK = 0,
    PIR_ERROR_INVALID_VALUE = 1,
    PIR_ERROR_INVERTED_BOUNDS = 2,
    PIR_ERROR_NO_DATA = 3,
    PIR_ERROR_INCOMPLETE_CONTEXT = 4,
    PIR_ERROR_SCHEMA = 5,
    PIR_ERROR_ROW = 6,
    PIR_ERROR_DATASET = 7,
    PIR_ERROR_IO = 8,
    PIR_ERROR_NOT_FOUND = 9,
    PIR_ERROR_CONFIG = 10,
    PIR_ERROR_ARGUMENT = 11, /* NULL handle or out-parameter */
    PIR_ERROR_UNKNOWN = 12
} pir_status;

typedef enum pir_kind {
    PIR_KIND_PIR = 0,      /* classic additive index */
    PIR_KIND_RESCALED = 1, /* whole index mapped onto [0,1] */
    PIR_KIND_REES = 2,     /* weighted sum of rescaled variables */
    PIR_KIND_POND = 3      /* raw variables weighted by their rescaled values */
} pir_kind;

typedef enum pir_scope {
    PIR_SCOPE_INDIVIDUAL = 0, /* bounds from each player's own records */
    PIR_SCOPE_JOINT = 1,      /* bounds from all players together */
    PIR_SCOPE_BOTH = 2        /* summaries only: one row per scope */
} pir_scope;

typedef enum pir_phase {
    PIR_PHASE_REGULAR = 0,
    PIR_PHASE_PLAYOFF = 1,
    PIR_PHASE_BOTH = 2
} pir_phase;

/* The 11 index variables in weight order. */
typedef enum pir_stat {
    PIR_STAT_POINTS = 0,
    PIR_STAT_REBOUNDS = 1,
    PIR_STAT_ASSISTS = 2,
    PIR_STAT_STEALS = 3,
    PIR_STAT_BLOCKS_MADE = 4,
    PIR_STAT_FOULS_DRAWN = 5,
    PIR_STAT_FG_MISSED = 6,
    PIR_STAT_FT_MISSED = 7,
    PIR_STAT_TURNOVERS = 8,
    PIR_STAT_BLOCKS_RECEIVED = 9,
    PIR_STAT_FOULS_COMMITTED = 10
} pir_stat;

typedef struct pir_dataset pir_dataset;
typedef struct pir_policy pir_policy;
typedef struct pir_weights pir_weights;
typedef struct pir_series pir_series;
typedef struct pir_table pir_table;

/* Library version as "major.minor.patch". */
PIR_API const char* pir_version(void);

/* Message for the most recent failure on this thread; never NULL. */
PIR_API const char* pir_last_error(void);

/* ---- datasets ------------------------------------------------------- */

/* Loads a comma-separated dataset with a header row. Required columns:
 * player, season, phase, games, pts, trb, ast, stl, blk, tov, pf, fga, fg,
 * fta, ft. Optional: fouls_drawn, blocks_received (default 0). Misses are
 * derived as attempts minus makes. */
PIR_API pir_status pir_dataset_load(const char* path, pir_dataset** out);
PIR_API pir_status pir_dataset_parse(const char* text, pir_dataset** out);
PIR_API pir_status pir_dataset_save(const pir_dataset* ds, const char* path);
PIR_API void pir_dataset_free(pir_dataset* ds);

PIR_API size_t pir_dataset_size(const pir_dataset* ds);
PIR_API size_t pir_dataset_player_count(const pir_dataset* ds);
/* Distinct player identifier in first-appearance order; NULL when out of
 * range. Pointers stay valid until the dataset is freed. */
PIR_API const char* pir_dataset_player(const pir_dataset* ds, size_t index);

PIR_API const char* pir_dataset_record_player(const pir_dataset* ds, size_t index);
PIR_API const char* pir_dataset_record_season(const pir_dataset* ds, size_t index);
PIR_API pir_status pir_dataset_record_phase(const pir_dataset* ds, size_t index,
                                            pir_phase* out);
PIR_API pir_status pir_dataset_record_games(const pir_dataset* ds, size_t index,
                                            int* out);
PIR_API pir_status pir_dataset_record_stat(const pir_dataset* ds, size_t index,
                                           pir_stat stat, double* out);

/* ---- outlier policies ------------------------------------------------ */

PIR_API pir_status pir_policy_none(pir_policy** out);
/* Manual exclusion list from a CSV with columns player, season, phase. */
PIR_API pir_status pir_policy_manual(const char* path, pir_policy** out);
/* Box-whisker fences at multiplier * IQR, screened per player and phase on
 * the classic index. */
PIR_API pir_status pir_policy_iqr(double multiplier, pir_policy** out);
/* Whether excluded records are still rescaled (clamped into bounds) or
 * dropped from outputs entirely. Default: clamped. */
PIR_API pir_status pir_policy_set_clamp(pir_policy* policy, int clamp_excluded);
/* Checks that every manual entry matches a record of the dataset. */
PIR_API pir_status pir_policy_validate(const pir_policy* policy,
                                       const pir_dataset* ds);
PIR_API void pir_policy_free(pir_policy* policy);

/* ---- weights ---------------------------------------------------------- */

PIR_API pir_status pir_weights_unit(pir_weights** out);
/* Eleven nonnegative values in variable order. */
PIR_API pir_status pir_weights_create(const double values[11], pir_weights** out);
/* Text file of 11 nonnegative reals separated by commas or whitespace. */
PIR_API pir_status pir_weights_load(const char* path, pir_weights** out);
PIR_API void pir_weights_free(pir_weights* weights);

/* ---- computations ------------------------------------------------------ */

/* One value per record in dataset order. Bounds are always computed within
 * a phase; PIR_PHASE_BOTH covers each phase with its own context. weights
 * may be NULL for unit weights and only affect PIR_KIND_REES. scope must
 * not be PIR_SCOPE_BOTH. */
PIR_API pir_status pir_compute_values(const pir_dataset* ds, pir_kind kind,
                                      pir_scope scope, pir_phase phase,
                                      const pir_policy* policy,
                                      const pir_weights* weights,
                                      pir_series** out);

/* The records the policy excludes, with their classic index values. */
PIR_API pir_status pir_detect_outliers(const pir_dataset* ds, pir_phase phase,
                                       const pir_policy* policy,
                                       pir_series** out);

/* One player's season-ordered index values for a single phase. */
PIR_API pir_status pir_trajectory(const pir_dataset* ds, const char* player,
                                  pir_kind kind, pir_scope scope,
                                  pir_phase phase, const pir_policy* policy,
                                  const pir_weights* weights, pir_series** out);

/* Mean rescaled points over the player's kept records for one phase. */
PIR_API pir_status pir_mean_point_weight(const pir_dataset* ds,
                                         const char* player, pir_scope scope,
                                         pir_phase phase,
                                         const pir_policy* policy, double* out);

/* ---- series ------------------------------------------------------------ */

PIR_API size_t pir_series_size(const pir_series* series);
PIR_API const char* pir_series_player(const pir_series* series, size_t index);
PIR_API const char* pir_series_season(const pir_series* series, size_t index);
PIR_API pir_status pir_series_phase(const pir_series* series, size_t index,
                                    pir_phase* out);
PIR_API pir_status pir_series_value(const pir_series* series, size_t index,
                                    double* out);
/* 1 when the record was excluded as anomalous, else 0; negative on error. */
PIR_API int pir_series_excluded(const pir_series* series, size_t index);
/* 1 when a collapsed bounds entry fed the value, else 0; negative on error. */
PIR_API int pir_series_degenerate(const pir_series* series, size_t index);
PIR_API void pir_series_free(pir_series* series);

/* Renders a trajectory series (from pir_trajectory) as a self-contained SVG
 * line chart, byte-identical for identical input. The string is released
 * with pir_string_free. */
PIR_API pir_status pir_series_render_svg(const pir_series* series, char** out);
PIR_API void pir_string_free(char* text);

/* ---- summaries ---------------------------------------------------------- */

/* Per-player means for every phase present: one row per (phase, scope),
 * each cell holding the mean over all records next to the mean over
 * exclusion-filtered records. phase/scope narrow the rows; PIR_*_BOTH keeps
 * every row. */
PIR_API pir_status pir_summarize(const pir_dataset* ds, pir_kind kind,
                                 pir_scope scope, pir_phase phase,
                                 const pir_policy* policy,
                                 const pir_weights* weights, pir_table** out);

PIR_API size_t pir_table_row_count(const pir_table* table);
PIR_API pir_status pir_table_row_phase(const pir_table* table, size_t row,
                                       pir_phase* out);
PIR_API pir_status pir_table_row_scope(const pir_table* table, size_t row,
                                       pir_scope* out);
PIR_API size_t pir_table_player_count(const pir_table* table);
PIR_API const char* pir_table_player(const pir_table* table, size_t index);
/* mean_all: all records under unfiltered bounds. mean_excluding: kept
 * records under post-exclusion bounds. NaN when the player has no records
 * in the row's phase. */
PIR_API pir_status pir_table_cell(const pir_table* table, size_t row,
                                  size_t player, double* mean_all,
                                  double* mean_excluding);
PIR_API void pir_table_free(pir_table* table);

#ifdef __cplusplus
}
#endif

#endif /* PIR_H */
