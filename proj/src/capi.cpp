#include "pir.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "pir/analysis.hpp"
#include "pir/error.hpp"
#include "pir/indices.hpp"
#include "pir/ingest.hpp"
#include "pir/outliers.hpp"
#include "pir/rescale.hpp"
#include "pir/svg.hpp"
#include "pir/weights.hpp"

namespace {

thread_local std::string g_last_error;

pir_status status_of(pir::Code code) {
    switch (code) {
        case pir::Code::InvalidValue: return PIR_ERROR_INVALID_VALUE;
        case pir::Code::InvertedBounds: return PIR_ERROR_INVERTED_BOUNDS;
        case pir::Code::NoData: return PIR_ERROR_NO_DATA;
        case pir::Code::IncompleteContext: return PIR_ERROR_INCOMPLETE_CONTEXT;
        case pir::Code::Schema: return PIR_ERROR_SCHEMA;
        case pir::Code::Row: return PIR_ERROR_ROW;
        case pir::Code::Dataset: return PIR_ERROR_DATASET;
        case pir::Code::Io: return PIR_ERROR_IO;
        case pir::Code::NotFound: return PIR_ERROR_NOT_FOUND;
        case pir::Code::Config: return PIR_ERROR_CONFIG;
    }
    return PIR_ERROR_UNKNOWN;
}

pir_status fail_arg(const char* message) {
    g_last_error = message;
    return PIR_ERROR_ARGUMENT;
}

template <typename Fn>
pir_status wrap(Fn&& fn) {
    try {
        fn();
        return PIR_OK;
    } catch (const pir::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PIR_ERROR_UNKNOWN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PIR_ERROR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return PIR_ERROR_UNKNOWN;
    }
}

bool to_kind(pir_kind in, pir::Kind* out) {
    switch (in) {
        case PIR_KIND_PIR: *out = pir::Kind::PIR; return true;
        case PIR_KIND_RESCALED: *out = pir::Kind::Rescaled; return true;
        case PIR_KIND_REES: *out = pir::Kind::REES; return true;
        case PIR_KIND_POND: *out = pir::Kind::POND; return true;
    }
    return false;
}

bool to_single_scope(pir_scope in, pir::Scope* out) {
    switch (in) {
        case PIR_SCOPE_INDIVIDUAL: *out = pir::Scope::Individual; return true;
        case PIR_SCOPE_JOINT: *out = pir::Scope::Joint; return true;
        case PIR_SCOPE_BOTH: return false;
    }
    return false;
}

std::optional<pir::Phase> to_phase_filter(pir_phase in, bool* valid) {
    *valid = true;
    switch (in) {
        case PIR_PHASE_REGULAR: return pir::Phase::Regular;
        case PIR_PHASE_PLAYOFF: return pir::Phase::Playoff;
        case PIR_PHASE_BOTH: return std::nullopt;
    }
    *valid = false;
    return std::nullopt;
}

pir_phase from_phase(pir::Phase p) {
    return p == pir::Phase::Regular ? PIR_PHASE_REGULAR : PIR_PHASE_PLAYOFF;
}

pir_scope from_scope(pir::Scope s) {
    return s == pir::Scope::Individual ? PIR_SCOPE_INDIVIDUAL : PIR_SCOPE_JOINT;
}

}  // namespace

struct pir_dataset {
    pir::Dataset data;
    std::vector<std::string> players;  // cached for stable pointers
};

struct pir_policy {
    pir::OutlierPolicy policy;
};

struct pir_weights {
    pir::WeightProfile profile;
};

struct pir_series {
    struct Row {
        std::string player;
        std::string season;
        pir::Phase phase = pir::Phase::Regular;
        double value = 0;
        bool excluded = false;
        bool degenerate = false;
    };
    std::vector<Row> rows;
    std::optional<pir::TrajectorySeries> trajectory;
};

struct pir_table {
    pir::SummaryTable table;
};

extern "C" {

const char* pir_version(void) { return "1.0.0"; }

const char* pir_last_error(void) { return g_last_error.c_str(); }

/* ---- datasets ------------------------------------------------------- */

pir_status pir_dataset_load(const char* path, pir_dataset** out) {
    if (!path || !out) return fail_arg("pir_dataset_load: NULL argument");
    return wrap([&] {
        auto ds = std::make_unique<pir_dataset>();
        ds->data = pir::load_dataset(path);
        ds->players = ds->data.players();
        *out = ds.release();
    });
}

pir_status pir_dataset_parse(const char* text, pir_dataset** out) {
    if (!text || !out) return fail_arg("pir_dataset_parse: NULL argument");
    return wrap([&] {
        auto ds = std::make_unique<pir_dataset>();
        ds->data = pir::parse_dataset(text, "<memory>");
        ds->players = ds->data.players();
        *out = ds.release();
    });
}

pir_status pir_dataset_save(const pir_dataset* ds, const char* path) {
    if (!ds || !path) return fail_arg("pir_dataset_save: NULL argument");
    return wrap([&] { pir::save_dataset(ds->data, path); });
}

void pir_dataset_free(pir_dataset* ds) { delete ds; }

size_t pir_dataset_size(const pir_dataset* ds) {
    return ds ? ds->data.records.size() : 0;
}

size_t pir_dataset_player_count(const pir_dataset* ds) {
    return ds ? ds->players.size() : 0;
}

const char* pir_dataset_player(const pir_dataset* ds, size_t index) {
    if (!ds || index >= ds->players.size()) return nullptr;
    return ds->players[index].c_str();
}

const char* pir_dataset_record_player(const pir_dataset* ds, size_t index) {
    if (!ds || index >= ds->data.records.size()) return nullptr;
    return ds->data.records[index].player.c_str();
}

const char* pir_dataset_record_season(const pir_dataset* ds, size_t index) {
    if (!ds || index >= ds->data.records.size()) return nullptr;
    return ds->data.records[index].season.c_str();
}

pir_status pir_dataset_record_phase(const pir_dataset* ds, size_t index,
                                    pir_phase* out) {
    if (!ds || !out || index >= ds->data.records.size()) {
        return fail_arg("pir_dataset_record_phase: bad argument");
    }
    *out = from_phase(ds->data.records[index].phase);
    return PIR_OK;
}

pir_status pir_dataset_record_games(const pir_dataset* ds, size_t index,
                                    int* out) {
    if (!ds || !out || index >= ds->data.records.size()) {
        return fail_arg("pir_dataset_record_games: bad argument");
    }
    *out = ds->data.records[index].games;
    return PIR_OK;
}

pir_status pir_dataset_record_stat(const pir_dataset* ds, size_t index,
                                   pir_stat stat, double* out) {
    if (!ds || !out || index >= ds->data.records.size() || stat < 0 ||
        stat >= pir::kVariableCount) {
        return fail_arg("pir_dataset_record_stat: bad argument");
    }
    *out = pir::stat_variable(ds->data.records[index], static_cast<int>(stat));
    return PIR_OK;
}

/* ---- outlier policies ------------------------------------------------ */

pir_status pir_policy_none(pir_policy** out) {
    if (!out) return fail_arg("pir_policy_none: NULL argument");
    return wrap([&] { *out = new pir_policy{pir::OutlierPolicy::none()}; });
}

pir_status pir_policy_manual(const char* path, pir_policy** out) {
    if (!path || !out) return fail_arg("pir_policy_manual: NULL argument");
    return wrap([&] {
        *out = new pir_policy{
            pir::OutlierPolicy::manual_list(pir::load_exclusions(path))};
    });
}

pir_status pir_policy_iqr(double multiplier, pir_policy** out) {
    if (!out) return fail_arg("pir_policy_iqr: NULL argument");
    return wrap([&] {
        if (!std::isfinite(multiplier) || multiplier <= 0) {
            pir::fail(pir::Code::InvalidValue,
                      "invalid value: multiplier must be > 0");
        }
        *out = new pir_policy{pir::OutlierPolicy::iqr(multiplier)};
    });
}

pir_status pir_policy_set_clamp(pir_policy* policy, int clamp_excluded) {
    if (!policy) return fail_arg("pir_policy_set_clamp: NULL argument");
    policy->policy.clamp_excluded = clamp_excluded != 0;
    return PIR_OK;
}

pir_status pir_policy_validate(const pir_policy* policy, const pir_dataset* ds) {
    if (!policy || !ds) return fail_arg("pir_policy_validate: NULL argument");
    return wrap([&] { pir::apply_policy(ds->data.records, policy->policy); });
}

void pir_policy_free(pir_policy* policy) { delete policy; }

/* ---- weights ---------------------------------------------------------- */

pir_status pir_weights_unit(pir_weights** out) {
    if (!out) return fail_arg("pir_weights_unit: NULL argument");
    return wrap([&] { *out = new pir_weights{pir::WeightProfile::unit()}; });
}

pir_status pir_weights_create(const double values[11], pir_weights** out) {
    if (!values || !out) return fail_arg("pir_weights_create: NULL argument");
    return wrap([&] {
        pir::WeightProfile w;
        for (int i = 0; i < pir::kVariableCount; ++i) w.a[i] = values[i];
        w.validate();
        *out = new pir_weights{w};
    });
}

pir_status pir_weights_load(const char* path, pir_weights** out) {
    if (!path || !out) return fail_arg("pir_weights_load: NULL argument");
    return wrap([&] {
        pir::WeightProfile w;
        std::vector<double> values = pir::load_weight_list(path);
        for (int i = 0; i < pir::kVariableCount; ++i) w.a[i] = values[i];
        w.validate();
        *out = new pir_weights{w};
    });
}

void pir_weights_free(pir_weights* weights) { delete weights; }

/* ---- computations ------------------------------------------------------ */

pir_status pir_compute_values(const pir_dataset* ds, pir_kind kind,
                              pir_scope scope, pir_phase phase,
                              const pir_policy* policy,
                              const pir_weights* weights, pir_series** out) {
    if (!ds || !policy || !out) {
        return fail_arg("pir_compute_values: NULL argument");
    }
    return wrap([&] {
        pir::Kind k;
        pir::Scope sc;
        bool phase_ok = false;
        auto ph = to_phase_filter(phase, &phase_ok);
        if (!to_kind(kind, &k) || !phase_ok) {
            pir::fail(pir::Code::Config, "invalid kind or phase");
        }
        if (!to_single_scope(scope, &sc)) {
            pir::fail(pir::Code::Config,
                      "scope must be individual or joint for per-record values");
        }
        pir::WeightProfile w =
            weights ? weights->profile : pir::WeightProfile::unit();
        auto rows =
            pir::compute_values(ds->data.records, k, sc, ph, policy->policy, w);
        auto series = std::make_unique<pir_series>();
        for (const pir::ValueRow& vr : rows) {
            const pir::StatLine& s = ds->data.records[vr.index];
            series->rows.push_back({s.player, s.season, s.phase, vr.result.value,
                                    vr.result.excluded, vr.result.degenerate});
        }
        *out = series.release();
    });
}

pir_status pir_detect_outliers(const pir_dataset* ds, pir_phase phase,
                               const pir_policy* policy, pir_series** out) {
    if (!ds || !policy || !out) {
        return fail_arg("pir_detect_outliers: NULL argument");
    }
    return wrap([&] {
        bool phase_ok = false;
        auto ph = to_phase_filter(phase, &phase_ok);
        if (!phase_ok) pir::fail(pir::Code::Config, "invalid phase");
        auto series = std::make_unique<pir_series>();
        for (pir::Phase p : {pir::Phase::Regular, pir::Phase::Playoff}) {
            if (ph && *ph != p) continue;
            std::vector<pir::StatLine> sub;
            for (const pir::StatLine& s : ds->data.records) {
                if (s.phase == p) sub.push_back(s);
            }
            if (sub.empty()) continue;
            pir::Partition part =
                pir::apply_policy(sub, policy->policy.restricted_to_phase(p));
            for (std::size_t i : part.excluded) {
                const pir::StatLine& s = sub[i];
                series->rows.push_back(
                    {s.player, s.season, s.phase, pir::compute_pir(s), true, false});
            }
        }
        *out = series.release();
    });
}

pir_status pir_trajectory(const pir_dataset* ds, const char* player,
                          pir_kind kind, pir_scope scope, pir_phase phase,
                          const pir_policy* policy, const pir_weights* weights,
                          pir_series** out) {
    if (!ds || !player || !policy || !out) {
        return fail_arg("pir_trajectory: NULL argument");
    }
    return wrap([&] {
        pir::Kind k;
        pir::Scope sc;
        if (!to_kind(kind, &k)) pir::fail(pir::Code::Config, "invalid kind");
        if (!to_single_scope(scope, &sc)) {
            pir::fail(pir::Code::Config,
                      "scope must be individual or joint for a trajectory");
        }
        bool phase_ok = false;
        auto ph = to_phase_filter(phase, &phase_ok);
        if (!phase_ok || !ph) {
            pir::fail(pir::Code::Config, "trajectory requires a single phase");
        }
        pir::WeightProfile w =
            weights ? weights->profile : pir::WeightProfile::unit();
        auto series = std::make_unique<pir_series>();
        series->trajectory = pir::trajectory(ds->data.records, player, k, sc,
                                             *ph, policy->policy, w);
        for (const pir::TrajectoryPoint& pt : series->trajectory->points) {
            series->rows.push_back({series->trajectory->player, pt.season,
                                    series->trajectory->phase, pt.value,
                                    pt.excluded, pt.degenerate});
        }
        *out = series.release();
    });
}

pir_status pir_mean_point_weight(const pir_dataset* ds, const char* player,
                                 pir_scope scope, pir_phase phase,
                                 const pir_policy* policy, double* out) {
    if (!ds || !player || !policy || !out) {
        return fail_arg("pir_mean_point_weight: NULL argument");
    }
    return wrap([&] {
        pir::Scope sc;
        if (!to_single_scope(scope, &sc)) {
            pir::fail(pir::Code::Config, "scope must be individual or joint");
        }
        bool phase_ok = false;
        auto ph = to_phase_filter(phase, &phase_ok);
        if (!phase_ok || !ph) {
            pir::fail(pir::Code::Config, "a single phase is required");
        }
        *out = pir::player_mean_point_weight(ds->data.records, player, sc, *ph,
                                             policy->policy);
    });
}

/* ---- series ------------------------------------------------------------ */

size_t pir_series_size(const pir_series* series) {
    return series ? series->rows.size() : 0;
}

const char* pir_series_player(const pir_series* series, size_t index) {
    if (!series || index >= series->rows.size()) return nullptr;
    return series->rows[index].player.c_str();
}

const char* pir_series_season(const pir_series* series, size_t index) {
    if (!series || index >= series->rows.size()) return nullptr;
    return series->rows[index].season.c_str();
}

pir_status pir_series_phase(const pir_series* series, size_t index,
                            pir_phase* out) {
    if (!series || !out || index >= series->rows.size()) {
        return fail_arg("pir_series_phase: bad argument");
    }
    *out = from_phase(series->rows[index].phase);
    return PIR_OK;
}

pir_status pir_series_value(const pir_series* series, size_t index, double* out) {
    if (!series || !out || index >= series->rows.size()) {
        return fail_arg("pir_series_value: bad argument");
    }
    *out = series->rows[index].value;
    return PIR_OK;
}

int pir_series_excluded(const pir_series* series, size_t index) {
    if (!series || index >= series->rows.size()) return -1;
    return series->rows[index].excluded ? 1 : 0;
}

int pir_series_degenerate(const pir_series* series, size_t index) {
    if (!series || index >= series->rows.size()) return -1;
    return series->rows[index].degenerate ? 1 : 0;
}

void pir_series_free(pir_series* series) { delete series; }

pir_status pir_series_render_svg(const pir_series* series, char** out) {
    if (!series || !out) return fail_arg("pir_series_render_svg: NULL argument");
    return wrap([&] {
        if (!series->trajectory) {
            pir::fail(pir::Code::Config,
                      "only trajectory series can be rendered");
        }
        std::string svg = pir::render_trajectory_svg(*series->trajectory);
        char* buffer = new char[svg.size() + 1];
        std::memcpy(buffer, svg.data(), svg.size() + 1);
        *out = buffer;
    });
}

void pir_string_free(char* text) { delete[] text; }

/* ---- summaries ---------------------------------------------------------- */

pir_status pir_summarize(const pir_dataset* ds, pir_kind kind, pir_scope scope,
                         pir_phase phase, const pir_policy* policy,
                         const pir_weights* weights, pir_table** out) {
    if (!ds || !policy || !out) return fail_arg("pir_summarize: NULL argument");
    return wrap([&] {
        pir::Kind k;
        if (!to_kind(kind, &k)) pir::fail(pir::Code::Config, "invalid kind");
        std::optional<pir::Scope> sc;
        if (scope != PIR_SCOPE_BOTH) {
            pir::Scope single;
            if (!to_single_scope(scope, &single)) {
                pir::fail(pir::Code::Config, "invalid scope");
            }
            sc = single;
        }
        bool phase_ok = false;
        auto ph = to_phase_filter(phase, &phase_ok);
        if (!phase_ok) pir::fail(pir::Code::Config, "invalid phase");

        pir::WeightProfile w =
            weights ? weights->profile : pir::WeightProfile::unit();
        pir::SummaryTable table =
            pir::summarize(ds->data.records, k, sc, policy->policy, w);
        if (ph) {
            std::erase_if(table.rows, [&](const pir::SummaryRow& row) {
                return row.phase != *ph;
            });
            if (table.rows.empty()) {
                pir::fail(pir::Code::NoData, "no data in scope");
            }
        }
        *out = new pir_table{std::move(table)};
    });
}

size_t pir_table_row_count(const pir_table* table) {
    return table ? table->table.rows.size() : 0;
}

pir_status pir_table_row_phase(const pir_table* table, size_t row,
                               pir_phase* out) {
    if (!table || !out || row >= table->table.rows.size()) {
        return fail_arg("pir_table_row_phase: bad argument");
    }
    *out = from_phase(table->table.rows[row].phase);
    return PIR_OK;
}

pir_status pir_table_row_scope(const pir_table* table, size_t row,
                               pir_scope* out) {
    if (!table || !out || row >= table->table.rows.size()) {
        return fail_arg("pir_table_row_scope: bad argument");
    }
    *out = from_scope(table->table.rows[row].scope);
    return PIR_OK;
}

size_t pir_table_player_count(const pir_table* table) {
    return table ? table->table.players.size() : 0;
}

const char* pir_table_player(const pir_table* table, size_t index) {
    if (!table || index >= table->table.players.size()) return nullptr;
    return table->table.players[index].c_str();
}

pir_status pir_table_cell(const pir_table* table, size_t row, size_t player,
                          double* mean_all, double* mean_excluding) {
    if (!table || !mean_all || !mean_excluding ||
        row >= table->table.rows.size() ||
        player >= table->table.players.size()) {
        return fail_arg("pir_table_cell: bad argument");
    }
    const pir::SummaryCell& cell = table->table.rows[row].cells[player];
    *mean_all = cell.mean_all;
    *mean_excluding = cell.mean_excluding;
    return PIR_OK;
}

void pir_table_free(pir_table* table) { delete table; }

}  // extern "C"
