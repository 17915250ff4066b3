// Command-line front end for the performance index library. All domain work
// goes through the C API in pir.h; this file only parses flags, formats
// output, and reports errors. Output is fully buffered and written in one
// piece so failures never leave partial results on stdout.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pir.h"

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(pir_status status) {
    if (status != PIR_OK) throw CliError(pir_last_error());
}

using dataset_ptr = std::unique_ptr<pir_dataset, void (*)(pir_dataset*)>;
using policy_ptr = std::unique_ptr<pir_policy, void (*)(pir_policy*)>;
using weights_ptr = std::unique_ptr<pir_weights, void (*)(pir_weights*)>;
using series_ptr = std::unique_ptr<pir_series, void (*)(pir_series*)>;
using table_ptr = std::unique_ptr<pir_table, void (*)(pir_table*)>;

struct RunConfig {
    std::string dataset;
    std::string phase = "both";
    std::string scope = "joint";
    std::string method = "none";
    std::string exclusions;
    double multiplier = 1.5;
    bool drop_excluded = false;
    std::string weights_inline;
    std::string weights_file;
    std::string format = "table";
    std::string kind = "rescaled-pir";
    std::string player;
    std::string plot;
};

pir_phase phase_of(const std::string& s) {
    if (s == "regular") return PIR_PHASE_REGULAR;
    if (s == "playoff") return PIR_PHASE_PLAYOFF;
    return PIR_PHASE_BOTH;
}

pir_scope scope_of(const std::string& s) {
    if (s == "individual") return PIR_SCOPE_INDIVIDUAL;
    if (s == "joint") return PIR_SCOPE_JOINT;
    return PIR_SCOPE_BOTH;
}

pir_kind kind_of(const std::string& s) {
    if (s == "pir") return PIR_KIND_PIR;
    if (s == "rees") return PIR_KIND_REES;
    if (s == "pond") return PIR_KIND_POND;
    return PIR_KIND_RESCALED;
}

const char* phase_label(pir_phase p) {
    return p == PIR_PHASE_REGULAR ? "regular"
         : p == PIR_PHASE_PLAYOFF ? "playoff"
                                  : "both";
}

const char* scope_label(pir_scope s) {
    return s == PIR_SCOPE_INDIVIDUAL ? "individual"
         : s == PIR_SCOPE_JOINT      ? "joint"
                                     : "both";
}

dataset_ptr open_dataset(const RunConfig& cfg) {
    pir_dataset* ds = nullptr;
    check(pir_dataset_load(cfg.dataset.c_str(), &ds));
    return {ds, pir_dataset_free};
}

policy_ptr make_policy(const RunConfig& cfg) {
    std::string method = cfg.method;
    if (method == "none" && !cfg.exclusions.empty()) method = "manual";
    pir_policy* p = nullptr;
    if (method == "manual") {
        if (cfg.exclusions.empty()) {
            throw CliError("--method manual requires --exclusions");
        }
        check(pir_policy_manual(cfg.exclusions.c_str(), &p));
    } else if (method == "iqr") {
        if (!cfg.exclusions.empty()) {
            throw CliError("--exclusions only applies to the manual method");
        }
        check(pir_policy_iqr(cfg.multiplier, &p));
    } else {
        check(pir_policy_none(&p));
    }
    policy_ptr policy{p, pir_policy_free};
    check(pir_policy_set_clamp(policy.get(), cfg.drop_excluded ? 0 : 1));
    return policy;
}

weights_ptr make_weights(const RunConfig& cfg) {
    pir_weights* w = nullptr;
    if (!cfg.weights_inline.empty()) {
        std::vector<double> values;
        std::string token;
        std::string text = cfg.weights_inline + ",";
        for (char c : text) {
            if (c == ',') {
                if (token.empty()) continue;
                double v = 0;
                auto [ptr, ec] =
                    std::from_chars(token.data(), token.data() + token.size(), v);
                if (ec != std::errc() || ptr != token.data() + token.size()) {
                    throw CliError("invalid value: weight \"" + token + "\"");
                }
                values.push_back(v);
                token.clear();
            } else if (c != ' ') {
                token += c;
            }
        }
        if (values.size() != 11) {
            throw CliError("expected 11 weights, got " +
                           std::to_string(values.size()));
        }
        check(pir_weights_create(values.data(), &w));
    } else if (!cfg.weights_file.empty()) {
        check(pir_weights_load(cfg.weights_file.c_str(), &w));
    } else {
        check(pir_weights_unit(&w));
    }
    return {w, pir_weights_free};
}

// Shortest round-trip representation: CSV and JSON carry identical numerics.
std::string fmt_full(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fmt_fixed(double v) {
    if (std::isnan(v)) return "-";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (std::isnan(v)) return "null";
    return fmt_full(v);
}

bool color_enabled() {
    const char* env = std::getenv("PIR_COLOR");
    return env && *env && std::string(env) != "0";
}

std::string bold(const std::string& s) {
    if (!color_enabled()) return s;
    return "\033[1m" + s + "\033[0m";
}

// Left-aligned fixed-width cell.
std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out += ' ';
    return out;
}

std::string right(const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.insert(out.begin(), ' ');
    return out;
}

struct SeriesRow {
    std::string player;
    std::string season;
    std::string phase;
    double value = 0;
    bool excluded = false;
    bool degenerate = false;
};

std::vector<SeriesRow> series_rows(const pir_series* series) {
    std::vector<SeriesRow> rows;
    for (std::size_t i = 0; i < pir_series_size(series); ++i) {
        SeriesRow row;
        row.player = pir_series_player(series, i);
        row.season = pir_series_season(series, i);
        pir_phase phase = PIR_PHASE_REGULAR;
        check(pir_series_phase(series, i, &phase));
        row.phase = phase_label(phase);
        check(pir_series_value(series, i, &row.value));
        row.excluded = pir_series_excluded(series, i) == 1;
        row.degenerate = pir_series_degenerate(series, i) == 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string flags_of(const SeriesRow& row) {
    std::string flags;
    if (row.excluded) flags = "excluded";
    if (row.degenerate) flags += flags.empty() ? "degenerate" : ",degenerate";
    return flags.empty() ? "-" : flags;
}

std::string render_records(const std::vector<SeriesRow>& rows,
                           const std::string& command, const RunConfig& cfg,
                           const std::string& value_column) {
    std::string out;
    if (cfg.format == "csv") {
        out += "player,season,phase," + value_column + ",excluded,degenerate\n";
        for (const SeriesRow& r : rows) {
            out += r.player + "," + r.season + "," + r.phase + "," +
                   fmt_full(r.value) + "," + (r.excluded ? "true" : "false") +
                   "," + (r.degenerate ? "true" : "false") + "\n";
        }
    } else if (cfg.format == "json") {
        out += "{\"command\":\"" + command + "\",\"scope\":\"" + cfg.scope +
               "\",\"phase\":\"" + cfg.phase + "\",\"records\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SeriesRow& r = rows[i];
            if (i) out += ",";
            out += "{\"player\":\"" + json_escape(r.player) +
                   "\",\"season\":\"" + r.season + "\",\"phase\":\"" + r.phase +
                   "\",\"" + value_column + "\":" + json_number(r.value) +
                   ",\"excluded\":" + (r.excluded ? "true" : "false") +
                   ",\"degenerate\":" + (r.degenerate ? "true" : "false") + "}";
        }
        out += "]}\n";
    } else {
        std::size_t pw = 6;
        for (const SeriesRow& r : rows) pw = std::max(pw, r.player.size());
        out += bold(pad("player", pw + 2) + pad("season", 9) + pad("phase", 9) +
                    right(value_column, 12) + "  flags") +
               "\n";
        for (const SeriesRow& r : rows) {
            out += pad(r.player, pw + 2) + pad(r.season, 9) + pad(r.phase, 9) +
                   right(fmt_fixed(r.value), 12) + "  " + flags_of(r) + "\n";
        }
    }
    return out;
}

std::string run_values(const RunConfig& cfg, const std::string& command,
                       pir_kind kind) {
    dataset_ptr ds = open_dataset(cfg);
    policy_ptr policy = make_policy(cfg);
    weights_ptr weights = make_weights(cfg);
    pir_series* raw = nullptr;
    check(pir_compute_values(ds.get(), kind, scope_of(cfg.scope),
                             phase_of(cfg.phase), policy.get(), weights.get(),
                             &raw));
    series_ptr series{raw, pir_series_free};
    return render_records(series_rows(series.get()), command, cfg,
                          command == "pir" ? "pir" : "value");
}

std::string run_outliers(const RunConfig& cfg) {
    dataset_ptr ds = open_dataset(cfg);
    policy_ptr policy = make_policy(cfg);
    pir_series* raw = nullptr;
    check(pir_detect_outliers(ds.get(), phase_of(cfg.phase), policy.get(), &raw));
    series_ptr series{raw, pir_series_free};
    return render_records(series_rows(series.get()), "outliers", cfg, "pir");
}

std::string run_report(const RunConfig& cfg) {
    dataset_ptr ds = open_dataset(cfg);
    policy_ptr policy = make_policy(cfg);
    weights_ptr weights = make_weights(cfg);
    pir_table* raw = nullptr;
    check(pir_summarize(ds.get(), kind_of(cfg.kind), scope_of(cfg.scope),
                        phase_of(cfg.phase), policy.get(), weights.get(), &raw));
    table_ptr table{raw, pir_table_free};

    std::size_t nrows = pir_table_row_count(table.get());
    std::size_t nplayers = pir_table_player_count(table.get());
    std::vector<std::string> players;
    for (std::size_t c = 0; c < nplayers; ++c) {
        players.emplace_back(pir_table_player(table.get(), c));
    }

    struct Cell { double all; double excluding; };
    std::vector<std::string> row_phase(nrows), row_scope(nrows);
    std::vector<std::vector<Cell>> cells(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        pir_phase p = PIR_PHASE_REGULAR;
        pir_scope s = PIR_SCOPE_JOINT;
        check(pir_table_row_phase(table.get(), r, &p));
        check(pir_table_row_scope(table.get(), r, &s));
        row_phase[r] = phase_label(p);
        row_scope[r] = scope_label(s);
        for (std::size_t c = 0; c < nplayers; ++c) {
            Cell cell{};
            check(pir_table_cell(table.get(), r, c, &cell.all, &cell.excluding));
            cells[r].push_back(cell);
        }
    }

    std::string out;
    if (cfg.format == "csv") {
        out += "phase,scope,player,mean,mean_excluding\n";
        for (std::size_t r = 0; r < nrows; ++r) {
            for (std::size_t c = 0; c < nplayers; ++c) {
                out += row_phase[r] + "," + row_scope[r] + "," + players[c] + "," +
                       (std::isnan(cells[r][c].all) ? "" : fmt_full(cells[r][c].all)) +
                       "," +
                       (std::isnan(cells[r][c].excluding)
                            ? ""
                            : fmt_full(cells[r][c].excluding)) +
                       "\n";
            }
        }
    } else if (cfg.format == "json") {
        out += "{\"command\":\"report\",\"kind\":\"" + cfg.kind +
               "\",\"players\":[";
        for (std::size_t c = 0; c < nplayers; ++c) {
            if (c) out += ",";
            out += "\"" + json_escape(players[c]) + "\"";
        }
        out += "],\"rows\":[";
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r) out += ",";
            out += "{\"phase\":\"" + row_phase[r] + "\",\"scope\":\"" +
                   row_scope[r] + "\",\"cells\":[";
            for (std::size_t c = 0; c < nplayers; ++c) {
                if (c) out += ",";
                out += "{\"player\":\"" + json_escape(players[c]) +
                       "\",\"mean\":" + json_number(cells[r][c].all) +
                       ",\"mean_excluding\":" + json_number(cells[r][c].excluding) +
                       "}";
            }
            out += "]}";
        }
        out += "]}\n";
    } else {
        // Cell prints the unfiltered mean with the exclusion-filtered mean in
        // parentheses.
        std::size_t cw = 18;
        std::string header = pad("phase", 9) + pad("scope", 12);
        for (const std::string& p : players) header += pad(p, cw);
        out += bold(header) + "\n";
        for (std::size_t r = 0; r < nrows; ++r) {
            out += pad(row_phase[r], 9) + pad(row_scope[r], 12);
            for (std::size_t c = 0; c < nplayers; ++c) {
                std::string cell = fmt_fixed(cells[r][c].all) + " (" +
                                   fmt_fixed(cells[r][c].excluding) + ")";
                out += pad(cell, cw);
            }
            out += "\n";
        }
    }
    return out;
}

std::string run_trajectory(const RunConfig& cfg) {
    dataset_ptr ds = open_dataset(cfg);
    policy_ptr policy = make_policy(cfg);
    weights_ptr weights = make_weights(cfg);
    pir_series* raw = nullptr;
    check(pir_trajectory(ds.get(), cfg.player.c_str(), kind_of(cfg.kind),
                         scope_of(cfg.scope), phase_of(cfg.phase), policy.get(),
                         weights.get(), &raw));
    series_ptr series{raw, pir_series_free};
    std::vector<SeriesRow> rows = series_rows(series.get());

    std::string svg;
    if (!cfg.plot.empty()) {
        char* text = nullptr;
        check(pir_series_render_svg(series.get(), &text));
        svg.assign(text);
        pir_string_free(text);
    }

    std::string out;
    if (cfg.format == "csv") {
        out += "season,value,excluded,degenerate\n";
        for (const SeriesRow& r : rows) {
            out += r.season + "," + fmt_full(r.value) + "," +
                   (r.excluded ? "true" : "false") + "," +
                   (r.degenerate ? "true" : "false") + "\n";
        }
    } else if (cfg.format == "json") {
        out += "{\"command\":\"trajectory\",\"player\":\"" +
               json_escape(cfg.player) + "\",\"kind\":\"" + cfg.kind +
               "\",\"scope\":\"" + cfg.scope + "\",\"phase\":\"" + cfg.phase +
               "\",\"points\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SeriesRow& r = rows[i];
            if (i) out += ",";
            out += "{\"season\":\"" + r.season +
                   "\",\"value\":" + json_number(r.value) +
                   ",\"excluded\":" + (r.excluded ? "true" : "false") +
                   ",\"degenerate\":" + (r.degenerate ? "true" : "false") + "}";
        }
        out += "]}\n";
    } else {
        out += bold(pad("season", 9) + right("value", 12) + "  flags") + "\n";
        for (const SeriesRow& r : rows) {
            out += pad(r.season, 9) + right(fmt_fixed(r.value), 12) + "  " +
                   flags_of(r) + "\n";
        }
    }

    if (!cfg.plot.empty()) {
        std::ofstream file(cfg.plot, std::ios::binary | std::ios::trunc);
        if (!file) throw CliError("cannot open " + cfg.plot + " for writing");
        file.write(svg.data(), static_cast<std::streamsize>(svg.size()));
        file.flush();
        if (!file) throw CliError("cannot write " + cfg.plot);
    }
    return out;
}

std::string run_validate(const RunConfig& cfg) {
    dataset_ptr ds = open_dataset(cfg);
    std::size_t total = pir_dataset_size(ds.get());
    std::size_t regular = 0;
    std::size_t playoff = 0;
    for (std::size_t i = 0; i < total; ++i) {
        pir_phase phase = PIR_PHASE_REGULAR;
        check(pir_dataset_record_phase(ds.get(), i, &phase));
        (phase == PIR_PHASE_REGULAR ? regular : playoff) += 1;
    }
    std::vector<std::string> players;
    for (std::size_t i = 0; i < pir_dataset_player_count(ds.get()); ++i) {
        players.emplace_back(pir_dataset_player(ds.get(), i));
    }

    std::optional<std::size_t> matched;
    if (!cfg.exclusions.empty()) {
        policy_ptr policy = make_policy(cfg);
        check(pir_policy_validate(policy.get(), ds.get()));
        pir_series* raw = nullptr;
        check(pir_detect_outliers(ds.get(), PIR_PHASE_BOTH, policy.get(), &raw));
        series_ptr series{raw, pir_series_free};
        matched = pir_series_size(series.get());
    }

    std::string out;
    if (cfg.format == "csv") {
        out += "key,value\n";
        out += "records," + std::to_string(total) + "\n";
        out += "regular," + std::to_string(regular) + "\n";
        out += "playoff," + std::to_string(playoff) + "\n";
        std::string joined;
        for (const std::string& p : players) {
            if (!joined.empty()) joined += " ";
            joined += p;
        }
        out += "players," + joined + "\n";
        if (matched) out += "excluded_records," + std::to_string(*matched) + "\n";
    } else if (cfg.format == "json") {
        out += "{\"command\":\"validate\",\"records\":" + std::to_string(total) +
               ",\"regular\":" + std::to_string(regular) +
               ",\"playoff\":" + std::to_string(playoff) + ",\"players\":[";
        for (std::size_t i = 0; i < players.size(); ++i) {
            if (i) out += ",";
            out += "\"" + json_escape(players[i]) + "\"";
        }
        out += "]";
        if (matched) out += ",\"excluded_records\":" + std::to_string(*matched);
        out += "}\n";
    } else {
        out += pad("records", 10) + std::to_string(total) + "\n";
        out += pad("regular", 10) + std::to_string(regular) + "\n";
        out += pad("playoff", 10) + std::to_string(playoff) + "\n";
        std::string joined;
        for (const std::string& p : players) {
            if (!joined.empty()) joined += ", ";
            joined += p;
        }
        out += pad("players", 10) + joined + "\n";
        if (matched) {
            out += pad("excluded", 10) + std::to_string(*matched) + "\n";
        }
    }
    return out;
}

void add_common(CLI::App* cmd, RunConfig* cfg, bool with_scope = true) {
    cmd->add_option("dataset,-d,--dataset", cfg->dataset, "dataset CSV path")
        ->required();
    cmd->add_option("--phase", cfg->phase, "phase filter")
        ->check(CLI::IsMember({"regular", "playoff", "both"}))
        ->capture_default_str();
    if (with_scope) {
        cmd->add_option("--scope", cfg->scope, "bounds scope")
            ->check(CLI::IsMember({"individual", "joint"}))
            ->capture_default_str();
    }
    cmd->add_option("--format", cfg->format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

void add_policy(CLI::App* cmd, RunConfig* cfg) {
    cmd->add_option("--method", cfg->method, "outlier method")
        ->check(CLI::IsMember({"none", "manual", "iqr"}))
        ->capture_default_str();
    cmd->add_option("--exclusions", cfg->exclusions,
                    "manual exclusion list (player,season,phase CSV)");
    cmd->add_option("--multiplier", cfg->multiplier, "IQR fence multiplier")
        ->capture_default_str();
    cmd->add_flag("--drop-excluded", cfg->drop_excluded,
                  "omit excluded records instead of clamping them");
}

void add_weights(CLI::App* cmd, RunConfig* cfg) {
    auto* inline_opt = cmd->add_option(
        "--weights", cfg->weights_inline,
        "11 comma-separated nonnegative weights (default all 1)");
    cmd->add_option("--weights-file", cfg->weights_file,
                    "file with 11 nonnegative weights")
        ->excludes(inline_opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"basketball performance indices over per-season stat lines"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("pir ") + pir_version());

    // One config per subcommand; a shared one would leak option defaults
    // across commands.
    RunConfig validate_cfg, pir_cfg, rescale_cfg, rees_cfg, pond_cfg,
        outliers_cfg, report_cfg, trajectory_cfg;

    CLI::App* validate = app.add_subcommand("validate", "check a dataset");
    add_common(validate, &validate_cfg, /*with_scope=*/false);
    validate->add_option("--exclusions", validate_cfg.exclusions,
                         "manual exclusion list to verify against the dataset");

    CLI::App* pir_cmd = app.add_subcommand("pir", "classic index per record");
    add_common(pir_cmd, &pir_cfg);
    add_policy(pir_cmd, &pir_cfg);

    CLI::App* rescale =
        app.add_subcommand("rescale", "index rescaled onto [0,1] per record");
    add_common(rescale, &rescale_cfg);
    add_policy(rescale, &rescale_cfg);

    CLI::App* rees = app.add_subcommand(
        "rees", "weighted sum of rescaled variables per record");
    add_common(rees, &rees_cfg);
    add_policy(rees, &rees_cfg);
    add_weights(rees, &rees_cfg);

    CLI::App* pond = app.add_subcommand(
        "pond", "raw variables weighted by their rescaled values per record");
    add_common(pond, &pond_cfg);
    add_policy(pond, &pond_cfg);

    CLI::App* outliers =
        app.add_subcommand("outliers", "list records the policy excludes");
    add_common(outliers, &outliers_cfg, /*with_scope=*/false);
    add_policy(outliers, &outliers_cfg);

    CLI::App* report =
        app.add_subcommand("report", "per-player summary means by phase and scope");
    report_cfg.scope = "both";
    report->add_option("dataset,-d,--dataset", report_cfg.dataset,
                       "dataset CSV path")
        ->required();
    report->add_option("--phase", report_cfg.phase, "phase filter")
        ->check(CLI::IsMember({"regular", "playoff", "both"}))
        ->capture_default_str();
    report->add_option("--scope", report_cfg.scope, "bounds scope")
        ->check(CLI::IsMember({"individual", "joint", "both"}))
        ->capture_default_str();
    report->add_option("--format", report_cfg.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    report->add_option("--kind", report_cfg.kind, "index kind")
        ->check(CLI::IsMember({"pir", "rescaled-pir", "rees", "pond"}))
        ->capture_default_str();
    add_policy(report, &report_cfg);
    add_weights(report, &report_cfg);

    CLI::App* trajectory =
        app.add_subcommand("trajectory", "season-by-season series for one player");
    add_common(trajectory, &trajectory_cfg);
    trajectory->add_option("--player", trajectory_cfg.player, "player identifier")
        ->required();
    trajectory->add_option("--kind", trajectory_cfg.kind, "index kind")
        ->check(CLI::IsMember({"pir", "rescaled-pir", "rees", "pond"}))
        ->capture_default_str();
    add_policy(trajectory, &trajectory_cfg);
    add_weights(trajectory, &trajectory_cfg);
    trajectory->add_option("--plot", trajectory_cfg.plot,
                           "write an SVG line chart here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << "pir " << pir_version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        int code = e.get_exit_code();
        return code == 0 ? 2 : code;
    }

    try {
        std::string out;
        if (app.got_subcommand(validate)) {
            out = run_validate(validate_cfg);
        } else if (app.got_subcommand(pir_cmd)) {
            out = run_values(pir_cfg, "pir", PIR_KIND_PIR);
        } else if (app.got_subcommand(rescale)) {
            out = run_values(rescale_cfg, "rescale", PIR_KIND_RESCALED);
        } else if (app.got_subcommand(rees)) {
            out = run_values(rees_cfg, "rees", PIR_KIND_REES);
        } else if (app.got_subcommand(pond)) {
            out = run_values(pond_cfg, "pond", PIR_KIND_POND);
        } else if (app.got_subcommand(outliers)) {
            out = run_outliers(outliers_cfg);
        } else if (app.got_subcommand(report)) {
            out = run_report(report_cfg);
        } else {
            out = run_trajectory(trajectory_cfg);
        }
        std::fwrite(out.data(), 1, out.size(), stdout);
        std::fflush(stdout);
        return 0;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg) {
            if (c == '\n') c = ' ';
        }
        std::cerr << "error: " << msg << "\n";
        return 1;
    }
}
