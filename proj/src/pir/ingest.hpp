#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pir/outliers.hpp"
#include "pir/stat_line.hpp"

namespace pir {

// Shooting volume as published by the source; kept so a loaded dataset can
// be written back without loss (misses alone cannot reconstruct attempts).
struct ShotTotals {
    double fga = 0;
    double fg = 0;
    double fta = 0;
    double ft = 0;
};

struct Dataset {
    std::vector<StatLine> records;
    std::vector<ShotTotals> shots;  // parallel to records

    // Distinct player identifiers in first-appearance order.
    std::vector<std::string> players() const;
};

// Comma-separated text with a header row. Required columns: player, season,
// phase, games, pts, trb, ast, stl, blk, tov, pf, fga, fg, fta, ft.
// Optional columns fouls_drawn and blocks_received default to 0. Header
// matching is case-insensitive; unknown columns are ignored. fg_missed and
// ft_missed are derived as attempts minus makes.
Dataset parse_dataset(std::string_view text, std::string_view source_name);
Dataset load_dataset(const std::string& path);

// Canonical comma-separated form; load(serialize(load(f))) equals load(f).
std::string serialize_dataset(const Dataset& ds);
void save_dataset(const Dataset& ds, const std::string& path);

// Manual exclusion lists use the same tabular key format: a header row
// "player,season,phase" followed by one record key per line.
std::vector<RecordKey> parse_exclusions(std::string_view text,
                                        std::string_view source_name);
std::vector<RecordKey> load_exclusions(const std::string& path);

// Weight files hold 11 nonnegative reals separated by commas, spaces, or
// newlines, in variable order.
std::vector<double> parse_weight_list(std::string_view text);
std::vector<double> load_weight_list(const std::string& path);

}  // namespace pir
