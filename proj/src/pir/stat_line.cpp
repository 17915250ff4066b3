#include "pir/stat_line.hpp"

#include <charconv>

namespace pir {

namespace {

bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0; }

}  // namespace

std::vector<std::string> stat_line_issues(const StatLine& s) {
    std::vector<std::string> issues;
    if (s.player.empty()) issues.emplace_back("empty player identifier");
    if (!valid_season_label(s.season))
        issues.emplace_back("season label must match YYYY-YY, got \"" + s.season + "\"");
    if (s.games < 1) issues.emplace_back("games must be >= 1");
    for (int i = 0; i < kVariableCount; ++i) {
        if (!finite_nonnegative(stat_variable(s, i))) {
            issues.emplace_back(std::string(kVariableNames[i]) +
                                " must be finite and >= 0");
        }
    }
    return issues;
}

int season_start_year(std::string_view season) {
    if (!valid_season_label(season)) return -1;
    int year = 0;
    std::from_chars(season.data(), season.data() + 4, year);
    return year;
}

bool valid_season_label(std::string_view season) {
    if (season.size() != 7 || season[4] != '-') return false;
    for (int i : {0, 1, 2, 3, 5, 6}) {
        if (season[i] < '0' || season[i] > '9') return false;
    }
    return true;
}

}  // namespace pir
