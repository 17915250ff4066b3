#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace pir {

enum class Phase { Regular = 0, Playoff = 1 };

inline constexpr std::string_view phase_name(Phase p) {
    return p == Phase::Regular ? "regular" : "playoff";
}

enum class Scope { Individual = 0, Joint = 1 };

inline constexpr std::string_view scope_name(Scope s) {
    return s == Scope::Individual ? "individual" : "joint";
}

enum class Target { PerVariable = 0, WholeIndex = 1 };

enum class Kind { PIR = 0, Rescaled = 1, REES = 2, POND = 3 };

inline constexpr std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::PIR: return "pir";
        case Kind::Rescaled: return "rescaled-pir";
        case Kind::REES: return "rees";
        case Kind::POND: return "pond";
    }
    return "pir";
}

// One player-season-phase record of per-game averages. The shooting
// variables are stored as misses; ingestion derives them from attempts
// and makes.
struct StatLine {
    std::string player;
    std::string season;  // label "YYYY-YY"
    Phase phase = Phase::Regular;
    int games = 1;

    double points = 0;
    double rebounds = 0;
    double assists = 0;
    double steals = 0;
    double blocks_made = 0;
    double fouls_drawn = 0;
    double fg_missed = 0;
    double ft_missed = 0;
    double turnovers = 0;
    double blocks_received = 0;
    double fouls_committed = 0;
};

// The 11 index variables in weight order: six positive contributions
// followed by five negative ones.
inline constexpr int kVariableCount = 11;
inline constexpr int kPositiveCount = 6;

inline constexpr std::array<std::string_view, kVariableCount> kVariableNames = {
    "pts", "trb", "ast", "stl", "blk", "fouls_drawn",
    "fg_missed", "ft_missed", "tov", "blocks_received", "pf",
};

inline constexpr bool variable_is_positive(int i) { return i < kPositiveCount; }

inline double stat_variable(const StatLine& s, int i) {
    switch (i) {
        case 0: return s.points;
        case 1: return s.rebounds;
        case 2: return s.assists;
        case 3: return s.steals;
        case 4: return s.blocks_made;
        case 5: return s.fouls_drawn;
        case 6: return s.fg_missed;
        case 7: return s.ft_missed;
        case 8: return s.turnovers;
        case 9: return s.blocks_received;
        case 10: return s.fouls_committed;
    }
    return 0;
}

inline double& stat_variable(StatLine& s, int i) {
    switch (i) {
        case 0: return s.points;
        case 1: return s.rebounds;
        case 2: return s.assists;
        case 3: return s.steals;
        case 4: return s.blocks_made;
        case 5: return s.fouls_drawn;
        case 6: return s.fg_missed;
        case 7: return s.ft_missed;
        case 8: return s.turnovers;
        case 9: return s.blocks_received;
        default: return s.fouls_committed;
    }
}

// Violated invariants as human-readable messages; empty means valid.
std::vector<std::string> stat_line_issues(const StatLine& s);

// Start year parsed from a "YYYY-YY" label; -1 when malformed.
int season_start_year(std::string_view season);

bool valid_season_label(std::string_view season);

}  // namespace pir
