#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pir/stat_line.hpp"

namespace pir {

struct RecordKey {
    std::string player;
    std::string season;
    Phase phase = Phase::Regular;

    friend bool operator==(const RecordKey&, const RecordKey&) = default;

    bool matches(const StatLine& s) const {
        return player == s.player && season == s.season && phase == s.phase;
    }
};

// How anomalous records are chosen and what happens to them afterwards.
// Manual and IQR modes are mutually exclusive per run.
struct OutlierPolicy {
    enum class Mode { None = 0, Manual = 1, IQR = 2 };

    Mode mode = Mode::None;
    std::vector<RecordKey> manual;
    double multiplier = 1.5;
    bool clamp_excluded = true;  // excluded rows still rescale, clamped

    static OutlierPolicy none() { return {}; }

    static OutlierPolicy manual_list(std::vector<RecordKey> keys) {
        OutlierPolicy p;
        p.mode = Mode::Manual;
        p.manual = std::move(keys);
        return p;
    }

    static OutlierPolicy iqr(double multiplier = 1.5) {
        OutlierPolicy p;
        p.mode = Mode::IQR;
        p.multiplier = multiplier;
        return p;
    }

    // Copy with manual entries narrowed to one phase; scoped computations
    // use this so entries for the other phase are not treated as unmatched.
    OutlierPolicy restricted_to_phase(Phase phase) const;

    // Copy with manual entries narrowed to one player.
    OutlierPolicy restricted_to_player(std::string_view player) const;
};

// Indices whose value falls outside the box-whisker fences
// [Q1 - multiplier*IQR, Q3 + multiplier*IQR], quartiles by linear
// interpolation between order statistics.
std::set<std::size_t> detect_iqr(const std::vector<double>& values,
                                 double multiplier);

struct Partition {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> excluded;
};

// Splits records into kept and excluded per the policy. Manual entries that
// match no record are an error; IQR mode screens each player's per-phase
// index series separately.
Partition apply_policy(const std::vector<StatLine>& records,
                       const OutlierPolicy& policy);

}  // namespace pir
