#include "pir/outliers.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pir/error.hpp"
#include "pir/indices.hpp"

namespace pir {

namespace {

// Linear interpolation between order statistics on the sorted series.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    double h = (static_cast<double>(sorted.size()) - 1) * p;
    auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

OutlierPolicy OutlierPolicy::restricted_to_phase(Phase phase) const {
    OutlierPolicy p = *this;
    std::erase_if(p.manual, [&](const RecordKey& k) { return k.phase != phase; });
    return p;
}

OutlierPolicy OutlierPolicy::restricted_to_player(std::string_view player) const {
    OutlierPolicy p = *this;
    std::erase_if(p.manual, [&](const RecordKey& k) { return k.player != player; });
    return p;
}

std::set<std::size_t> detect_iqr(const std::vector<double>& values,
                                 double multiplier) {
    if (values.empty()) fail(Code::NoData, "no data");
    if (!std::isfinite(multiplier) || multiplier <= 0) {
        fail(Code::InvalidValue, "invalid value: multiplier must be > 0");
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double q1 = quantile_sorted(sorted, 0.25);
    double q3 = quantile_sorted(sorted, 0.75);
    double spread = multiplier * (q3 - q1);
    double lower = q1 - spread;
    double upper = q3 + spread;
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < lower || values[i] > upper) out.insert(i);
    }
    return out;
}

Partition apply_policy(const std::vector<StatLine>& records,
                       const OutlierPolicy& policy) {
    if (records.empty()) fail(Code::NoData, "no data");
    std::vector<bool> out(records.size(), false);

    switch (policy.mode) {
        case OutlierPolicy::Mode::None:
            break;
        case OutlierPolicy::Mode::Manual: {
            std::string unmatched;
            for (const RecordKey& key : policy.manual) {
                bool hit = false;
                for (std::size_t i = 0; i < records.size(); ++i) {
                    if (key.matches(records[i])) {
                        out[i] = true;
                        hit = true;
                    }
                }
                if (!hit) {
                    if (!unmatched.empty()) unmatched += ", ";
                    unmatched += key.player + " " + key.season + " " +
                                 std::string(phase_name(key.phase));
                }
            }
            if (!unmatched.empty()) {
                fail(Code::NotFound, "unmatched exclusion entries: " + unmatched);
            }
            break;
        }
        case OutlierPolicy::Mode::IQR: {
            // Screen each player's own per-phase series: an anomalous
            // season is anomalous relative to that career segment.
            std::map<std::pair<std::string, Phase>, std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < records.size(); ++i) {
                groups[{records[i].player, records[i].phase}].push_back(i);
            }
            for (const auto& [key, idx] : groups) {
                std::vector<double> series;
                series.reserve(idx.size());
                for (std::size_t i : idx) series.push_back(compute_pir(records[i]));
                for (std::size_t j : detect_iqr(series, policy.multiplier)) {
                    out[idx[j]] = true;
                }
            }
            break;
        }
    }

    Partition part;
    for (std::size_t i = 0; i < records.size(); ++i) {
        (out[i] ? part.excluded : part.kept).push_back(i);
    }
    return part;
}

}  // namespace pir
