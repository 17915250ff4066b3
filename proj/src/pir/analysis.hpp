#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pir/indices.hpp"
#include "pir/ingest.hpp"
#include "pir/outliers.hpp"
#include "pir/rescale.hpp"
#include "pir/weights.hpp"

namespace pir {

struct ScopeSpec {
    Scope scope = Scope::Joint;
    std::string player;  // required when scope == Individual

    static ScopeSpec joint() { return {}; }
    static ScopeSpec individual(std::string player) {
        return {Scope::Individual, std::move(player)};
    }
};

// Min/max reference bounds over the kept records in scope. The records are
// the caller's pool (conventionally one phase); manual exclusion entries
// that match nothing in the pool are ignored here, so a dataset-wide policy
// can be reused for any slice. Empty kept set fails with "no data in scope".
RescaleContext build_context(const std::vector<StatLine>& records,
                             const ScopeSpec& scope, Target target,
                             const OutlierPolicy& policy);

// One computed index value per record, in dataset order. `index` refers to
// the caller's record vector. Excluded records are rescaled with clamping
// and flagged when the policy clamps, omitted otherwise; raw PIR ignores
// the context but still carries exclusion flags.
struct ValueRow {
    std::size_t index = 0;
    IndexResult result;
};

std::vector<ValueRow> compute_values(const std::vector<StatLine>& records,
                                     Kind kind, Scope scope,
                                     std::optional<Phase> phase,
                                     const OutlierPolicy& policy,
                                     const WeightProfile& weights);

// Per-player means of an index for each phase and scope, computed twice:
// once over all records with unfiltered bounds, once over kept records with
// post-exclusion bounds. NaN cell when a player has no records in a phase.
struct SummaryCell {
    double mean_all = 0;
    double mean_excluding = 0;
};

struct SummaryRow {
    Phase phase = Phase::Regular;
    Scope scope = Scope::Joint;
    std::vector<SummaryCell> cells;  // parallel to SummaryTable::players
};

struct SummaryTable {
    Kind kind = Kind::Rescaled;
    std::vector<std::string> players;
    std::vector<SummaryRow> rows;

    const SummaryRow* find(Phase phase, Scope scope) const;
};

SummaryTable summarize(const std::vector<StatLine>& records, Kind kind,
                       std::optional<Scope> scope, const OutlierPolicy& policy,
                       const WeightProfile& weights);

// Players of one summary row ordered by unfiltered mean, descending; ties
// break lexicographically by identifier. Players absent from the phase are
// omitted.
std::vector<std::pair<std::string, double>> rank_players(
    const SummaryTable& table, Phase phase, Scope scope);

struct TrajectoryPoint {
    std::string season;
    double value = 0;
    bool excluded = false;
    bool degenerate = false;
};

struct TrajectorySeries {
    std::string player;
    Phase phase = Phase::Regular;
    Kind kind = Kind::Rescaled;
    Scope scope = Scope::Individual;
    std::vector<TrajectoryPoint> points;  // seasons strictly increasing
};

TrajectorySeries trajectory(const std::vector<StatLine>& records,
                            const std::string& player, Kind kind, Scope scope,
                            Phase phase, const OutlierPolicy& policy,
                            const WeightProfile& weights);

// Mean rescaled points for one player's kept records under the scope's
// per-variable context for the phase.
double player_mean_point_weight(const std::vector<StatLine>& records,
                                const std::string& player, Scope scope,
                                Phase phase, const OutlierPolicy& policy);

}  // namespace pir
