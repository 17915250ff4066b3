#include "pir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pir/error.hpp"

namespace pir {

namespace {

// Manual entries narrowed to keys that match at least one record in the
// pool, so policies written against a whole dataset apply to any slice.
OutlierPolicy narrow_to_pool(const OutlierPolicy& policy,
                             const std::vector<StatLine>& pool) {
    if (policy.mode != OutlierPolicy::Mode::Manual) return policy;
    OutlierPolicy narrowed = policy;
    std::erase_if(narrowed.manual, [&](const RecordKey& key) {
        return std::none_of(pool.begin(), pool.end(),
                            [&](const StatLine& s) { return key.matches(s); });
    });
    return narrowed;
}

std::vector<StatLine> phase_subset(const std::vector<StatLine>& records,
                                   Phase phase, std::vector<std::size_t>* map) {
    std::vector<StatLine> sub;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].phase == phase) {
            sub.push_back(records[i]);
            if (map) map->push_back(i);
        }
    }
    return sub;
}

std::vector<std::string> distinct_players(const std::vector<StatLine>& records) {
    std::vector<std::string> out;
    for (const StatLine& s : records) {
        if (std::find(out.begin(), out.end(), s.player) == out.end()) {
            out.push_back(s.player);
        }
    }
    return out;
}

IndexResult whole_index_value(const StatLine& s, const RescaleContext& ctx) {
    const Bounds& b = ctx.at(RescaleContext::kIndexKey);
    IndexResult r;
    r.kind = Kind::Rescaled;
    r.value = minmax_rescale(compute_pir(s), b.min, b.max);
    r.range = Bounds{0, 1};
    r.degenerate = b.degenerate();
    return r;
}

// Values for one phase's records; appends to `out` using `index_map` to
// translate back to dataset positions.
void phase_values(const std::vector<StatLine>& sub,
                  const std::vector<std::size_t>& index_map, Kind kind,
                  Scope scope, const OutlierPolicy& policy,
                  const WeightProfile& weights, std::vector<ValueRow>* out) {
    // Strict application: a manual entry for this phase that matches no
    // record is a caller mistake and must surface.
    Partition part = apply_policy(sub, policy);
    std::vector<bool> excluded(sub.size(), false);
    for (std::size_t i : part.excluded) excluded[i] = true;

    Target target =
        (kind == Kind::REES || kind == Kind::POND) ? Target::PerVariable
                                                   : Target::WholeIndex;
    std::map<std::string, RescaleContext> contexts;
    if (kind != Kind::PIR) {
        if (scope == Scope::Joint) {
            contexts[""] = build_context(sub, ScopeSpec::joint(), target, policy);
        } else {
            for (const std::string& p : distinct_players(sub)) {
                contexts[p] =
                    build_context(sub, ScopeSpec::individual(p), target, policy);
            }
        }
    }

    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (excluded[i] && !policy.clamp_excluded) continue;
        const StatLine& s = sub[i];
        IndexResult r;
        switch (kind) {
            case Kind::PIR:
                r.kind = Kind::PIR;
                r.value = compute_pir(s);
                break;
            case Kind::Rescaled:
                r = whole_index_value(
                    s, contexts.at(scope == Scope::Joint ? "" : s.player));
                break;
            case Kind::REES:
                r = compute_pir_rees(
                    s, contexts.at(scope == Scope::Joint ? "" : s.player), weights);
                break;
            case Kind::POND:
                r = compute_pir_pond(
                    s, contexts.at(scope == Scope::Joint ? "" : s.player));
                break;
        }
        r.excluded = excluded[i];
        out->push_back({index_map[i], r});
    }
}

}  // namespace

const SummaryRow* SummaryTable::find(Phase phase, Scope scope) const {
    for (const SummaryRow& row : rows) {
        if (row.phase == phase && row.scope == scope) return &row;
    }
    return nullptr;
}

RescaleContext build_context(const std::vector<StatLine>& records,
                             const ScopeSpec& scope, Target target,
                             const OutlierPolicy& policy) {
    if (scope.scope == Scope::Individual && scope.player.empty()) {
        fail(Code::Config, "individual scope requires a player");
    }
    std::vector<StatLine> pool;
    for (const StatLine& s : records) {
        if (scope.scope == Scope::Joint || s.player == scope.player) {
            pool.push_back(s);
        }
    }
    if (pool.empty()) fail(Code::NoData, "no data in scope");

    Partition part = apply_policy(pool, narrow_to_pool(policy, pool));
    if (part.kept.empty()) fail(Code::NoData, "no data in scope");

    RescaleContext ctx;
    ctx.scope = scope.scope;
    ctx.player = scope.player;
    ctx.target = target;
    if (target == Target::PerVariable) {
        for (int v = 0; v < kVariableCount; ++v) {
            Bounds b{std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
            for (std::size_t i : part.kept) {
                double x = stat_variable(pool[i], v);
                b.min = std::min(b.min, x);
                b.max = std::max(b.max, x);
            }
            ctx.bounds.emplace(kVariableNames[v], b);
        }
    } else {
        Bounds b{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
        for (std::size_t i : part.kept) {
            double v = compute_pir(pool[i]);
            b.min = std::min(b.min, v);
            b.max = std::max(b.max, v);
        }
        ctx.bounds.emplace(RescaleContext::kIndexKey, b);
    }
    return ctx;
}

std::vector<ValueRow> compute_values(const std::vector<StatLine>& records,
                                     Kind kind, Scope scope,
                                     std::optional<Phase> phase,
                                     const OutlierPolicy& policy,
                                     const WeightProfile& weights) {
    std::vector<ValueRow> out;
    for (Phase p : {Phase::Regular, Phase::Playoff}) {
        if (phase && *phase != p) continue;
        std::vector<std::size_t> index_map;
        std::vector<StatLine> sub = phase_subset(records, p, &index_map);
        if (sub.empty()) continue;
        phase_values(sub, index_map, kind, scope,
                     policy.restricted_to_phase(p), weights, &out);
    }
    if (out.empty()) fail(Code::NoData, "no data in scope");
    std::sort(out.begin(), out.end(),
              [](const ValueRow& a, const ValueRow& b) { return a.index < b.index; });
    return out;
}

SummaryTable summarize(const std::vector<StatLine>& records, Kind kind,
                       std::optional<Scope> scope, const OutlierPolicy& policy,
                       const WeightProfile& weights) {
    if (records.empty()) fail(Code::NoData, "no data");
    SummaryTable table;
    table.kind = kind;
    table.players = distinct_players(records);

    std::vector<Scope> scopes;
    if (scope) {
        scopes.push_back(*scope);
    } else {
        scopes = {Scope::Individual, Scope::Joint};
    }

    for (Phase p : {Phase::Regular, Phase::Playoff}) {
        std::vector<std::size_t> index_map;
        std::vector<StatLine> sub = phase_subset(records, p, &index_map);
        if (sub.empty()) continue;
        for (Scope sc : scopes) {
            std::vector<ValueRow> all = compute_values(
                records, kind, sc, p, OutlierPolicy::none(), weights);
            std::vector<ValueRow> kept =
                compute_values(records, kind, sc, p, policy, weights);

            SummaryRow row;
            row.phase = p;
            row.scope = sc;
            for (const std::string& player : table.players) {
                auto mean_of = [&](const std::vector<ValueRow>& rows,
                                   bool skip_excluded) {
                    double sum = 0;
                    std::size_t n = 0;
                    for (const ValueRow& vr : rows) {
                        if (records[vr.index].player != player) continue;
                        if (skip_excluded && vr.result.excluded) continue;
                        sum += vr.result.value;
                        ++n;
                    }
                    return n ? sum / static_cast<double>(n)
                             : std::numeric_limits<double>::quiet_NaN();
                };
                row.cells.push_back(
                    {mean_of(all, false), mean_of(kept, true)});
            }
            table.rows.push_back(std::move(row));
        }
    }
    if (table.rows.empty()) fail(Code::NoData, "no data in scope");
    return table;
}

std::vector<std::pair<std::string, double>> rank_players(
    const SummaryTable& table, Phase phase, Scope scope) {
    const SummaryRow* row = table.find(phase, scope);
    if (!row) fail(Code::NotFound, "summary row not found");
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < table.players.size(); ++i) {
        double mean = row->cells[i].mean_all;
        if (std::isnan(mean)) continue;
        out.emplace_back(table.players[i], mean);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

TrajectorySeries trajectory(const std::vector<StatLine>& records,
                            const std::string& player, Kind kind, Scope scope,
                            Phase phase, const OutlierPolicy& policy,
                            const WeightProfile& weights) {
    std::vector<ValueRow> rows =
        compute_values(records, kind, scope, phase, policy, weights);

    TrajectorySeries series;
    series.player = player;
    series.phase = phase;
    series.kind = kind;
    series.scope = scope;
    for (const ValueRow& vr : rows) {
        const StatLine& s = records[vr.index];
        if (s.player != player) continue;
        series.points.push_back({s.season, vr.result.value, vr.result.excluded,
                                 vr.result.degenerate});
    }
    if (series.points.empty()) fail(Code::NoData, "no data in scope");
    std::sort(series.points.begin(), series.points.end(),
              [](const TrajectoryPoint& a, const TrajectoryPoint& b) {
                  return season_start_year(a.season) < season_start_year(b.season);
              });
    return series;
}

double player_mean_point_weight(const std::vector<StatLine>& records,
                                const std::string& player, Scope scope,
                                Phase phase, const OutlierPolicy& policy) {
    std::vector<StatLine> sub = phase_subset(records, phase, nullptr);
    if (sub.empty()) fail(Code::NoData, "no data in scope");
    ScopeSpec spec = scope == Scope::Joint ? ScopeSpec::joint()
                                           : ScopeSpec::individual(player);
    OutlierPolicy scoped = policy.restricted_to_phase(phase);
    RescaleContext ctx = build_context(sub, spec, Target::PerVariable, scoped);

    Partition part = apply_policy(sub, scoped);
    std::vector<StatLine> kept;
    for (std::size_t i : part.kept) {
        if (sub[i].player == player) kept.push_back(sub[i]);
    }
    return mean_point_weight(kept, ctx);
}

}  // namespace pir
