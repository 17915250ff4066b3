#include "pir/indices.hpp"

namespace pir {

namespace {

void require_per_variable(const RescaleContext& ctx) {
    if (ctx.target != Target::PerVariable) {
        fail(Code::IncompleteContext,
             "incomplete context: per-variable bounds required");
    }
}

// A variable pinned at zero across the context has no data at the source;
// it must not move the index off its attainable interval.
bool zero_degenerate(const Bounds& b) { return b.min == 0 && b.max == 0; }

}  // namespace

double compute_pir(const StatLine& s) {
    return s.points + s.rebounds + s.assists + s.steals + s.blocks_made +
           s.fouls_drawn - s.fg_missed - s.ft_missed - s.turnovers -
           s.blocks_received - s.fouls_committed;
}

IndexResult compute_pir_rees(const StatLine& s, const RescaleContext& ctx,
                             const WeightProfile& w, DegeneratePolicy policy) {
    require_per_variable(ctx);
    w.validate();
    IndexResult r;
    r.kind = Kind::REES;
    double upper = 0;
    double lower = 0;
    for (int i = 0; i < kVariableCount; ++i) {
        const Bounds& b = ctx.at(kVariableNames[i]);
        if (zero_degenerate(b)) continue;  // effective weight 0
        if (b.degenerate()) r.degenerate = true;
        double y = minmax_rescale(stat_variable(s, i), b.min, b.max, policy);
        if (variable_is_positive(i)) {
            r.value += w.a[i] * y;
            upper += w.a[i];
        } else {
            r.value -= w.a[i] * y;
            lower -= w.a[i];
        }
    }
    r.range = Bounds{lower, upper};
    return r;
}

IndexResult compute_pir_pond(const StatLine& s, const RescaleContext& ctx,
                             DegeneratePolicy policy) {
    require_per_variable(ctx);
    IndexResult r;
    r.kind = Kind::POND;
    for (int i = 0; i < kVariableCount; ++i) {
        const Bounds& b = ctx.at(kVariableNames[i]);
        if (zero_degenerate(b)) continue;
        if (b.degenerate()) r.degenerate = true;
        double x = stat_variable(s, i);
        double y = minmax_rescale(x, b.min, b.max, policy);
        r.value += variable_is_positive(i) ? y * x : -y * x;
    }
    return r;
}

double mean_point_weight(const std::vector<StatLine>& records,
                         const RescaleContext& ctx, DegeneratePolicy policy) {
    if (records.empty()) fail(Code::NoData, "no data");
    const Bounds& b = ctx.at(kVariableNames[0]);
    double sum = 0;
    for (const StatLine& s : records) {
        sum += minmax_rescale(s.points, b.min, b.max, policy);
    }
    return sum / static_cast<double>(records.size());
}

}  // namespace pir
