#pragma once

#include <optional>
#include <vector>

#include "pir/rescale.hpp"
#include "pir/stat_line.hpp"
#include "pir/weights.hpp"

namespace pir {

struct IndexResult {
    Kind kind = Kind::PIR;
    double value = 0;
    std::optional<Bounds> range;  // attainable interval, when defined
    bool excluded = false;        // record was dropped as anomalous
    bool degenerate = false;      // a collapsed bounds entry fed the value
};

// Classic additive index: positive actions minus negative actions.
double compute_pir(const StatLine& s);

// Weighted sum of per-variable rescaled statistics. Variables whose bounds
// collapse at zero (absent from the source) carry effective weight 0, so
// the attainable interval shrinks accordingly.
IndexResult compute_pir_rees(const StatLine& s, const RescaleContext& ctx,
                             const WeightProfile& w,
                             DegeneratePolicy policy = DegeneratePolicy::Midpoint);

// Each raw variable multiplied by its own rescaled value, positives added,
// negatives subtracted.
IndexResult compute_pir_pond(const StatLine& s, const RescaleContext& ctx,
                             DegeneratePolicy policy = DegeneratePolicy::Midpoint);

// Arithmetic mean of rescaled points over a player's kept records.
double mean_point_weight(const std::vector<StatLine>& records,
                         const RescaleContext& ctx,
                         DegeneratePolicy policy = DegeneratePolicy::Midpoint);

}  // namespace pir
