#include "pir/rescale.hpp"

#include <cmath>

namespace pir {

const Bounds& RescaleContext::at(std::string_view key) const {
    auto it = bounds.find(key);
    if (it == bounds.end()) {
        fail(Code::IncompleteContext,
             "incomplete context: no bounds for \"" + std::string(key) + "\"");
    }
    return it->second;
}

double minmax_rescale(double x, double min, double max, DegeneratePolicy policy) {
    if (!std::isfinite(x) || !std::isfinite(min) || !std::isfinite(max)) {
        fail(Code::InvalidValue, "invalid value: rescale inputs must be finite");
    }
    if (min > max) {
        fail(Code::InvertedBounds, "inverted bounds: min > max");
    }
    if (min == max) return degenerate_value(policy);
    if (x < min) x = min;
    if (x > max) x = max;
    return (x - min) / (max - min);
}

std::vector<double> rescale_index(const std::vector<double>& pir_values,
                                  const RescaleContext& ctx,
                                  DegeneratePolicy policy) {
    if (pir_values.empty()) fail(Code::NoData, "no data");
    const Bounds& b = ctx.at(RescaleContext::kIndexKey);
    std::vector<double> out;
    out.reserve(pir_values.size());
    for (double v : pir_values) out.push_back(minmax_rescale(v, b.min, b.max, policy));
    return out;
}

}  // namespace pir
