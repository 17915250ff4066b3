#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pir/error.hpp"
#include "pir/stat_line.hpp"

namespace pir {

// Value returned when a variable's observed range collapses to a point.
enum class DegeneratePolicy { Midpoint = 0, Floor = 1, Ceiling = 2 };

inline constexpr double degenerate_value(DegeneratePolicy p) {
    switch (p) {
        case DegeneratePolicy::Midpoint: return 0.5;
        case DegeneratePolicy::Floor: return 0.0;
        case DegeneratePolicy::Ceiling: return 1.0;
    }
    return 0.5;
}

struct Bounds {
    double min = 0;
    double max = 0;

    bool degenerate() const { return min == max; }
};

// Reference bounds for rescaling: one entry per variable (PerVariable) or a
// single entry under kIndexKey (WholeIndex). Individual-scope bounds come
// from one player's kept records, Joint-scope bounds from everyone's.
struct RescaleContext {
    Scope scope = Scope::Joint;
    std::string player;  // set when scope == Individual
    Target target = Target::WholeIndex;
    std::map<std::string, Bounds, std::less<>> bounds;

    static constexpr std::string_view kIndexKey = "pir";

    bool has(std::string_view key) const {
        return bounds.find(key) != bounds.end();
    }

    // Bounds for a key; throws "incomplete context" when absent.
    const Bounds& at(std::string_view key) const;
};

// Maps x onto [0,1] via (x - min)/(max - min). Inputs outside [min,max]
// clamp to the nearest bound first; a collapsed range yields the policy
// value.
double minmax_rescale(double x, double min, double max,
                      DegeneratePolicy policy = DegeneratePolicy::Midpoint);

// Whole-index rescaling of a series against ctx's index bounds.
std::vector<double> rescale_index(const std::vector<double>& pir_values,
                                  const RescaleContext& ctx,
                                  DegeneratePolicy policy = DegeneratePolicy::Midpoint);

}  // namespace pir
