#pragma once

#include <string>

#include "pir/analysis.hpp"

namespace pir {

// Self-contained SVG line chart of a trajectory: x axis labeled "season",
// y axis labeled "index value". Excluded seasons are drawn as open markers.
// Output is a pure function of the series, byte-identical across runs.
std::string render_trajectory_svg(const TrajectorySeries& series);

}  // namespace pir
