#pragma once

#include <array>
#include <cmath>
#include <string>

#include "pir/error.hpp"
#include "pir/stat_line.hpp"

namespace pir {

// The 11 nonnegative weights of the weighted rescaled index, in variable
// order (a_1 points .. a_6 fouls drawn, a_7 fg missed .. a_11 fouls
// committed). Negative-group weights are stored as magnitudes and applied
// with subtraction.
struct WeightProfile {
    std::array<double, kVariableCount> a{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

    static WeightProfile unit() { return WeightProfile{}; }

    // Upper index bound: sum of the positive-group weights.
    double a_max() const {
        double sum = 0;
        for (int i = 0; i < kPositiveCount; ++i) sum += a[i];
        return sum;
    }

    // Lower index bound: negated sum of the negative-group weights.
    double a_min() const {
        double sum = 0;
        for (int i = kPositiveCount; i < kVariableCount; ++i) sum += a[i];
        return -sum;
    }

    void validate() const {
        for (int i = 0; i < kVariableCount; ++i) {
            if (!std::isfinite(a[i]) || a[i] < 0) {
                fail(Code::InvalidValue,
                     "invalid value: weight a_" + std::to_string(i + 1) +
                         " must be finite and >= 0");
            }
        }
    }
};

}  // namespace pir
