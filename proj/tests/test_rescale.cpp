#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "pir/error.hpp"
#include "pir/rescale.hpp"

using pir::Bounds;
using pir::DegeneratePolicy;
using pir::Error;
using pir::minmax_rescale;
using pir::RescaleContext;
using pir::rescale_index;

namespace {

// Worked example columns: x1 and x2 observed over four games.
const std::vector<double> kX1 = {15, 5, 4, 3};
const std::vector<double> kX2 = {15, 14, 13, 3};

double mean(const std::vector<double>& v) {
    double sum = 0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("rescaling the x1 column on its own bounds") {
    std::vector<double> got;
    for (double x : kX1) got.push_back(minmax_rescale(x, 3, 15));
    CHECK(got[0] == 1.0);
    CHECK(got[1] == 2.0 / 12.0);
    CHECK(std::abs(got[1] - 0.166) < 0.005);
    // Direct evaluation gives 1/12; pinned against hand arithmetic.
    CHECK(got[2] == 1.0 / 12.0);
    CHECK(got[3] == 0.0);
}

TEST_CASE("rescaling the x2 column on its own bounds") {
    std::vector<double> got;
    for (double x : kX2) got.push_back(minmax_rescale(x, 3, 15));
    CHECK(got[0] == 1.0);
    CHECK(std::abs(got[1] - 0.9167) < 0.005);
    CHECK(std::abs(got[2] - 0.8333) < 0.005);
    CHECK(got[3] == 0.0);
    CHECK(std::abs(mean(got) - 0.6875) < 1e-12);
    CHECK(std::abs(mean(got) - 0.687) < 0.005);
}

TEST_CASE("post-exclusion bounds clamp the excluded value") {
    // x1 without its high outlier has bounds [3,5]; the outlier clamps to 1.
    CHECK(minmax_rescale(15, 3, 5) == 1.0);
    CHECK(minmax_rescale(5, 3, 5) == 1.0);
    CHECK(minmax_rescale(4, 3, 5) == 0.5);
    CHECK(minmax_rescale(3, 3, 5) == 0.0);
    // x2 without its low outlier has bounds [13,15]; the outlier clamps to 0.
    CHECK(minmax_rescale(3, 13, 15) == 0.0);
    CHECK(minmax_rescale(14, 13, 15) == 0.5);
}

TEST_CASE("degenerate bounds return the policy value") {
    CHECK(minmax_rescale(7, 7, 7) == 0.5);
    CHECK(minmax_rescale(7, 7, 7, DegeneratePolicy::Floor) == 0.0);
    CHECK(minmax_rescale(7, 7, 7, DegeneratePolicy::Ceiling) == 1.0);
    CHECK(minmax_rescale(0, 0, 0) == 0.5);
}

TEST_CASE("non-finite inputs and inverted bounds are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(minmax_rescale(nan, 0, 1),
                         doctest::Contains("invalid value"), Error);
    CHECK_THROWS_WITH_AS(minmax_rescale(0, -inf, 1),
                         doctest::Contains("invalid value"), Error);
    CHECK_THROWS_WITH_AS(minmax_rescale(0, 0, nan),
                         doctest::Contains("invalid value"), Error);
    CHECK_THROWS_WITH_AS(minmax_rescale(0, 2, 1),
                         doctest::Contains("inverted bounds"), Error);
    CHECK_THROWS_AS(minmax_rescale(0, 2, 1), Error);
    try {
        minmax_rescale(0, 2, 1);
    } catch (const Error& e) {
        CHECK(e.code() == pir::Code::InvertedBounds);
    }
}

TEST_CASE("range and endpoint properties over random inputs") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> span(0.5, 100.0);
    std::uniform_real_distribution<double> base(-500.0, 500.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        double min = base(rng);
        double max = min + span(rng);
        // Points inside and well outside the interval.
        double x = min + (unit(rng) * 3.0 - 1.0) * (max - min);
        double y = minmax_rescale(x, min, max);
        CAPTURE(x);
        CAPTURE(min);
        CAPTURE(max);
        REQUIRE(y >= 0.0);
        REQUIRE(y <= 1.0);
        double clamped = std::min(std::max(x, min), max);
        REQUIRE((y == 0.0) == (clamped == min));
        REQUIRE((y == 1.0) == (clamped == max));
    }
}

TEST_CASE("monotonicity under shared bounds") {
    std::mt19937_64 rng(911);
    std::uniform_real_distribution<double> span(0.5, 50.0);
    std::uniform_real_distribution<double> base(-100.0, 100.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double min = base(rng);
        double max = min + span(rng);
        double x1 = base(rng);
        double x2 = base(rng);
        if (x1 > x2) std::swap(x1, x2);
        REQUIRE(minmax_rescale(x1, min, max) <= minmax_rescale(x2, min, max));
    }
}

TEST_CASE("affine transforms leave rescaled series unchanged") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> scale(0.5, 4.0);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);
    std::uniform_real_distribution<double> value(0.0, 200.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> xs(12);
        for (double& x : xs) x = value(rng);
        // Force a usable spread so the bounds never collapse.
        xs[0] = -5.0;
        xs[1] = 205.0;
        double a = scale(rng);
        double b = shift(rng);
        double lo = *std::min_element(xs.begin(), xs.end());
        double hi = *std::max_element(xs.begin(), xs.end());
        for (double x : xs) {
            double direct = minmax_rescale(x, lo, hi);
            double mapped = minmax_rescale(a * x + b, a * lo + b, a * hi + b);
            REQUIRE(std::abs(direct - mapped) < 1e-12);
        }
    }
}

TEST_CASE("whole-index rescaling uses the context's index bounds") {
    RescaleContext ctx;
    ctx.target = pir::Target::WholeIndex;
    ctx.bounds[std::string(RescaleContext::kIndexKey)] = Bounds{10, 30};
    std::vector<double> out = rescale_index({10, 20, 30, 35}, ctx);
    CHECK(out == std::vector<double>{0.0, 0.5, 1.0, 1.0});
    CHECK_THROWS_WITH_AS(rescale_index({}, ctx), doctest::Contains("no data"),
                         Error);
}

TEST_CASE("a context without the requested key is incomplete") {
    RescaleContext ctx;
    CHECK_FALSE(ctx.has("pts"));
    CHECK_THROWS_WITH_AS(rescale_index({1.0}, ctx),
                         doctest::Contains("incomplete context"), Error);
    CHECK_THROWS_WITH_AS(ctx.at("pts"), doctest::Contains("incomplete context"),
                         Error);
}

TEST_CASE("bounds know when they are degenerate") {
    CHECK(Bounds{1, 1}.degenerate());
    CHECK_FALSE(Bounds{1, 2}.degenerate());
}
