#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "pir/error.hpp"
#include "pir/indices.hpp"

using pir::Bounds;
using pir::compute_pir;
using pir::compute_pir_pond;
using pir::compute_pir_rees;
using pir::Error;
using pir::IndexResult;
using pir::kPositiveCount;
using pir::kVariableCount;
using pir::kVariableNames;
using pir::mean_point_weight;
using pir::RescaleContext;
using pir::StatLine;
using pir::WeightProfile;

namespace {

// Per-variable context over [0, top_i] with fouls_drawn and
// blocks_received pinned at zero, the shape real ingested data produces.
RescaleContext make_context(const std::array<double, kVariableCount>& top) {
    RescaleContext ctx;
    ctx.target = pir::Target::PerVariable;
    for (int i = 0; i < kVariableCount; ++i) {
        ctx.bounds[std::string(kVariableNames[i])] = Bounds{0, top[i]};
    }
    return ctx;
}

const std::array<double, kVariableCount> kTops = {35, 15, 12, 4, 4, 0,
                                                  14, 5,  6, 0, 5};

StatLine line_at(const std::array<double, kVariableCount>& values) {
    StatLine s;
    s.player = "P";
    s.season = "1990-91";
    for (int i = 0; i < kVariableCount; ++i) pir::stat_variable(s, i) = values[i];
    return s;
}

}  // namespace

TEST_CASE("classic index sums positives and subtracts negatives") {
    CHECK(compute_pir(StatLine{}) == 0.0);

    StatLine s;
    s.points = 30;
    s.rebounds = 6;
    s.assists = 5;
    s.steals = 3;
    s.blocks_made = 1;
    s.fouls_drawn = 0;
    s.fg_missed = 12;
    s.ft_missed = 2;
    s.turnovers = 3;
    s.blocks_received = 0;
    s.fouls_committed = 2;
    CHECK(compute_pir(s) == 26.0);

    StatLine only_points;
    only_points.points = 10;
    CHECK(compute_pir(only_points) == 10.0);
}

TEST_CASE("weight profile exposes its attainable interval") {
    WeightProfile unit = WeightProfile::unit();
    CHECK(unit.a_max() == 6.0);
    CHECK(unit.a_min() == -5.0);

    WeightProfile w;
    w.a = {3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(w.a_max() == 9.0);
    CHECK(w.a_min() == -5.0);

    WeightProfile bad;
    bad.a[2] = -1;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("invalid value"),
                         Error);
    bad.a[2] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("weighted index interval shrinks when source variables are absent") {
    RescaleContext ctx = make_context(kTops);
    IndexResult r = compute_pir_rees(StatLine{}, ctx, WeightProfile::unit());
    // fouls_drawn and blocks_received collapse at zero: [-5,6] becomes [-4,5].
    REQUIRE(r.range.has_value());
    CHECK(r.range->min == -4.0);
    CHECK(r.range->max == 5.0);
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("weighted index attains its interval at constructed extremes") {
    RescaleContext ctx = make_context(kTops);
    std::array<double, kVariableCount> best{};
    std::array<double, kVariableCount> worst{};
    for (int i = 0; i < kVariableCount; ++i) {
        best[i] = i < kPositiveCount ? kTops[i] : 0;
        worst[i] = i < kPositiveCount ? 0 : kTops[i];
    }
    IndexResult top = compute_pir_rees(line_at(best), ctx, WeightProfile::unit());
    IndexResult bottom =
        compute_pir_rees(line_at(worst), ctx, WeightProfile::unit());
    CHECK(top.value == 5.0);
    CHECK(bottom.value == -4.0);
}

TEST_CASE("weighted index stays inside its interval on random lines") {
    RescaleContext ctx = make_context(kTops);
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<double, kVariableCount> values{};
        for (int i = 0; i < kVariableCount; ++i) {
            // Occasionally outside the context range; clamping must hold.
            values[i] = kTops[i] * (unit(rng) * 1.4 - 0.2);
        }
        IndexResult r =
            compute_pir_rees(line_at(values), ctx, WeightProfile::unit());
        REQUIRE(r.value >= r.range->min);
        REQUIRE(r.value <= r.range->max);
        REQUIRE(r.range->min == -4.0);
        REQUIRE(r.range->max == 5.0);
    }
}

TEST_CASE("weights on zero-collapsed variables change nothing") {
    RescaleContext ctx = make_context(kTops);
    std::array<double, kVariableCount> values = {20, 8, 6, 2, 1, 0,
                                                 9,  2, 3, 0, 3};
    WeightProfile plain = WeightProfile::unit();
    WeightProfile tweaked = WeightProfile::unit();
    tweaked.a[5] = 40;  // fouls_drawn
    tweaked.a[9] = 17;  // blocks_received
    IndexResult a = compute_pir_rees(line_at(values), ctx, plain);
    IndexResult b = compute_pir_rees(line_at(values), ctx, tweaked);
    CHECK(a.value == b.value);
    CHECK(a.range->min == b.range->min);
    CHECK(a.range->max == b.range->max);
}

TEST_CASE("a point weighs 1.5 times a rebound under weights 3 and 2") {
    RescaleContext ctx = make_context(kTops);
    WeightProfile w;
    w.a = {3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    std::array<double, kVariableCount> only_points{};
    only_points[0] = kTops[0];
    std::array<double, kVariableCount> only_rebounds{};
    only_rebounds[1] = kTops[1];
    IndexResult p = compute_pir_rees(line_at(only_points), ctx, w);
    IndexResult r = compute_pir_rees(line_at(only_rebounds), ctx, w);
    CHECK(p.value == 3.0);
    CHECK(r.value == 2.0);
    CHECK(p.value == 1.5 * r.value);
}

TEST_CASE("a non-zero collapsed bound flags the result as degenerate") {
    std::array<double, kVariableCount> tops = kTops;
    RescaleContext ctx = make_context(tops);
    ctx.bounds["stl"] = Bounds{2, 2};
    std::array<double, kVariableCount> values{};
    values[3] = 2;
    IndexResult r =
        compute_pir_rees(line_at(values), ctx, WeightProfile::unit());
    CHECK(r.degenerate);
    // The collapsed variable contributes the midpoint value.
    CHECK(r.value == 0.5);
    IndexResult q = compute_pir_pond(line_at(values), ctx);
    CHECK(q.degenerate);
}

TEST_CASE("missing bounds or wrong target are incomplete contexts") {
    RescaleContext ctx = make_context(kTops);
    ctx.bounds.erase("ast");
    CHECK_THROWS_WITH_AS(
        compute_pir_rees(StatLine{}, ctx, WeightProfile::unit()),
        doctest::Contains("incomplete context"), Error);

    RescaleContext whole;
    whole.target = pir::Target::WholeIndex;
    whole.bounds[std::string(RescaleContext::kIndexKey)] = Bounds{0, 10};
    CHECK_THROWS_WITH_AS(
        compute_pir_rees(StatLine{}, whole, WeightProfile::unit()),
        doctest::Contains("incomplete context"), Error);
    CHECK_THROWS_AS(compute_pir_pond(StatLine{}, whole), Error);
}

TEST_CASE("self-weighted index equals the classic index at context maxima") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> top(0.5, 40.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, kVariableCount> tops{};
        for (double& t : tops) t = top(rng);
        RescaleContext ctx = make_context(tops);
        StatLine s = line_at(tops);
        IndexResult r = compute_pir_pond(s, ctx);
        REQUIRE(std::abs(r.value - compute_pir(s)) < 1e-9);
    }
}

TEST_CASE("self-weighted index of an all-zero line is zero") {
    RescaleContext ctx = make_context(kTops);
    IndexResult r = compute_pir_pond(StatLine{}, ctx);
    CHECK(r.value == 0.0);
}

TEST_CASE("mean point weight averages rescaled points over kept records") {
    RescaleContext ctx = make_context(kTops);
    StatLine a = line_at({35, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    StatLine b = line_at({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(mean_point_weight({a, a}, ctx) == 1.0);
    CHECK(mean_point_weight({a, b}, ctx) == 0.5);
    CHECK_THROWS_WITH_AS(mean_point_weight({}, ctx),
                         doctest::Contains("no data"), Error);
}
