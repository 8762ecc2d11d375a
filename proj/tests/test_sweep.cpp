#include <doctest.h>

#include <sstream>

#include "pdcbound/io.hpp"
#include "pdcbound/sweep.hpp"

using namespace pdcbound;

namespace {

SweepConfig config(std::uint64_t n, std::uint64_t seed, SweepMode mode, unsigned workers = 1) {
    SweepConfig cfg;
    cfg.n_samples = n;
    cfg.seed = seed;
    cfg.mode = mode;
    cfg.workers = workers;
    return cfg;
}

std::string as_csv(const std::vector<SweepRecord>& records) {
    std::string out(io::kSweepCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += io::csv_row(r);
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("run_sweep: deterministic for a fixed seed") {
    const auto a = run_sweep(config(1, 123, SweepMode::general));
    const auto b = run_sweep(config(1, 123, SweepMode::general));
    REQUIRE(a.size() == 1);
    CHECK(io::csv_row(a[0]) == io::csv_row(b[0]));
    CHECK(io::csv_row(a[0]) != io::csv_row(run_sweep(config(1, 124, SweepMode::general))[0]));
}

TEST_CASE("run_sweep: output independent of worker count") {
    const auto one = as_csv(run_sweep(config(5000, 9, SweepMode::general, 1)));
    CHECK(one == as_csv(run_sweep(config(5000, 9, SweepMode::general, 3))));
    CHECK(one == as_csv(run_sweep(config(5000, 9, SweepMode::general, 8))));
}

TEST_CASE("run_sweep: records and ranges") {
    const auto records = run_sweep(config(3000, 2, SweepMode::general));
    REQUIRE(records.size() == 3000);
    const ParamRanges ranges;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        REQUIRE(r.sample_id == i);
        REQUIRE(r.params.t >= 0.0);
        REQUIRE(r.params.t < 1.0);
        REQUIRE(r.params.theta1 < ranges.theta1.hi);
        REQUIRE(r.params.alpha2 < ranges.alpha2.hi);
        REQUIRE(r.params.gamma0 < ranges.gamma0.hi);
        REQUIRE(r.bound_general == (1.0 + r.params.pump_p) / 2.0);
        REQUIRE(r.bound_2d == r.params.pump_p);
        REQUIRE(r.concurrence <= r.bound_general + kBoundTolerance);
    }
}

TEST_CASE("run_sweep: two_d mode pins t and respects C <= P") {
    SweepConfig cfg = config(3000, 4, SweepMode::two_d);
    const auto records = run_sweep(cfg);
    for (const auto& r : records) {
        REQUIRE(r.params.t == 1.0);
        REQUIRE(is_two_d(build_density_matrix(r.params), kBoundTolerance));
        REQUIRE(r.concurrence <= r.bound_2d + kBoundTolerance);
    }
    // Same stream as general mode apart from t.
    const auto general = run_sweep(config(1, 4, SweepMode::general));
    CHECK(general[0].params.pump_p == records[0].params.pump_p);
    CHECK(general[0].params.gamma0 == records[0].params.gamma0);

    const auto report = verify_bounds(records);
    CHECK(report.two_d_records == records.size());
    CHECK(report.violations() == 0);
}

TEST_CASE("SweepConfig validation") {
    auto cfg = config(0, 1, SweepMode::general);
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.n_samples = 1;
    cfg.workers = 0;
    CHECK_THROWS_AS(run_sweep(cfg), Error);
    cfg.workers = 1;
    cfg.ranges.mu = {0.0, 2.0};
    CHECK_THROWS_AS(cfg.validate(), Error);
    CHECK_THROWS_AS(parse_sweep_mode("three_d"), Error);
    CHECK(parse_sweep_mode("two_d") == SweepMode::two_d);
}

TEST_CASE("verify_bounds: empty and synthetic violations") {
    CHECK(verify_bounds({}).violations() == 0);

    SweepRecord bad;
    bad.params.t = 0.5;
    bad.params.pump_p = 0.5;
    bad.concurrence = 0.9;
    bad.bound_general = 0.75;
    bad.bound_2d = 0.5;
    const std::vector<SweepRecord> one{bad};
    auto report = verify_bounds(one);
    CHECK(report.violations_general == 1);
    CHECK(report.violations_2d == 0);
    CHECK(report.worst_slack == doctest::Approx(-0.15));

    // A 2D record above P but below (1+P)/2 only violates the 2D bound.
    SweepRecord flat = bad;
    flat.params.t = 1.0;
    flat.concurrence = 0.6;
    const std::vector<SweepRecord> two{flat};
    report = verify_bounds(two);
    CHECK(report.violations_general == 0);
    CHECK(report.violations_2d == 1);
}

TEST_CASE("verify_bounds: full sweep output is clean and deciles are populated") {
    const auto records = run_sweep(config(20000, 77, SweepMode::general));
    const auto report = verify_bounds(records);
    CHECK(report.records == 20000);
    CHECK(report.violations() == 0);
    std::uint64_t total = 0;
    for (const auto& d : report.deciles) {
        CHECK(d.count > 0);
        CHECK(d.max_concurrence <= d.midpoint_bound + 0.025 + kBoundTolerance);
        total += d.count;
    }
    CHECK(total == 20000);
}

TEST_CASE("saturating_config: achieves (1+P)/2") {
    CHECK(std::abs(saturating_config(1.0).achieved_concurrence - 1.0) <= 1e-9);
    CHECK(std::abs(saturating_config(0.0).achieved_concurrence - 0.5) <= 1e-9);
    CHECK(std::abs(saturating_config(0.6).achieved_concurrence - 0.8) <= 1e-9);
    CHECK(saturating_config(0.6).params.mu == 1.0);
    CHECK_THROWS_AS(saturating_config(-0.1), Error);
    CHECK_THROWS_AS(saturating_config(1.1), Error);
}

TEST_CASE("CSV rows round-trip exactly") {
    const auto records = run_sweep(config(500, 31, SweepMode::general));
    std::istringstream in(as_csv(records));
    std::vector<SweepRecord> back;
    io::read_sweep_csv(in, [&](const SweepRecord& r) { back.push_back(r); });
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        REQUIRE(back[i].params == records[i].params);
        REQUIRE(back[i].concurrence == records[i].concurrence);
        REQUIRE(back[i].spectrum == records[i].spectrum);
        REQUIRE(io::csv_row(back[i]) == io::csv_row(records[i]));
    }
}
