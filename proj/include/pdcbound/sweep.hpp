#pragma once

// Seeded Monte Carlo sweep over the two-arm scheme.
//
// Sample k draws its parameters from Rng::for_stream(seed, k) in the fixed
// order pump_p, t, theta1, theta2, alpha1, alpha2, mu, gamma0, so records do
// not depend on how samples are scheduled across workers.

#include <array>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "pdcbound/scheme.hpp"

namespace pdcbound {

enum class SweepMode { general, two_d };

std::string_view to_string(SweepMode mode) noexcept;
SweepMode parse_sweep_mode(std::string_view text);

/// Half-open sampling interval [lo, hi); lo == hi pins the value.
struct ParamRange {
    double lo = 0.0;
    double hi = 1.0;
};

struct ParamRanges {
    ParamRange pump_p{0.0, 1.0};
    ParamRange t{0.0, 1.0};
    ParamRange theta1{0.0, std::numbers::pi};
    ParamRange theta2{0.0, std::numbers::pi};
    ParamRange alpha1{0.0, 2.0 * std::numbers::pi};
    ParamRange alpha2{0.0, 2.0 * std::numbers::pi};
    ParamRange mu{0.0, 1.0};
    ParamRange gamma0{0.0, 2.0 * std::numbers::pi};
};

struct SweepConfig {
    std::uint64_t n_samples = 1;
    std::uint64_t seed = 0;
    SweepMode mode = SweepMode::general;
    ParamRanges ranges{};
    unsigned workers = 1;

    /// Raises BadConfig.
    void validate() const;
};

struct SweepRecord {
    std::uint64_t sample_id = 0;
    SchemeParams params;
    double concurrence = 0.0;
    double bound_general = 0.0; // (1 + P) / 2
    double bound_2d = 0.0;      // P
    std::array<double, 4> spectrum{};
};

inline constexpr double kBoundTolerance = 1e-9;

/// Parameters of one sample; two_d mode overrides t with 1.
SchemeParams sample_params(const SweepConfig& cfg, std::uint64_t sample_id);

/// Evaluates one sample. In two_d mode the state must pass is_two_d at
/// kBoundTolerance, otherwise an Error is raised.
SweepRecord evaluate_sample(const SweepConfig& cfg, std::uint64_t sample_id);

/// Streams records to sink in sample_id order. Work is split across
/// cfg.workers threads in fixed-size batches, so memory stays bounded.
void run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& sink);

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

struct DecileSummary {
    std::uint64_t count = 0;
    double max_concurrence = 0.0;
    double midpoint_bound = 0.0; // (1 + midpoint P) / 2
};

struct BoundReport {
    std::uint64_t records = 0;
    std::uint64_t two_d_records = 0; // records with t == 1
    std::uint64_t violations_general = 0;
    std::uint64_t violations_2d = 0;
    double worst_slack = 0.0; // min of (bound - C) over all applicable bounds
    double max_concurrence = 0.0;
    std::array<DecileSummary, 10> deciles{};

    std::uint64_t violations() const noexcept { return violations_general + violations_2d; }
};

/// Incremental bound audit. C <= (1+P)/2 is checked on every record;
/// C <= P additionally on records with t == 1, which are 2D by construction.
class BoundAuditor {
public:
    void add(const SweepRecord& r);
    const BoundReport& report() const noexcept { return report_; }

private:
    BoundReport report_{};
    bool empty_ = true;
};

BoundReport verify_bounds(std::span<const SweepRecord> records);

struct SaturatingResult {
    SchemeParams params;
    double achieved_concurrence = 0.0;
};

/// t = 0.5, theta1 = -pi/4, theta2 = 0, alpha1 = pi/2, alpha2 = pi, mu = 1,
/// gamma0 = 0; the concurrence is computed, not assumed.
SaturatingResult saturating_config(double pump_p);

} // namespace pdcbound
