#include "pdcbound/sweep.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "pdcbound/random.hpp"

namespace pdcbound {

std::string_view to_string(SweepMode mode) noexcept {
    return mode == SweepMode::two_d ? "two_d" : "general";
}

SweepMode parse_sweep_mode(std::string_view text) {
    if (text == "general") {
        return SweepMode::general;
    }
    if (text == "two_d") {
        return SweepMode::two_d;
    }
    throw Error(ErrorCode::BadConfig, "unknown sweep mode '" + std::string(text) + "'");
}

void SweepConfig::validate() const {
    if (n_samples < 1) {
        throw Error(ErrorCode::BadConfig, "n_samples must be >= 1");
    }
    if (workers < 1) {
        throw Error(ErrorCode::BadConfig, "workers must be >= 1");
    }
    const auto check = [](const ParamRange& r, const char* name, bool unit) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
            throw Error(ErrorCode::BadConfig, std::string("invalid range for ") + name);
        }
        if (unit && (r.lo < 0.0 || r.hi > 1.0)) {
            throw Error(ErrorCode::BadConfig, std::string(name) + " range must lie within [0, 1]");
        }
    };
    check(ranges.pump_p, "pump_p", true);
    check(ranges.t, "t", true);
    check(ranges.theta1, "theta1", false);
    check(ranges.theta2, "theta2", false);
    check(ranges.alpha1, "alpha1", false);
    check(ranges.alpha2, "alpha2", false);
    check(ranges.mu, "mu", true);
    check(ranges.gamma0, "gamma0", false);
}

SchemeParams sample_params(const SweepConfig& cfg, std::uint64_t sample_id) {
    Rng rng = Rng::for_stream(cfg.seed, sample_id);
    const auto draw = [&rng](const ParamRange& r) { return rng.uniform(r.lo, r.hi); };
    SchemeParams p;
    p.pump_p = draw(cfg.ranges.pump_p);
    p.t = draw(cfg.ranges.t);
    p.theta1 = draw(cfg.ranges.theta1);
    p.theta2 = draw(cfg.ranges.theta2);
    p.alpha1 = draw(cfg.ranges.alpha1);
    p.alpha2 = draw(cfg.ranges.alpha2);
    p.mu = draw(cfg.ranges.mu);
    p.gamma0 = draw(cfg.ranges.gamma0);
    if (cfg.mode == SweepMode::two_d) {
        p.t = 1.0;
    }
    return p;
}

SweepRecord evaluate_sample(const SweepConfig& cfg, std::uint64_t sample_id) {
    SweepRecord r;
    r.sample_id = sample_id;
    r.params = sample_params(cfg, sample_id);
    const TwoQubitState state = build_density_matrix(r.params);
    if (cfg.mode == SweepMode::two_d && !is_two_d(state, kBoundTolerance)) {
        throw Error(ErrorCode::NotTwoD, "sample " + std::to_string(sample_id) + " is not a 2D state");
    }
    r.concurrence = concurrence(state);
    r.bound_general = (1.0 + r.params.pump_p) / 2.0;
    r.bound_2d = r.params.pump_p;
    r.spectrum = state.spectrum().values;
    return r;
}

void run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& sink) {
    cfg.validate();
    constexpr std::uint64_t kBatchPerWorker = 2048;
    const std::uint64_t workers = cfg.workers;
    const std::uint64_t batch = kBatchPerWorker * workers;
    std::vector<SweepRecord> buffer;

    for (std::uint64_t start = 0; start < cfg.n_samples; start += batch) {
        const std::uint64_t count = std::min(batch, cfg.n_samples - start);
        buffer.resize(count);
        if (workers == 1) {
            for (std::uint64_t i = 0; i < count; ++i) {
                buffer[i] = evaluate_sample(cfg, start + i);
            }
        } else {
            std::vector<std::exception_ptr> failures(workers);
            {
                std::vector<std::jthread> pool;
                pool.reserve(workers);
                for (std::uint64_t w = 0; w < workers; ++w) {
                    pool.emplace_back([&, w] {
                        try {
                            // Strided assignment keeps per-thread load even.
                            for (std::uint64_t i = w; i < count; i += workers) {
                                buffer[i] = evaluate_sample(cfg, start + i);
                            }
                        } catch (...) {
                            failures[w] = std::current_exception();
                        }
                    });
                }
            }
            for (const auto& f : failures) {
                if (f) {
                    std::rethrow_exception(f);
                }
            }
        }
        for (const auto& r : buffer) {
            sink(r);
        }
    }
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    std::vector<SweepRecord> out;
    out.reserve(cfg.n_samples);
    run_sweep(cfg, [&out](const SweepRecord& r) { out.push_back(r); });
    return out;
}

void BoundAuditor::add(const SweepRecord& r) {
    auto& rep = report_;
    if (empty_) {
        rep.worst_slack = std::numeric_limits<double>::infinity();
        for (std::size_t d = 0; d < rep.deciles.size(); ++d) {
            rep.deciles[d].midpoint_bound = (1.0 + (static_cast<double>(d) + 0.5) / 10.0) / 2.0;
        }
        empty_ = false;
    }
    ++rep.records;
    const double slack_general = r.bound_general - r.concurrence;
    rep.worst_slack = std::min(rep.worst_slack, slack_general);
    if (slack_general < -kBoundTolerance) {
        ++rep.violations_general;
    }
    if (r.params.t == 1.0) {
        ++rep.two_d_records;
        const double slack_2d = r.bound_2d - r.concurrence;
        rep.worst_slack = std::min(rep.worst_slack, slack_2d);
        if (slack_2d < -kBoundTolerance) {
            ++rep.violations_2d;
        }
    }
    rep.max_concurrence = std::max(rep.max_concurrence, r.concurrence);

    const double p = std::clamp(r.params.pump_p, 0.0, 1.0);
    const auto decile = std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9);
    auto& d = rep.deciles[decile];
    ++d.count;
    d.max_concurrence = std::max(d.max_concurrence, r.concurrence);
}

BoundReport verify_bounds(std::span<const SweepRecord> records) {
    BoundAuditor auditor;
    for (const auto& r : records) {
        auditor.add(r);
    }
    return auditor.report();
}

SaturatingResult saturating_config(double pump_p) {
    if (!(pump_p >= 0.0 && pump_p <= 1.0)) {
        throw Error(ErrorCode::BadParameter, "pump_p must lie in [0, 1]");
    }
    SaturatingResult out;
    out.params.t = 0.5;
    out.params.theta1 = -std::numbers::pi / 4.0;
    out.params.theta2 = 0.0;
    out.params.alpha1 = std::numbers::pi / 2.0;
    out.params.alpha2 = std::numbers::pi;
    out.params.mu = 1.0;
    out.params.gamma0 = 0.0;
    out.params.pump_p = pump_p;
    out.achieved_concurrence = concurrence(build_density_matrix(out.params));
    return out;
}

} // namespace pdcbound
