#include "pdcbound/channels.hpp"

#include <limits>

#include "pdcbound/random.hpp"

namespace pdcbound {

KrausChannel::KrausChannel(std::vector<Mat4> operators, std::vector<std::string> labels)
    : operators_(std::move(operators)), labels_(std::move(labels)) {
    if (operators_.empty()) {
        throw Error(ErrorCode::BadParameter, "a channel needs at least one Kraus operator");
    }
    if (!labels_.empty() && labels_.size() != operators_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "label count differs from operator count");
    }
}

ChannelValidity validate_doubly_stochastic(const KrausChannel& ch, double tol) {
    Mat4 left;  // sum M^dagger M
    Mat4 right; // sum M M^dagger
    for (const auto& m : ch.operators()) {
        left += m.adjoint() * m;
        right += m * m.adjoint();
    }
    ChannelValidity v;
    v.trace_defect = max_abs_diff(left, Mat4::identity());
    v.unital_defect = max_abs_diff(right, Mat4::identity());
    v.trace_preserving = v.trace_defect <= tol;
    v.unital = v.unital_defect <= tol;
    return v;
}

namespace {

Spectrum<4> density_spectrum(const Mat4& m, const char* what) {
    if (hermiticity_defect(m) > kChannelTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, std::string(what) + " is not Hermitian");
    }
    if (std::abs(m.trace() - 1.0) > kChannelTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, std::string(what) + " does not have unit trace");
    }
    auto spec = hermitian_eig(m, kChannelTolerance).spectrum;
    if (spec[3] < -kPsdClampTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, std::string(what) + " is not positive semidefinite");
    }
    return spec;
}

} // namespace

Mat4 apply_channel(const KrausChannel& ch, const Mat4& state) {
    density_spectrum(state, "channel input");
    Mat4 out;
    for (const auto& m : ch.operators()) {
        out += m * state * m.adjoint();
    }
    return out;
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    std::vector<Mat4> ops;
    ops.reserve(second.operators().size() * first.operators().size());
    for (const auto& b : second.operators()) {
        for (const auto& a : first.operators()) {
            ops.push_back(b * a);
        }
    }
    return KrausChannel(std::move(ops));
}

MajorizationReport is_majorized_by(const Mat4& target, const Mat4& source, double tol) {
    const auto lambda = density_spectrum(target, "majorization target");
    const auto epsilon = density_spectrum(source, "majorization source");

    MajorizationReport r;
    double st = 0.0;
    double ss = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        st += lambda[k];
        ss += epsilon[k];
        r.partial_sums_target[k] = st;
        r.partial_sums_source[k] = ss;
    }
    r.worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < 3; ++k) {
        r.worst_slack = std::min(r.worst_slack, r.partial_sums_source[k] - r.partial_sums_target[k]);
    }
    r.holds = r.worst_slack >= -tol && std::abs(st - ss) <= tol;
    return r;
}

KrausChannel random_mixed_unitary_channel(int k, std::uint64_t seed) {
    if (k < 1) {
        throw Error(ErrorCode::BadParameter, "random_mixed_unitary_channel: k must be >= 1");
    }
    Rng rng(seed);
    std::vector<double> weights(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    std::vector<Mat4> ops;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        const double p = weights[static_cast<std::size_t>(i)] / total;
        ops.push_back(std::sqrt(p) * random_haar_unitary<4>(rng));
        labels.push_back("U" + std::to_string(i));
    }
    return KrausChannel(std::move(ops), std::move(labels));
}

} // namespace pdcbound
