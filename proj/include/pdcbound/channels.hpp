#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pdcbound/matrix.hpp"

namespace pdcbound {

/// Completely positive map rho -> sum_i M_i rho M_i^dagger on two qubits.
/// Trace preservation and unitality are checked, never assumed.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<Mat4> operators, std::vector<std::string> labels = {});

    const std::vector<Mat4>& operators() const noexcept { return operators_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<Mat4> operators_;
    std::vector<std::string> labels_;
};

struct ChannelValidity {
    bool trace_preserving = false; // ||sum M^dagger M - I||_max <= tol
    bool unital = false;           // ||sum M M^dagger - I||_max <= tol
    double trace_defect = 0.0;
    double unital_defect = 0.0;

    bool doubly_stochastic() const noexcept { return trace_preserving && unital; }
};

inline constexpr double kChannelTolerance = 1e-10;

ChannelValidity validate_doubly_stochastic(const KrausChannel& ch, double tol = kChannelTolerance);

/// Raises InvalidDensityMatrix when the input is not a density matrix
/// (Hermitian, unit trace, PSD within 1e-10).
Mat4 apply_channel(const KrausChannel& ch, const Mat4& state);

/// Channel equivalent to applying `first`, then `second`.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

struct MajorizationReport {
    bool holds = false;
    std::array<double, 4> partial_sums_source{};
    std::array<double, 4> partial_sums_target{};
    double worst_slack = 0.0; // min over k < 3 of source_k - target_k
};

/// Whether spec(target) is majorized by spec(source): every leading partial
/// sum of the target's sorted spectrum is bounded by the source's, with
/// equal totals, all within tol.
MajorizationReport is_majorized_by(const Mat4& target, const Mat4& source, double tol);

/// sum_i p_i U_i . U_i^dagger with p uniform on the simplex and Haar U_i.
/// Every channel produced is doubly stochastic; not every doubly stochastic
/// channel on two qubits can be produced this way.
KrausChannel random_mixed_unitary_channel(int k, std::uint64_t seed);

} // namespace pdcbound
