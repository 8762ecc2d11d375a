#include "pdcbound/polarization.hpp"

#include <string>

namespace pdcbound {

namespace {

constexpr double kStructureTol = 1e-12;
constexpr double kDegenerateP = 1e-12;

} // namespace

PolarizationMatrix::PolarizationMatrix(const Mat2& j) : j_(j) {
    const double herm = hermiticity_defect(j);
    if (herm > kStructureTol) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "polarization matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    if (std::abs(j.trace() - 1.0) > kStructureTol) {
        throw Error(ErrorCode::InvalidDensityMatrix, "polarization matrix trace differs from 1");
    }
    spectrum_ = hermitian_eig(j, kStructureTol).spectrum;
    if (spectrum_[1] < -kPsdClampTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "polarization matrix has eigenvalue " + std::to_string(spectrum_[1]));
    }
}

PolarizationMatrix PolarizationMatrix::canonical_pump(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::BadParameter, "degree of polarization must lie in [0, 1]");
    }
    return PolarizationMatrix(Mat2{{0.5, 0.5 * p}, {0.5 * p, 0.5}});
}

double degree_of_polarization(const PolarizationMatrix& j) {
    const auto& s = j.spectrum();
    return std::clamp(std::abs(s[0] - s[1]), 0.0, 1.0);
}

Mat2 PolarizationDecomposition::reconstruct() const {
    return p * Mat2::outer(pure_state) + unpolarized_weight * 0.5 * Mat2::identity();
}

PolarizationDecomposition polar_decompose(const PolarizationMatrix& j) {
    PolarizationDecomposition out;
    out.p = degree_of_polarization(j);
    out.unpolarized_weight = 1.0 - out.p;
    if (out.p <= kDegenerateP) {
        out.pure_state = {1.0, 0.0};
        return out;
    }
    const auto eig = hermitian_eig(j.matrix(), kStructureTol);
    std::array<Complex, 2> v{eig.vectors(0, 0), eig.vectors(1, 0)};
    // Fix the global phase: first entry with non-negligible modulus made real positive.
    const std::size_t pivot = std::abs(v[0]) > 1e-12 ? 0 : 1;
    const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
    const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    for (auto& z : v) {
        z *= phase / norm;
    }
    v[pivot] = std::abs(v[pivot]);
    out.pure_state = v;
    return out;
}

EmbeddedPumpState embed_pump(const PolarizationMatrix& j) {
    const Mat2 select_first{{1.0, 0.0}, {0.0, 0.0}};
    EmbeddedPumpState out;
    out.sigma = tensor(select_first, j.matrix());
    out.spectrum = hermitian_eig(out.sigma, kStructureTol).spectrum;
    return out;
}

} // namespace pdcbound
