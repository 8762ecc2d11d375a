#include "pdcbound/twoqubit.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace pdcbound {

TwoQubitState::TwoQubitState(const Mat4& rho) : rho_(rho) {
    const double herm = hermiticity_defect(rho);
    if (herm > kStateTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "state is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > kStateTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix, "state trace is " + std::to_string(tr.real()));
    }
    eig_ = hermitian_eig(rho, kStateTolerance);
    if (eig_.spectrum[3] < -kPsdClampTolerance) {
        throw Error(ErrorCode::InvalidDensityMatrix,
                    "state has eigenvalue " + std::to_string(eig_.spectrum[3]));
    }
}

TwoQubitState TwoQubitState::from_pure(const std::array<Complex, 4>& psi) {
    double norm = 0.0;
    for (const auto& z : psi) {
        norm += std::norm(z);
    }
    return TwoQubitState(Mat4::outer(psi) * (1.0 / norm));
}

Mat4 spin_flip_operator() {
    return tensor(pauli::y(), pauli::y());
}

Mat4 spin_flip(const TwoQubitState& s) {
    const Mat4 yy = spin_flip_operator();
    return yy * s.matrix().conjugate() * yy;
}

ConcurrenceResult concurrence_detail(const TwoQubitState& s) {
    const auto& eig = s.eigen();
    Mat4 w;
    for (std::size_t k = 0; k < 4; ++k) {
        const double lambda = eig.spectrum[k];
        const double root = lambda > kConcurrenceRankTolerance ? std::sqrt(lambda) : 0.0;
        for (std::size_t row = 0; row < 4; ++row) {
            w(row, k) = eig.vectors(row, k) * root;
        }
    }
    const Mat4 tau = w.transpose() * spin_flip_operator() * w;

    Matrix<8> dilation;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            dilation(i, 4 + j) = tau(i, j);
            dilation(4 + j, i) = std::conj(tau(i, j));
        }
    }
    const auto dil = hermitian_eig(dilation, kStateTolerance);

    ConcurrenceResult out;
    for (std::size_t k = 0; k < 4; ++k) {
        // Singular values are non-negative; round-off below zero is clamped.
        out.s[k] = std::max(dil.spectrum[k], 0.0);
    }
    out.value = std::max(0.0, out.s[0] - out.s[1] - out.s[2] - out.s[3]);
    out.value = std::min(out.value, 1.0);
    return out;
}

double concurrence(const TwoQubitState& s) {
    return concurrence_detail(s).value;
}

void validate_density_spectrum(const Spectrum<4>& spec) {
    for (std::size_t k = 0; k < 4; ++k) {
        if (!std::isfinite(spec[k]) || spec[k] < -kPsdClampTolerance) {
            throw Error(ErrorCode::InvalidSpectrum, "spectrum entry " + std::to_string(k) + " is negative");
        }
        if (k > 0 && spec[k] > spec[k - 1] + kStateTolerance) {
            throw Error(ErrorCode::InvalidSpectrum, "spectrum is not sorted non-ascending");
        }
    }
    if (std::abs(spec.sum() - 1.0) > kStateTolerance) {
        throw Error(ErrorCode::InvalidSpectrum, "spectrum does not sum to 1");
    }
}

double unitary_max_concurrence(const Spectrum<4>& spec) {
    validate_density_spectrum(spec);
    const double l2l4 = std::max(spec[1], 0.0) * std::max(spec[3], 0.0);
    return std::clamp(spec[0] - spec[2] - 2.0 * std::sqrt(l2l4), 0.0, 1.0);
}

TwoQubitState construct_max_entangled_state(const Spectrum<4>& spec) {
    validate_density_spectrum(spec);
    const double h = std::numbers::sqrt2 / 2.0;
    const std::array<Complex, 4> phi_plus{h, 0.0, 0.0, h};
    const std::array<Complex, 4> phi_minus{h, 0.0, 0.0, -h};
    const std::array<Complex, 4> hv{0.0, 1.0, 0.0, 0.0};
    const std::array<Complex, 4> vh{0.0, 0.0, 1.0, 0.0};

    const auto weight = [](double v) { return std::max(v, 0.0); };
    Mat4 rho = weight(spec[0]) * Mat4::outer(phi_plus) + weight(spec[1]) * Mat4::outer(hv) +
               weight(spec[2]) * Mat4::outer(phi_minus) + weight(spec[3]) * Mat4::outer(vh);
    return TwoQubitState(rho);
}

std::optional<std::array<std::size_t, 2>> two_d_support(const Mat4& rho, double tol) {
    std::vector<std::size_t> occupied;
    for (std::size_t k = 0; k < 4; ++k) {
        if (rho(k, k).real() > tol) {
            occupied.push_back(k);
        }
    }
    if (occupied.size() > 2) {
        return std::nullopt;
    }
    // A single occupied level is paired with the lowest other index.
    for (std::size_t k = 0; occupied.size() < 2; ++k) {
        if (std::find(occupied.begin(), occupied.end(), k) == occupied.end()) {
            occupied.push_back(k);
        }
    }
    std::sort(occupied.begin(), occupied.end());

    const auto in_support = [&](std::size_t k) { return k == occupied[0] || k == occupied[1]; };
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if ((!in_support(i) || !in_support(j)) && std::abs(rho(i, j)) > tol) {
                return std::nullopt;
            }
        }
    }
    return std::array<std::size_t, 2>{occupied[0], occupied[1]};
}

TwoDDecomposition two_d_decompose(const TwoQubitState& s, double tol) {
    const Mat4& rho = s.matrix();
    const auto support = two_d_support(rho, tol);
    if (!support) {
        throw Error(ErrorCode::NotTwoD, "state is not supported on a 2x2 block of the computational basis");
    }
    const auto& occupied = *support;

    TwoDDecomposition out;
    out.support = occupied;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out.block(i, j) = rho(occupied[i], occupied[j]);
        }
    }
    const auto eig = hermitian_eig(out.block, kStateTolerance);
    out.p_tilde = std::clamp(eig.spectrum[0] - eig.spectrum[1], 0.0, 1.0);
    if (out.p_tilde <= 1e-12) {
        out.pure_state = {1.0, 0.0};
        return out;
    }
    std::array<Complex, 2> v{eig.vectors(0, 0), eig.vectors(1, 0)};
    const std::size_t pivot = std::abs(v[0]) > 1e-12 ? 0 : 1;
    const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
    for (auto& z : v) {
        z *= phase;
    }
    v[pivot] = std::abs(v[pivot]);
    out.pure_state = v;
    return out;
}

} // namespace pdcbound
