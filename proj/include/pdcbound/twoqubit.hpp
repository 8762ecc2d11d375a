#pragma once

// Two-qubit polarization states in the ordered basis |HH>, |HV>, |VH>, |VV>
// (signal qubit first, H -> 0, V -> 1).

#include <array>
#include <cstddef>
#include <optional>

#include "pdcbound/matrix.hpp"

namespace pdcbound {

namespace basis {
inline constexpr std::size_t HH = 0;
inline constexpr std::size_t HV = 1;
inline constexpr std::size_t VH = 2;
inline constexpr std::size_t VV = 3;
} // namespace basis

inline constexpr double kStateTolerance = 1e-10;

/// Validated 4x4 density matrix. Hermitian, unit trace and PSD within
/// 1e-10; violations raise InvalidDensityMatrix. The eigendecomposition
/// computed during validation is kept for later use.
class TwoQubitState {
public:
    explicit TwoQubitState(const Mat4& rho);

    static TwoQubitState from_pure(const std::array<Complex, 4>& psi);

    const Mat4& matrix() const noexcept { return rho_; }
    const Spectrum<4>& spectrum() const noexcept { return eig_.spectrum; }
    const EigenDecomposition<4>& eigen() const noexcept { return eig_; }

private:
    Mat4 rho_;
    EigenDecomposition<4> eig_;
};

/// (sigma_y (x) sigma_y), the constant anti-diagonal(-1, 1, 1, -1).
Mat4 spin_flip_operator();

/// rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
Mat4 spin_flip(const TwoQubitState& s);

struct ConcurrenceResult {
    double value = 0.0;
    std::array<double, 4> s{}; // non-ascending square roots of eig(sqrt(rho) rho~ sqrt(rho))
};

// The s values equal the singular values of tau = W^T (sigma_y (x) sigma_y) W
// for any factorization rho = W W^dagger. They are read off the Hermitian
// dilation [[0, tau], [tau^dagger, 0]], whose spectrum is +-s, so that small
// s are resolved to absolute machine precision instead of the square root of
// it. Eigenvalues of rho at or below kConcurrenceRankTolerance are treated as
// exact zeros when building W.
inline constexpr double kConcurrenceRankTolerance = 1e-14;

ConcurrenceResult concurrence_detail(const TwoQubitState& s);
double concurrence(const TwoQubitState& s);

/// Validates a 4-entry density spectrum: non-ascending, entries >= -1e-10,
/// sum 1 within 1e-10. Raises InvalidSpectrum.
void validate_density_spectrum(const Spectrum<4>& spec);

/// max{0, l1 - l3 - 2 sqrt(l2 l4)}: the largest concurrence on the unitary
/// orbit of any state with this spectrum.
double unitary_max_concurrence(const Spectrum<4>& spec);

/// l1 |Phi+><Phi+| + l2 |HV><HV| + l3 |Phi-><Phi-| + l4 |VH><VH|, which
/// attains unitary_max_concurrence(spec).
TwoQubitState construct_max_entangled_state(const Spectrum<4>& spec);

struct TwoDDecomposition {
    std::array<std::size_t, 2> support{}; // ascending basis indices
    double p_tilde = 0.0;                 // l1 - l2 of the support block
    std::array<Complex, 2> pure_state{};  // top eigenvector of the block
    Mat2 block;
};

inline constexpr double kTwoDTolerance = 1e-10;

/// Support indices of a 2D state, or nullopt when rho is not 2D at tol.
std::optional<std::array<std::size_t, 2>> two_d_support(const Mat4& rho, double tol = kTwoDTolerance);

/// Decomposes a state supported on a 2x2 block of the computational basis.
/// Raises NotTwoD when more than two diagonal entries exceed tol or any
/// entry outside the block exceeds tol.
TwoDDecomposition two_d_decompose(const TwoQubitState& s, double tol = kTwoDTolerance);

} // namespace pdcbound
