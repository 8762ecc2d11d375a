#pragma once

#include <array>

#include "pdcbound/matrix.hpp"

namespace pdcbound {

/// Normalized 2x2 pump polarization matrix J of second-order field moments.
/// Construction validates Hermiticity and unit trace (1e-12) and
/// positivity (eigenvalues >= -1e-10); failures raise InvalidDensityMatrix.
class PolarizationMatrix {
public:
    explicit PolarizationMatrix(const Mat2& j);

    /// J = [[1/2, p/2], [p/2, 1/2]], the pump used by the two-arm scheme.
    static PolarizationMatrix canonical_pump(double p);

    const Mat2& matrix() const noexcept { return j_; }
    const Spectrum<2>& spectrum() const noexcept { return spectrum_; }

private:
    Mat2 j_;
    Spectrum<2> spectrum_;
};

/// P = |e1 - e2|, basis independent, in [0, 1].
double degree_of_polarization(const PolarizationMatrix& j);

struct PolarizationDecomposition {
    double p = 0.0;
    std::array<Complex, 2> pure_state{}; // unit norm, first nonzero entry real positive
    double unpolarized_weight = 1.0;     // 1 - p

    /// p |psi><psi| + (1 - p) I/2
    Mat2 reconstruct() const;
};

/// Splits J into fully polarized and unpolarized parts. When J is
/// unpolarized (p <= 1e-12) the pure state is the convention vector (1, 0);
/// its weight is then zero so the choice has no physical content.
PolarizationDecomposition polar_decompose(const PolarizationMatrix& j);

struct EmbeddedPumpState {
    Mat4 sigma;           // diag(1, 0) (x) J
    Spectrum<4> spectrum; // ((1+P)/2, (1-P)/2, 0, 0)
};

EmbeddedPumpState embed_pump(const PolarizationMatrix& j);

} // namespace pdcbound
