#pragma once

// Two-arm down-conversion source.
//
// The pump (degree of polarization P) is split t : 1-t by a non-polarizing
// beam splitter. In arm i the field passes a phase retarder (phase alpha_i on
// V) and a rotation plate (angle theta_i) before type-I down-conversion in a
// two-crystal geometry; a half-wave plate relabels the arm-2 pairs. The
// inter-arm phase gamma is stochastic with <e^{i gamma}> = mu e^{i gamma0}.
// A single realization is
//
//   E_V1 |HH> + e^{i gamma} E_V2 |HV> + e^{i gamma} E_H2 |VH> + E_H1 |VV>
//
// and the detected state is its ensemble average.

#include "pdcbound/polarization.hpp"
#include "pdcbound/twoqubit.hpp"

namespace pdcbound {

struct SchemeParams {
    double t = 1.0;      // beam-splitter ratio, [0, 1]
    double theta1 = 0.0; // rotation plate angles (rad)
    double theta2 = 0.0;
    double alpha1 = 0.0; // phase retarder phases (rad)
    double alpha2 = 0.0;
    double mu = 1.0;     // degree of inter-arm coherence, [0, 1]
    double gamma0 = 0.0; // mean inter-arm phase (rad)
    double pump_p = 1.0; // pump degree of polarization, [0, 1]

    /// Raises BadParameter on out-of-range or non-finite values.
    void validate() const;

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Field transformation for one arm, acting on (E_H, E_V)^T.
struct ArmCoherence {
    int arm = 1;
    Mat2 c; // eta_i R(theta_i) diag(1, e^{i alpha_i}); c^dagger c = |eta_i|^2 I
};

/// eta_1 = sqrt(t), eta_2 = sqrt(1 - t); the stochastic phase is not part of c.
ArmCoherence transform_fields(const SchemeParams& p, int arm);

/// Assembles rho from the closed-form second moments of the arm fields.
TwoQubitState build_density_matrix(const SchemeParams& p);

/// Independent assembly: every entry is read off C_i J C_j^dagger with the
/// cross-arm blocks weighted by mu e^{-+i gamma0}. The canonical pump of
/// p.pump_p is used unless a pump is supplied (p.pump_p is then ignored).
TwoQubitState build_density_matrix_oracle(const SchemeParams& p);
TwoQubitState build_density_matrix_oracle(const SchemeParams& p, const PolarizationMatrix& pump);

/// At most two diagonal entries above tol, and every entry outside the
/// induced 2x2 block below tol.
bool is_two_d(const TwoQubitState& s, double tol = kTwoDTolerance);

} // namespace pdcbound
