#include "pdcbound/scheme.hpp"

#include <string>

namespace pdcbound {

void SchemeParams::validate() const {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!(finite(t) && finite(theta1) && finite(theta2) && finite(alpha1) && finite(alpha2) &&
          finite(mu) && finite(gamma0) && finite(pump_p))) {
        throw Error(ErrorCode::BadParameter, "scheme parameters must be finite");
    }
    const auto unit = [](double v, const char* name) {
        if (v < 0.0 || v > 1.0) {
            throw Error(ErrorCode::BadParameter, std::string(name) + " must lie in [0, 1]");
        }
    };
    unit(t, "t");
    unit(mu, "mu");
    unit(pump_p, "pump_p");
}

namespace {

Complex expi(double phase) {
    return std::polar(1.0, phase);
}

Mat2 arm_matrix(double eta, double theta, double alpha) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Mat2 rotation{{c, s}, {-s, c}};
    const Mat2 retarder{{1.0, 0.0}, {0.0, expi(alpha)}};
    return eta * (rotation * retarder);
}

// Row order of the assembled state: (E_V1, e^{ig} E_V2, e^{ig} E_H2, E_H1).
void fill_lower_triangle(Mat4& rho) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            rho(i, j) = std::conj(rho(j, i));
        }
    }
}

} // namespace

ArmCoherence transform_fields(const SchemeParams& p, int arm) {
    p.validate();
    if (arm == 1) {
        return {1, arm_matrix(std::sqrt(p.t), p.theta1, p.alpha1)};
    }
    if (arm == 2) {
        return {2, arm_matrix(std::sqrt(1.0 - p.t), p.theta2, p.alpha2)};
    }
    throw Error(ErrorCode::BadParameter, "arm index must be 1 or 2");
}

TwoQubitState build_density_matrix(const SchemeParams& p) {
    p.validate();
    const double P = p.pump_p;
    const double eta1_sq = p.t;
    const double eta2_sq = 1.0 - p.t;

    // Same-arm moments, one formula per arm.
    const auto vv = [P](double eta_sq, double alpha, double theta) {
        return eta_sq * (1.0 - P * std::cos(alpha) * std::sin(2.0 * theta)) / 2.0;
    };
    const auto hh = [P](double eta_sq, double alpha, double theta) {
        return eta_sq * (1.0 + P * std::cos(alpha) * std::sin(2.0 * theta)) / 2.0;
    };
    const auto vh = [P](double eta_sq, double alpha, double theta) {
        return eta_sq * P * Complex(std::cos(alpha) * std::cos(2.0 * theta), std::sin(alpha)) / 2.0;
    };

    const double s1 = std::sin(p.theta1);
    const double c1 = std::cos(p.theta1);
    const double s2 = std::sin(p.theta2);
    const double c2 = std::cos(p.theta2);
    const double a1 = p.alpha1;
    const double a2 = p.alpha2;
    const double k = p.mu * std::sqrt(eta1_sq * eta2_sq);

    const Complex v1v2 = k * (s1 * s2 + c1 * c2 * expi(a1 - a2) - P * c1 * s2 * expi(a1) - P * s1 * c2 * expi(-a2)) *
                         expi(-p.gamma0) / 2.0;
    const Complex v1h2 = k * (-s1 * c2 + c1 * s2 * expi(a1 - a2) + P * c1 * c2 * expi(a1) - P * s1 * s2 * expi(-a2)) *
                         expi(-p.gamma0) / 2.0;
    const Complex v2h1 = k * (-c1 * s2 + s1 * c2 * expi(-(a1 - a2)) - P * s1 * s2 * expi(-a1) + P * c1 * c2 * expi(a2)) *
                         expi(p.gamma0) / 2.0;
    const Complex h2h1 = k * (c1 * c2 + s1 * s2 * expi(-(a1 - a2)) + P * s1 * c2 * expi(-a1) + P * c1 * s2 * expi(a2)) *
                         expi(p.gamma0) / 2.0;

    Mat4 rho;
    rho(0, 0) = vv(eta1_sq, a1, p.theta1);
    rho(1, 1) = vv(eta2_sq, a2, p.theta2);
    rho(2, 2) = hh(eta2_sq, a2, p.theta2);
    rho(3, 3) = hh(eta1_sq, a1, p.theta1);
    rho(0, 3) = vh(eta1_sq, a1, p.theta1);
    rho(1, 2) = vh(eta2_sq, a2, p.theta2);
    rho(0, 1) = v1v2;
    rho(0, 2) = v1h2;
    rho(1, 3) = v2h1;
    rho(2, 3) = h2h1;
    fill_lower_triangle(rho);
    return TwoQubitState(rho);
}

TwoQubitState build_density_matrix_oracle(const SchemeParams& p) {
    p.validate();
    return build_density_matrix_oracle(p, PolarizationMatrix::canonical_pump(p.pump_p));
}

TwoQubitState build_density_matrix_oracle(const SchemeParams& p, const PolarizationMatrix& pump) {
    const Mat2 arm1 = transform_fields(p, 1).c;
    const Mat2 arm2 = transform_fields(p, 2).c;
    const Mat2& j = pump.matrix(); // j(a, b) = <E_a E_b*>, a, b in {H, V}

    // moments[i][j](a, b) = <E_{a,i} E*_{b,j}> without the stochastic phase.
    const Mat2 m11 = arm1 * j * arm1.adjoint();
    const Mat2 m22 = arm2 * j * arm2.adjoint();
    const Mat2 m12 = arm1 * j * arm2.adjoint();
    const Complex coherence = p.mu * std::polar(1.0, -p.gamma0); // <e^{-i gamma}>

    struct Slot {
        int arm;
        std::size_t pol; // 0 = H, 1 = V
    };
    constexpr std::array<Slot, 4> slots{{{1, 1}, {2, 1}, {2, 0}, {1, 0}}};

    Mat4 rho;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const Slot a = slots[r];
            const Slot b = slots[c];
            Complex v;
            if (a.arm == 1 && b.arm == 1) {
                v = m11(a.pol, b.pol);
            } else if (a.arm == 2 && b.arm == 2) {
                v = m22(a.pol, b.pol);
            } else if (a.arm == 1) {
                v = m12(a.pol, b.pol) * coherence;
            } else {
                v = std::conj(m12(b.pol, a.pol) * coherence);
            }
            rho(r, c) = v;
        }
    }
    return TwoQubitState(rho);
}

bool is_two_d(const TwoQubitState& s, double tol) {
    return two_d_support(s.matrix(), tol).has_value();
}

} // namespace pdcbound
