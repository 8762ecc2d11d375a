#include "pdcbound/matrix.hpp"

#include <numeric>
#include <string>

namespace pdcbound {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::NotTwoD: return "NotTwoD";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on the (p,q) plane: a <- G^dagger a G, v <- v G.
template <std::size_t N>
void rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = apq / r; // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex gqp = -s * std::conj(phase); // G(q,p)
    const Complex gqq = c * std::conj(phase);  // G(q,q)

    for (std::size_t k = 0; k < N; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * c + akq * gqp;
        a(k, q) = akp * s + akq * gqq;
    }
    for (std::size_t k = 0; k < N; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(gqp) * aqk;
        a(q, k) = s * apk + std::conj(gqq) * aqk;
    }
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < N; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * c + vkq * gqp;
        v(k, q) = vkp * s + vkq * gqq;
    }
}

} // namespace

template <std::size_t N>
EigenDecomposition<N> hermitian_eig(const Matrix<N>& m, double tol) {
    if (hermiticity_defect(m) > tol) {
        throw Error(ErrorCode::NotHermitian,
                    "hermitian_eig: ||m - m^dagger||_max = " + std::to_string(hermiticity_defect(m)));
    }
    Matrix<N> a = 0.5 * (m + m.adjoint());
    Matrix<N> v = Matrix<N>::identity();

    const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, a.frobenius_norm());
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > kJacobiMaxSweeps) {
            throw Error(ErrorCode::NoConvergence, "hermitian_eig: sweep budget exhausted");
        }
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.spectrum.values[k] = a(order[k], order[k]).real();
        for (std::size_t row = 0; row < N; ++row) {
            out.vectors(row, k) = v(row, order[k]);
        }
    }
    return out;
}

template <std::size_t N>
Matrix<N> sqrt_psd(const Matrix<N>& m) {
    const auto eig = hermitian_eig(m, kPsdClampTolerance);
    std::array<double, N> roots{};
    for (std::size_t k = 0; k < N; ++k) {
        const double ev = eig.spectrum[k];
        if (ev < -kPsdClampTolerance) {
            throw Error(ErrorCode::NotPSD, "sqrt_psd: eigenvalue " + std::to_string(ev));
        }
        roots[k] = std::sqrt(std::max(ev, 0.0));
    }
    return eig.vectors * Matrix<N>::diagonal(roots) * eig.vectors.adjoint();
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

namespace pauli {
Mat2 identity() { return Mat2::identity(); }
Mat2 x() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }
Mat2 y() { return Mat2{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
Mat2 z() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }
} // namespace pauli

template EigenDecomposition<2> hermitian_eig<2>(const Matrix<2>&, double);
template EigenDecomposition<4> hermitian_eig<4>(const Matrix<4>&, double);
template EigenDecomposition<8> hermitian_eig<8>(const Matrix<8>&, double);
template Matrix<2> sqrt_psd<2>(const Matrix<2>&);
template Matrix<4> sqrt_psd<4>(const Matrix<4>&);

} // namespace pdcbound
