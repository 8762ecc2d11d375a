#pragma once

// Dense complex square matrices of compile-time dimension.
//
// Only dimensions 2 and 4 are part of the public vocabulary (Mat2, Mat4);
// dimension 8 is instantiated internally for Hermitian dilations.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "pdcbound/error.hpp"

namespace pdcbound {

using Complex = std::complex<double>;

template <std::size_t N>
class Matrix {
public:
    static constexpr std::size_t dim = N;

    Matrix() = default;

    /// Row-major nested initializer; every row must have N entries.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        if (rows.size() != N) {
            throw Error(ErrorCode::DimensionMismatch, "row count differs from matrix dimension");
        }
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != N) {
                throw Error(ErrorCode::DimensionMismatch, "column count differs from matrix dimension");
            }
            std::size_t j = 0;
            for (const auto& v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(const std::array<double, N>& d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    /// |v><v| for a (not necessarily normalized) vector v.
    static Matrix outer(const std::array<Complex, N>& v) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                m(i, j) = v[i] * std::conj(v[j]);
            }
        }
        return m;
    }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

    Matrix adjoint() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                r(i, j) = std::conj((*this)(j, i));
            }
        }
        return r;
    }

    Matrix conjugate() const {
        Matrix r;
        std::transform(data_.begin(), data_.end(), r.data_.begin(),
                       [](const Complex& z) { return std::conj(z); });
        return r;
    }

    Matrix transpose() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                r(i, j) = (*this)(j, i);
            }
        }
        return r;
    }

    Complex trace() const {
        Complex s = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            s += (*this)(i, i);
        }
        return s;
    }

    /// Largest entry modulus.
    double max_abs() const {
        double m = 0.0;
        for (const auto& z : data_) {
            m = std::max(m, std::abs(z));
        }
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : data_) {
            s += std::norm(z);
        }
        return std::sqrt(s);
    }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    Matrix& operator*=(Complex s) {
        for (auto& z : data_) {
            z *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, double s) { return a *= Complex(s); }
    friend Matrix operator*(double s, Matrix a) { return a *= Complex(s); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex aik = a(i, k);
                for (std::size_t j = 0; j < N; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    friend std::array<Complex, N> operator*(const Matrix& a, const std::array<Complex, N>& v) {
        std::array<Complex, N> r{};
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                r[i] += a(i, j) * v[j];
            }
        }
        return r;
    }

    // Exact element-wise comparison; use approx_equal for numerics.
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::array<Complex, N * N> data_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
    return (a - b).max_abs();
}

template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

/// max-norm of m - m^dagger
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
    return max_abs_diff(m, m.adjoint());
}

/// Real eigenvalues (or probabilities) sorted non-ascending.
template <std::size_t N>
struct Spectrum {
    std::array<double, N> values{};

    double operator[](std::size_t k) const { return values[k]; }
    double sum() const {
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        return s;
    }
    bool is_sorted_non_ascending() const {
        return std::is_sorted(values.begin(), values.end(), std::greater<>());
    }
};

template <std::size_t N>
struct EigenDecomposition {
    Spectrum<N> spectrum;
    Matrix<N> vectors; // eigenvectors as columns, same order as spectrum

    Matrix<N> reconstruct() const {
        return vectors * Matrix<N>::diagonal(spectrum.values) * vectors.adjoint();
    }
};

inline constexpr double kPsdClampTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// The input is first checked against ||m - m^dagger||_max <= tol and then
/// symmetrized. Sweeps stop once the off-diagonal Frobenius norm falls below
/// 1e-14 (scaled by max(1, ||m||_F)); eigenpairs are returned sorted
/// non-ascending. Eigenvectors inside degenerate subspaces are arbitrary.
template <std::size_t N>
EigenDecomposition<N> hermitian_eig(const Matrix<N>& m, double tol = 1e-12);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; anything lower raises NotPSD.
template <std::size_t N>
Matrix<N> sqrt_psd(const Matrix<N>& m);

/// Kronecker product, result(2i+k, 2j+l) = a(i,j) * b(k,l).
Mat4 tensor(const Mat2& a, const Mat2& b);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
} // namespace pauli

extern template EigenDecomposition<2> hermitian_eig<2>(const Matrix<2>&, double);
extern template EigenDecomposition<4> hermitian_eig<4>(const Matrix<4>&, double);
extern template EigenDecomposition<8> hermitian_eig<8>(const Matrix<8>&, double);
extern template Matrix<2> sqrt_psd<2>(const Matrix<2>&);
extern template Matrix<4> sqrt_psd<4>(const Matrix<4>&);

} // namespace pdcbound
