#include "pdcbound/random.hpp"

#include <numbers>

namespace pdcbound {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed) ^ splitmix64(stream ^ 0x5851f42d4c957f2dULL));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

template <std::size_t N>
Matrix<N> random_haar_unitary(Rng& rng) {
    static_assert(N == 2 || N == 4, "random_haar_unitary: dimension must be 2 or 4");
    Matrix<N> a;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            a(i, j) = rng.complex_normal();
        }
    }

    // Modified Gram-Schmidt on the columns, run twice for orthogonality at
    // machine precision. r_jj accumulates the triangular diagonal.
    Matrix<N> q = a;
    std::array<Complex, N> r_diag{};
    r_diag.fill(1.0);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < N; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < N; ++i) {
                    proj += std::conj(q(i, k)) * q(i, j);
                }
                for (std::size_t i = 0; i < N; ++i) {
                    q(i, j) -= proj * q(i, k);
                }
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                norm += std::norm(q(i, j));
            }
            norm = std::sqrt(norm);
            r_diag[j] *= norm;
            for (std::size_t i = 0; i < N; ++i) {
                q(i, j) /= norm;
            }
        }
    }
    for (std::size_t j = 0; j < N; ++j) {
        const Complex phase = r_diag[j] / std::abs(r_diag[j]);
        for (std::size_t i = 0; i < N; ++i) {
            q(i, j) *= phase;
        }
    }
    return q;
}

template <std::size_t N>
Spectrum<N> random_spectrum(Rng& rng) {
    // Normalized exponentials are uniform on the simplex.
    Spectrum<N> s;
    double total = 0.0;
    for (auto& v : s.values) {
        v = -std::log(1.0 - rng.uniform());
        total += v;
    }
    for (auto& v : s.values) {
        v /= total;
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

template <std::size_t N>
Matrix<N> random_density_matrix(Rng& rng) {
    const auto spec = random_spectrum<N>(rng);
    const auto u = random_haar_unitary<N>(rng);
    Matrix<N> rho = u * Matrix<N>::diagonal(spec.values) * u.adjoint();
    return 0.5 * (rho + rho.adjoint());
}

template <std::size_t N>
Matrix<N> random_hermitian(Rng& rng) {
    Matrix<N> h;
    for (std::size_t i = 0; i < N; ++i) {
        h(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < N; ++j) {
            h(i, j) = rng.complex_normal() * std::numbers::sqrt2 * 0.5;
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

template Matrix<2> random_haar_unitary<2>(Rng&);
template Matrix<4> random_haar_unitary<4>(Rng&);
template Spectrum<2> random_spectrum<2>(Rng&);
template Spectrum<4> random_spectrum<4>(Rng&);
template Matrix<2> random_density_matrix<2>(Rng&);
template Matrix<4> random_density_matrix<4>(Rng&);
template Matrix<2> random_hermitian<2>(Rng&);
template Matrix<4> random_hermitian<4>(Rng&);

} // namespace pdcbound
