#pragma once

// Deterministic random numbers.
//
// Algorithm identity (part of the reproducibility contract, see kRngAlgorithm):
//   * stream seeding: SplitMix64 finalizer applied to (seed, stream id)
//   * engine: std::mt19937_64, whose output sequence is fixed by the C++ standard
//   * uniform doubles: top 53 bits of one engine word, scaled by 2^-53
//   * normals: Box-Muller on two uniforms
// Standard-library distributions are deliberately not used; their output is
// implementation-defined.

#include <cstdint>
#include <random>
#include <string_view>

#include "pdcbound/matrix.hpp"

namespace pdcbound {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-stream/v1";

/// SplitMix64 output function; a bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream keyed by (seed, stream). Scheduling order of the
    /// caller never affects what a given stream produces.
    static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal.
    double normal();
    Complex complex_normal() {
        const double re = normal();
        return {re, normal()};
    }

private:
    std::mt19937_64 engine_;
};

/// Haar-distributed unitary: Gaussian fill, Gram-Schmidt QR, column phases
/// fixed by the triangular diagonal. Only N = 2 and N = 4 are provided.
template <std::size_t N>
Matrix<N> random_haar_unitary(Rng& rng);

template <std::size_t N>
Matrix<N> random_haar_unitary(std::uint64_t seed) {
    Rng rng(seed);
    return random_haar_unitary<N>(rng);
}

/// Probability vector drawn uniformly from the simplex, sorted non-ascending.
template <std::size_t N>
Spectrum<N> random_spectrum(Rng& rng);

/// U diag(p) U^dagger with p uniform on the simplex and U Haar.
template <std::size_t N>
Matrix<N> random_density_matrix(Rng& rng);

/// Hermitian matrix with independent Gaussian entries (GUE-like scaling).
template <std::size_t N>
Matrix<N> random_hermitian(Rng& rng);

extern template Matrix<2> random_haar_unitary<2>(Rng&);
extern template Matrix<4> random_haar_unitary<4>(Rng&);
extern template Spectrum<2> random_spectrum<2>(Rng&);
extern template Spectrum<4> random_spectrum<4>(Rng&);
extern template Matrix<2> random_density_matrix<2>(Rng&);
extern template Matrix<4> random_density_matrix<4>(Rng&);
extern template Matrix<2> random_hermitian<2>(Rng&);
extern template Matrix<4> random_hermitian<4>(Rng&);

} // namespace pdcbound
