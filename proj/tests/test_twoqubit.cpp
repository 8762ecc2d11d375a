#include <doctest.h>

#include "oracles.hpp"
#include "pdcbound/random.hpp"
#include "pdcbound/twoqubit.hpp"

using namespace pdcbound;

namespace {

const double kH = std::sqrt(0.5);
const std::array<Complex, 4> kHH{1.0, 0.0, 0.0, 0.0};
const std::array<Complex, 4> kVV{0.0, 0.0, 0.0, 1.0};
const std::array<Complex, 4> kPhiPlus{kH, 0.0, 0.0, kH};

Spectrum<4> spec(double a, double b, double c, double d) {
    return Spectrum<4>{{a, b, c, d}};
}

Mat4 local_unitary(Rng& rng) {
    return tensor(random_haar_unitary<2>(rng), random_haar_unitary<2>(rng));
}

} // namespace

TEST_CASE("spin_flip: fixed points and |HH> -> |VV>") {
    const TwoQubitState mixed(0.25 * Mat4::identity());
    CHECK(approx_equal(spin_flip(mixed), 0.25 * Mat4::identity(), 1e-15));

    CHECK(approx_equal(spin_flip(TwoQubitState::from_pure(kHH)), Mat4::outer(kVV), 1e-15));

    const auto bell = TwoQubitState::from_pure(kPhiPlus);
    CHECK(approx_equal(spin_flip(bell), bell.matrix(), 1e-15));
}

TEST_CASE("spin_flip: involution, trace preserving, PSD") {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const TwoQubitState s(random_density_matrix<4>(rng));
        const Mat4 f = spin_flip(s);
        REQUIRE(max_abs_diff(spin_flip(TwoQubitState(f)), s.matrix()) <= 1e-12);
        REQUIRE(std::abs(f.trace() - s.matrix().trace()) <= 1e-14);
        REQUIRE(hermitian_eig(f).spectrum[3] >= -1e-10);
    }
}

TEST_CASE("concurrence: product, Bell and Werner states") {
    CHECK(concurrence(TwoQubitState::from_pure(kHH)) == 0.0);
    CHECK(std::abs(concurrence(TwoQubitState::from_pure(kPhiPlus)) - 1.0) <= 1e-12);

    // Brute-force evaluation agrees with the closed form (3p - 1)/2 at p = 0.5.
    const Mat4 w = oracle::werner(0.5);
    CHECK(oracle::wootters_textbook(w) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(std::abs(concurrence(TwoQubitState(w)) - 0.25) <= 1e-12);
}

TEST_CASE("concurrence: pure states match 2|ad - bc|") {
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        std::array<Complex, 4> psi{};
        for (auto& z : psi) {
            z = rng.complex_normal();
        }
        const double want = oracle::pure_state_concurrence(psi);
        REQUIRE(std::abs(concurrence(TwoQubitState::from_pure(psi)) - want) <= 1e-12);
    }
}

TEST_CASE("concurrence: agrees with the textbook route on full-rank states") {
    Rng rng(34);
    for (int i = 0; i < 1000; ++i) {
        const Mat4 rho = random_density_matrix<4>(rng);
        const auto want = oracle::wootters_s_textbook(rho);
        const auto got = concurrence_detail(TwoQubitState(rho));
        for (std::size_t k = 0; k < 4; ++k) {
            REQUIRE(std::abs(got.s[k] - want[k]) <= 1e-7);
        }
    }
}

TEST_CASE("concurrence: range and local-unitary invariance") {
    Rng rng(55);
    for (int i = 0; i < 1000; ++i) {
        // Mix in low-rank states, where precision is hardest.
        Mat4 rho;
        if (i % 3 == 0) {
            std::array<Complex, 4> a{}, b{};
            for (std::size_t k = 0; k < 4; ++k) {
                a[k] = rng.complex_normal();
                b[k] = rng.complex_normal();
            }
            const double w = rng.uniform();
            rho = w * Mat4::outer(a) * (1.0 / std::real(Mat4::outer(a).trace())) +
                  (1.0 - w) * Mat4::outer(b) * (1.0 / std::real(Mat4::outer(b).trace()));
        } else {
            rho = random_density_matrix<4>(rng);
        }
        rho = 0.5 * (rho + rho.adjoint());
        const double c = concurrence(TwoQubitState(rho));
        REQUIRE(c >= 0.0);
        REQUIRE(c <= 1.0);

        const Mat4 u = local_unitary(rng);
        Mat4 moved = u * rho * u.adjoint();
        moved = 0.5 * (moved + moved.adjoint());
        REQUIRE(std::abs(concurrence(TwoQubitState(moved)) - c) <= 1e-9);
    }
}

TEST_CASE("unitary_max_concurrence: examples") {
    CHECK(unitary_max_concurrence(spec(1.0, 0.0, 0.0, 0.0)) == 1.0);
    for (double p : {0.0, 0.25, 0.5, 0.9, 1.0}) {
        CHECK(unitary_max_concurrence(spec((1.0 + p) / 2.0, (1.0 - p) / 2.0, 0.0, 0.0)) ==
              doctest::Approx((1.0 + p) / 2.0).epsilon(1e-15));
    }
    CHECK(unitary_max_concurrence(spec(0.25, 0.25, 0.25, 0.25)) == 0.0);

    CHECK_THROWS_AS(unitary_max_concurrence(spec(0.2, 0.3, 0.4, 0.1)), Error);
    CHECK_THROWS_AS(unitary_max_concurrence(spec(0.6, 0.3, 0.2, 0.1)), Error);
    CHECK_THROWS_AS(unitary_max_concurrence(spec(1.2, 0.0, 0.0, -0.2)), Error);
}

TEST_CASE("construct_max_entangled_state: examples") {
    auto s = construct_max_entangled_state(spec(1.0, 0.0, 0.0, 0.0));
    CHECK(approx_equal(s.matrix(), Mat4::outer(kPhiPlus), 1e-15));
    CHECK(std::abs(concurrence(s) - 1.0) <= 1e-12);

    s = construct_max_entangled_state(spec(0.75, 0.25, 0.0, 0.0));
    CHECK(std::abs(concurrence(s) - 0.75) <= 1e-12);

    // 0.4 - 0.2 - 2 sqrt(0.3 * 0.1) < 0, so the bound clamps to zero.
    const auto low = spec(0.4, 0.3, 0.2, 0.1);
    CHECK(0.4 - 0.2 - 2.0 * std::sqrt(0.03) < 0.0);
    CHECK(unitary_max_concurrence(low) == 0.0);
    s = construct_max_entangled_state(low);
    CHECK(concurrence(s) <= 1e-12);
    CHECK(oracle::wootters_textbook(s.matrix()) <= 1e-7);
}

TEST_CASE("construct_max_entangled_state: spectrum and tightness over random spectra") {
    Rng rng(89);
    for (int i = 0; i < 1000; ++i) {
        const auto sp = random_spectrum<4>(rng);
        const auto s = construct_max_entangled_state(sp);
        for (std::size_t k = 0; k < 4; ++k) {
            REQUIRE(std::abs(s.spectrum()[k] - sp[k]) <= 1e-10);
        }
        REQUIRE(std::abs(concurrence(s) - unitary_max_concurrence(sp)) <= 1e-9);
    }
}

TEST_CASE("unitary orbit never exceeds the spectral bound") {
    Rng rng(144);
    for (int i = 0; i < 200; ++i) {
        const auto sp = random_spectrum<4>(rng);
        const double bound = unitary_max_concurrence(sp);
        for (int j = 0; j < 20; ++j) {
            const Mat4 u = random_haar_unitary<4>(rng);
            Mat4 rho = u * Mat4::diagonal(sp.values) * u.adjoint();
            rho = 0.5 * (rho + rho.adjoint());
            REQUIRE(concurrence(TwoQubitState(rho)) <= bound + 1e-9);
        }
    }
}

TEST_CASE("two_d_decompose: examples") {
    auto d = two_d_decompose(TwoQubitState::from_pure(kPhiPlus));
    CHECK(d.support == std::array<std::size_t, 2>{basis::HH, basis::VV});
    CHECK(d.p_tilde == doctest::Approx(1.0).epsilon(1e-12));

    const TwoQubitState flat(Mat4::diagonal({0.5, 0.0, 0.0, 0.5}));
    d = two_d_decompose(flat);
    CHECK(d.p_tilde == doctest::Approx(0.0));
    CHECK(concurrence(flat) == 0.0);

    // Block [[1/2, p/2], [p/2, 1/2]] on (HH, VV); concurrence is twice the
    // off-diagonal modulus.
    const double p = 0.75;
    Mat4 rho = p * Mat4::outer(kPhiPlus) + (1.0 - p) * 0.5 * Mat4::diagonal({1.0, 0.0, 0.0, 1.0});
    const TwoQubitState partial(rho);
    d = two_d_decompose(partial);
    CHECK(d.p_tilde == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(2.0 * std::abs(rho(0, 3)) == doctest::Approx(0.75));
    CHECK(oracle::wootters_textbook(rho) == doctest::Approx(0.75).epsilon(1e-7));
    CHECK(std::abs(concurrence(partial) - 0.75) <= 1e-12);
    CHECK(max_abs_diff(d.p_tilde * Mat2::outer(d.pure_state) + (1.0 - d.p_tilde) * 0.5 * Mat2::identity(), d.block) <=
          1e-10);
}

TEST_CASE("two_d_decompose: single occupied level and rejection") {
    const auto d = two_d_decompose(TwoQubitState::from_pure(kVV));
    CHECK(d.support == std::array<std::size_t, 2>{basis::HH, basis::VV});
    CHECK(d.p_tilde == doctest::Approx(1.0));

    try {
        (void)two_d_decompose(TwoQubitState(0.25 * Mat4::identity()));
        FAIL("expected NotTwoD");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTwoD);
    }
    // Two diagonals but coherence leaking out of the block.
    Mat4 leak = Mat4::diagonal({0.5, 0.0, 0.0, 0.5});
    leak(0, 1) = 1e-6;
    leak(1, 0) = 1e-6;
    CHECK_FALSE(two_d_support(leak).has_value());
}

TEST_CASE("2D states never exceed p_tilde") {
    Rng rng(233);
    constexpr std::array<std::array<std::size_t, 2>, 6> supports{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (int i = 0; i < 1000; ++i) {
        const Mat2 block = random_density_matrix<2>(rng);
        const auto& sup = supports[static_cast<std::size_t>(i) % supports.size()];
        Mat4 rho;
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                rho(sup[a], sup[b]) = block(a, b);
            }
        }
        const TwoQubitState s(rho);
        const auto d = two_d_decompose(s);
        REQUIRE(d.support == sup);
        REQUIRE(concurrence(s) <= d.p_tilde + 1e-9);
    }
}

TEST_CASE("TwoQubitState validation") {
    CHECK_THROWS_AS(TwoQubitState(Mat4::identity()), Error);
    CHECK_THROWS_AS(TwoQubitState(Mat4::diagonal({1.5, -0.5, 0.0, 0.0})), Error);
    Mat4 skew = 0.25 * Mat4::identity();
    skew(0, 1) = 0.1;
    CHECK_THROWS_AS(TwoQubitState{skew}, Error);
}
