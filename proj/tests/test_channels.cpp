#include <doctest.h>

#include "pdcbound/channels.hpp"
#include "pdcbound/polarization.hpp"
#include "pdcbound/random.hpp"
#include "pdcbound/twoqubit.hpp"

using namespace pdcbound;

namespace {

KrausChannel flip_mixture() {
    const double h = std::sqrt(0.5);
    return KrausChannel({h * Mat4::identity(), h * tensor(pauli::x(), pauli::x())});
}

Mat4 random_embedded_pump(Rng& rng) {
    return embed_pump(PolarizationMatrix(random_density_matrix<2>(rng))).sigma;
}

} // namespace

TEST_CASE("validate_doubly_stochastic: examples") {
    auto v = validate_doubly_stochastic(KrausChannel({Mat4::identity()}));
    CHECK(v.trace_preserving);
    CHECK(v.unital);

    v = validate_doubly_stochastic(flip_mixture());
    CHECK(v.trace_preserving);
    CHECK(v.unital);

    // Amplitude damping (g = 0.5) on the signal qubit: sum M M^dagger = diag(1+g, 1-g) (x) I.
    const double g = 0.5;
    const Mat2 k0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - g)}};
    const Mat2 k1{{0.0, std::sqrt(g)}, {0.0, 0.0}};
    v = validate_doubly_stochastic(KrausChannel({tensor(k0, Mat2::identity()), tensor(k1, Mat2::identity())}));
    CHECK(v.trace_preserving);
    CHECK_FALSE(v.unital);
    CHECK(v.unital_defect == doctest::Approx(g));
}

TEST_CASE("KrausChannel needs operators") {
    CHECK_THROWS_AS(KrausChannel(std::vector<Mat4>{}), Error);
    CHECK_THROWS_AS(KrausChannel({Mat4::identity()}, {"a", "b"}), Error);
}

TEST_CASE("apply_channel: identity, flip mixture, unitary") {
    Rng rng(4);
    const Mat4 sigma = random_embedded_pump(rng);
    CHECK(approx_equal(apply_channel(KrausChannel({Mat4::identity()}), sigma), sigma, 1e-15));

    const Mat4 hh = Mat4::diagonal({1.0, 0.0, 0.0, 0.0});
    CHECK(approx_equal(apply_channel(flip_mixture(), hh), Mat4::diagonal({0.5, 0.0, 0.0, 0.5}), 1e-15));

    const Mat4 u = random_haar_unitary<4>(rng);
    const Mat4 out = apply_channel(KrausChannel({u}), sigma);
    const auto before = hermitian_eig(sigma).spectrum;
    const auto after = hermitian_eig(out, 1e-10).spectrum;
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(before[k] - after[k]) <= 1e-10);
    }

    CHECK_THROWS_AS(apply_channel(flip_mixture(), Mat4::identity()), Error);
}

TEST_CASE("is_majorized_by: examples") {
    Rng rng(6);
    const Mat4 sigma = random_embedded_pump(rng);
    CHECK(is_majorized_by(sigma, sigma, 1e-12).holds);
    CHECK(is_majorized_by(0.25 * Mat4::identity(), sigma, 1e-12).holds);

    const auto r = is_majorized_by(Mat4::diagonal({0.7, 0.3, 0.0, 0.0}), Mat4::diagonal({0.6, 0.4, 0.0, 0.0}), 1e-12);
    CHECK_FALSE(r.holds);
    CHECK(r.worst_slack == doctest::Approx(-0.1));
    CHECK(r.partial_sums_target[0] == doctest::Approx(0.7));
    CHECK(r.partial_sums_source[3] == doctest::Approx(1.0));
}

TEST_CASE("random_mixed_unitary_channel") {
    const auto single = random_mixed_unitary_channel(1, 9);
    REQUIRE(single.operators().size() == 1);
    Rng rng(10);
    const Mat4 sigma = random_embedded_pump(rng);
    const auto before = hermitian_eig(sigma).spectrum;
    const auto after = hermitian_eig(apply_channel(single, sigma), 1e-10).spectrum;
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(before[k] - after[k]) <= 1e-10);
    }

    const auto four = random_mixed_unitary_channel(4, 3);
    const auto v = validate_doubly_stochastic(four);
    CHECK(v.trace_preserving);
    CHECK(v.unital);

    const Mat4 pump = embed_pump(PolarizationMatrix::canonical_pump(0.5)).sigma;
    CHECK(is_majorized_by(apply_channel(four, pump), pump, 1e-9).holds);

    CHECK(random_mixed_unitary_channel(4, 3).operators() == four.operators());
    CHECK_THROWS_AS(random_mixed_unitary_channel(0, 1), Error);
}

TEST_CASE("doubly stochastic outputs: majorization, composition, and the (1+P)/2 bound") {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const auto ch = random_mixed_unitary_channel(1 + i % 6, 1000 + static_cast<std::uint64_t>(i));
        REQUIRE(validate_doubly_stochastic(ch).doubly_stochastic());
        const PolarizationMatrix j(random_density_matrix<2>(rng));
        const double p = degree_of_polarization(j);
        const Mat4 sigma = embed_pump(j).sigma;

        Mat4 rho = apply_channel(ch, sigma);
        rho = 0.5 * (rho + rho.adjoint());
        REQUIRE(is_majorized_by(rho, sigma, 1e-9).holds);
        REQUIRE(concurrence(TwoQubitState(rho)) <= (1.0 + p) / 2.0 + 1e-9);

        const auto second = random_mixed_unitary_channel(2, 5000 + static_cast<std::uint64_t>(i));
        const auto both = compose(second, ch);
        REQUIRE(validate_doubly_stochastic(both).doubly_stochastic());
        REQUIRE(max_abs_diff(apply_channel(both, sigma), apply_channel(second, rho)) <= 1e-12);
        REQUIRE(is_majorized_by(apply_channel(both, sigma), sigma, 1e-9).holds);
    }
}

TEST_CASE("the saturating state is reachable from the pump by a unitary") {
    // Both share the spectrum ((1+P)/2, (1-P)/2, 0, 0), so U = V_rho V_sigma^dagger maps one onto the other.
    for (double p : {0.0, 0.3, 0.8}) {
        const Mat4 sigma = embed_pump(PolarizationMatrix::canonical_pump(p)).sigma;
        const auto target = construct_max_entangled_state(Spectrum<4>{{(1 + p) / 2, (1 - p) / 2, 0.0, 0.0}});
        const auto es = hermitian_eig(sigma);
        const auto& et = target.eigen();
        const Mat4 u = et.vectors * es.vectors.adjoint();
        const Mat4 rho = apply_channel(KrausChannel({u}), sigma);
        CHECK(max_abs_diff(rho, target.matrix()) <= 1e-12);
        CHECK(concurrence(TwoQubitState(0.5 * (rho + rho.adjoint()))) == doctest::Approx((1 + p) / 2).epsilon(1e-9));
    }
}
