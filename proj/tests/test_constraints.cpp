#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include <bellsym/constraints.hpp>
#include <bellsym/derivation.hpp>

#include "test_support.hpp"

using namespace bellsym;
using Catch::Matchers::WithinAbs;

TEST_CASE("validate_density accepts physical states", "[constraints]") {
    REQUIRE_NOTHROW(validate_density(ts::phi_plus_matrix()));
    REQUIRE_NOTHROW(validate_density(ts::semiclassical_matrix()));
    REQUIRE_NOTHROW(validate_density(0.25 * ComplexMatrix4::identity()));
}

TEST_CASE("validate_density names the violated condition", "[constraints]") {
    ComplexMatrix4 skew = ts::phi_plus_matrix();
    skew(0, 1) = ComplexScalar(0.0, 0.2);
    REQUIRE_THROWS_AS(validate_density(skew), NotHermitian);

    REQUIRE_THROWS_AS(validate_density(2.0 * ts::phi_plus_matrix()), TraceNotOne);
    REQUIRE_THROWS_AS(validate_density(ComplexMatrix4::zero()), TraceNotOne);

    // d - c = -0.5 < 0, so one eigenvalue is negative
    REQUIRE_THROWS_AS(validate_density(build_rho_r(0.6, 0.1)), NotPositive);
}

TEST_CASE("partial traces of reference states", "[constraints]") {
    const ComplexMatrix2 half = 0.5 * ComplexMatrix2::identity();

    const DensityMatrix bell = validate_density(ts::phi_plus_matrix());
    REQUIRE_THAT(frobenius_norm(partial_trace_a(bell) - half), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(frobenius_norm(partial_trace_b(bell) - half), WithinAbs(0.0, 1e-15));

    const DensityMatrix scr = validate_density(ts::semiclassical_matrix());
    REQUIRE_THAT(frobenius_norm(partial_trace_a(scr) - half), WithinAbs(0.0, 1e-15));

    // |x_a x_b><x_a x_b| leaves A in |x><x|
    ComplexMatrix4 xx;
    xx(0, 0) = 1.0;
    const DensityMatrix product_xx = validate_density(xx);
    ComplexMatrix2 want_a;
    want_a(0, 0) = 1.0;
    REQUIRE_THAT(frobenius_norm(partial_trace_a(product_xx) - want_a), WithinAbs(0.0, 1e-15));

    // |x_a y_b>: B side is |y><y|
    ComplexMatrix4 xy;
    xy(1, 1) = 1.0;
    const DensityMatrix product_xy = validate_density(xy);
    ComplexMatrix2 want_b;
    want_b(1, 1) = 1.0;
    REQUIRE_THAT(frobenius_norm(partial_trace_b(product_xy) - want_b), WithinAbs(0.0, 1e-15));

    const DensityMatrix psi_minus = validate_density(ts::psi_minus_matrix());
    REQUIRE_THAT(frobenius_norm(partial_trace_b(psi_minus) - half), WithinAbs(0.0, 1e-15));
}

TEST_CASE("reduced_residuals", "[constraints]") {
    for (const auto& m : {ts::phi_plus_matrix(), ts::phi_minus_matrix(), ts::psi_plus_matrix(),
                          ts::psi_minus_matrix(), ts::semiclassical_matrix()}) {
        const auto [ra, rb] = reduced_residuals(validate_density(m));
        REQUIRE_THAT(ra, WithinAbs(0.0, 1e-13));
        REQUIRE_THAT(rb, WithinAbs(0.0, 1e-13));
    }

    ComplexMatrix4 xx;
    xx(0, 0) = 1.0;
    const auto [ra, rb] = reduced_residuals(validate_density(xx));
    REQUIRE_THAT(ra, WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));
    REQUIRE_THAT(rb, WithinAbs(1.0 / std::numbers::sqrt2, 1e-15));
}

TEST_CASE("reduced matrices are unpolarized across the family builders", "[constraints]") {
    std::mt19937_64 rng(301);
    for (int t = 0; t < 30; ++t) {
        const auto [c, d] = ts::random_feasible_rho_r_params(rng);
        const auto [ra, rb] = reduced_residuals(validate_density(build_rho_r(c, d)));
        REQUIRE_THAT(ra, WithinAbs(0.0, 1e-13));
        REQUIRE_THAT(rb, WithinAbs(0.0, 1e-13));

        // same physical region applies to the twist family with c -> -c
        const auto [rta, rtb] = reduced_residuals(validate_density(build_rho_t(-c, d)));
        REQUIRE_THAT(rta, WithinAbs(0.0, 1e-13));
        REQUIRE_THAT(rtb, WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("naming invariance residuals", "[constraints]") {
    std::mt19937_64 rng(302);
    for (int t = 0; t < 20; ++t) {
        // the general symmetric family is invariant under both relabelings
        // by construction
        const auto [c, d] = ts::random_feasible_rho_r_params(rng);
        const DensityMatrix rho = validate_density(build_rho_r(c, d));
        REQUIRE_THAT(invariance_residual(rho, NamingTransform::swap_parties),
                     WithinAbs(0.0, 1e-13));
        REQUIRE_THAT(invariance_residual(rho, NamingTransform::swap_axes),
                     WithinAbs(0.0, 1e-13));
    }

    // members with g != 0 are symmetric too
    for (int t = 0; t < 10; ++t) {
        const DensityMatrix rho = ts::random_rho_aux_density(rng);
        REQUIRE_THAT(invariance_residual(rho, NamingTransform::swap_parties),
                     WithinAbs(0.0, 1e-13));
        REQUIRE_THAT(invariance_residual(rho, NamingTransform::swap_axes),
                     WithinAbs(0.0, 1e-13));
    }

    const DensityMatrix bell = validate_density(ts::phi_plus_matrix());
    REQUIRE(invariance_residual(bell, NamingTransform::swap_parties) == 0.0);
    REQUIRE(invariance_residual(bell, NamingTransform::swap_axes) == 0.0);

    // a one-sided product state moves under the party swap
    ComplexMatrix4 xy;
    xy(1, 1) = 1.0;
    REQUIRE(invariance_residual(validate_density(xy), NamingTransform::swap_parties) > 1.0);
}

TEST_CASE("invariance residual is itself swap-invariant", "[constraints]") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 10; ++t) {
        const DensityMatrix rho = ts::random_density(rng);
        for (NamingTransform nt : {NamingTransform::swap_parties, NamingTransform::swap_axes}) {
            const ComplexMatrix4 transformed = nt == NamingTransform::swap_parties
                                                   ? swap_parties(rho.matrix())
                                                   : swap_axes(rho.matrix());
            const DensityMatrix rho2 = validate_density(transformed);
            REQUIRE_THAT(invariance_residual(rho2, nt),
                         WithinAbs(invariance_residual(rho, nt), 1e-12));
        }
    }
}

TEST_CASE("rotational residual", "[constraints]") {
    REQUIRE_THAT(rotational_residual(validate_density(ts::phi_plus_matrix()), 32),
                 WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(rotational_residual(validate_density(ts::psi_minus_matrix()), 32),
                 WithinAbs(0.0, 1e-12));
    // phi- is twist-invariant but not rotation-invariant
    REQUIRE(rotational_residual(validate_density(ts::phi_minus_matrix()), 32) > 0.1);

    REQUIRE_THROWS_AS(rotational_residual(validate_density(ts::phi_plus_matrix()), 3),
                      std::invalid_argument);
}

TEST_CASE("twist residual", "[constraints]") {
    REQUIRE_THAT(twist_residual(validate_density(ts::phi_minus_matrix()), 32),
                 WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(twist_residual(validate_density(ts::psi_plus_matrix()), 32),
                 WithinAbs(0.0, 1e-12));
    REQUIRE(twist_residual(validate_density(ts::phi_plus_matrix()), 32) > 0.1);
}

TEST_CASE("family members pass their designated residual", "[constraints]") {
    std::mt19937_64 rng(304);
    for (int t = 0; t < 25; ++t) {
        const auto [c, d] = ts::random_feasible_rho_r_params(rng);
        REQUIRE_THAT(rotational_residual(validate_density(build_rho_r(c, d)), 64),
                     WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(twist_residual(validate_density(build_rho_t(-c, d)), 64),
                     WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("grid refinement never lowers the residual", "[constraints]") {
    // doubling the grid evaluates a superset of angles
    for (const auto& m : {ts::phi_minus_matrix(), ts::semiclassical_matrix()}) {
        const DensityMatrix rho = validate_density(m);
        for (int g : {4, 8, 16, 32}) {
            REQUIRE(rotational_residual(rho, 2 * g) >= rotational_residual(rho, g) - 1e-15);
            REQUIRE(twist_residual(rho, 2 * g) >= twist_residual(rho, g) - 1e-15);
        }
    }
}
