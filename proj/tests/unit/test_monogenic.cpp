#include "dunkl/errors.hpp"
#include "dunkl/monogenic.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {

std::size_t expected_dimension(int m, int k) {
    return (std::size_t{1} << m) * (scalar_space_dimension(m, k) - scalar_space_dimension(m, k - 1));
}

MVPoly x_power(const MVPoly& m, int j) {
    MVPoly out = m;
    for (int i = 0; i < j; ++i) out = times_vector(out);
    return out;
}

} // namespace

TEST_SUITE("monogenic") {
    TEST_CASE("kernel dimensions") {
        for (const RootSystem& r : {testing::z2_pair(), testing::a2(), make_preset(Preset::Z2, 3, {Rational(1, 2), 1, 0})}) {
            const OperatorContext ctx(r);
            for (int k = 0; k <= (r.dim() == 2 ? 5 : 4); ++k)
                CHECK(monogenic_basis(ctx, k).basis.size() == expected_dimension(r.dim(), k));
        }
        CHECK(expected_dimension(2, 3) == 4);
        CHECK(expected_dimension(3, 2) == 24);
    }

    TEST_CASE("basis elements are monogenic with Gamma eigenvalue -k") {
        const OperatorContext ctx(testing::a2());
        for (int k = 0; k <= 3; ++k)
            for (const auto& m : monogenic_basis(ctx, k).basis) {
                CHECK(m.is_homogeneous());
                CHECK(m.degree() == k);
                CHECK(dunkl_dirac(ctx, m).is_zero());
                CHECK(gamma_op(ctx, m) == m * Rational(-k));
                CHECK(gamma_op(ctx, times_vector(m)) == times_vector(m) * (Rational(k - 1) + ctx.mu()));
            }
    }

    TEST_CASE("degree 0 monogenics are the 2^m constants") {
        const OperatorContext ctx(testing::z2_pair());
        const auto b = monogenic_basis(ctx, 0);
        CHECK(b.basis.size() == 4);
        for (const auto& m : b.basis) CHECK(m.degree() == 0);
    }

    TEST_CASE("harmonic dimensions") {
        const OperatorContext ctx(testing::a2());
        for (int k = 0; k <= 4; ++k) {
            const auto h = harmonic_basis(ctx, k);
            CHECK(h.basis.size() == scalar_space_dimension(3, k) - scalar_space_dimension(3, k - 2));
            for (const auto& p : h.basis) CHECK(dunkl_laplacian(ctx, p).is_zero());
        }
    }

    TEST_CASE("D_k[x^s M_k] lemma") {
        const OperatorContext ctx(testing::z2_pair());
        for (int k = 0; k <= 3; ++k) {
            const MVPoly m = monogenic_basis(ctx, k).basis.back();
            for (int s = 1; s <= 4; ++s)
                CHECK(dunkl_dirac(ctx, x_power(m, s)) == x_power(m, s - 1) * dirac_power_constant(s, k, ctx.mu()));
        }
        CHECK(dirac_power_constant(2, 5, Rational(7)) == -2);
        CHECK(dirac_power_constant(3, 1, Rational(7)) == -11);
    }

    TEST_CASE("Fischer projectors: idempotent, orthogonal, complete on all of P_k") {
        for (const RootSystem& r : {testing::z2_pair(), testing::a2()}) {
            const OperatorContext ctx(r);
            const int k_max = r.dim() == 2 ? 4 : 3;
            for (int k = 0; k <= k_max; ++k) {
                std::size_t dim_sum = 0;
                for (int i = 0; i <= k; ++i) dim_sum += monogenic_basis(ctx, k - i).basis.size();
                CHECK(dim_sum == (std::size_t{1} << r.dim()) * scalar_space_dimension(r.dim(), k));

                // x^j M(k-j) is fixed by P_j and killed by the others
                for (int j = 0; j <= k; ++j)
                    for (const auto& m : monogenic_basis(ctx, k - j).basis) {
                        const MVPoly v = x_power(m, j);
                        for (int i = 0; i <= k; ++i) CHECK(fischer_project(ctx, i, v) == (i == j ? v : MVPoly(r.dim())));
                    }
            }
        }
    }

    TEST_CASE("Fischer projectors on random polynomials (property)") {
        testing::Gen gen(41);
        const OperatorContext ctx(testing::a2());
        for (int k = 0; k <= 4; ++k) {
            const MVPoly p = gen.homogeneous(3, k, 5);
            MVPoly sum(3);
            for (int i = 0; i <= k; ++i) {
                const MVPoly pi = fischer_project(ctx, i, p);
                sum += pi;
                CHECK(fischer_project(ctx, i, pi) == pi);
                CHECK(gamma_op(ctx, pi) == pi * fischer_eigenvalue(ctx, k, i));
                if (i % 2 == 0) {
                    // x^i M with i even: the monogenic factor is (-1)^{i/2} |x|^{-i} P_i p
                    MVPoly q = pi;
                    for (int s = 0; s < i / 2; ++s) {
                        MVPoly quotient(3);
                        REQUIRE(try_div_norm_squared(q, quotient));
                        q = quotient;
                    }
                    CHECK(dunkl_dirac(ctx, q).is_zero());
                }
            }
            CHECK(sum == p);
        }
    }

    TEST_CASE("Fischer projector preconditions") {
        const OperatorContext ctx(testing::z2_pair());
        const MVPoly p = MVPoly::norm_squared(2) + MVPoly::variable(2, 0);
        CHECK_THROWS_AS(fischer_project(ctx, 0, p), PreconditionError);
        CHECK_THROWS_AS(fischer_project(ctx, 3, MVPoly::variable(2, 0)), PreconditionError);
    }

    TEST_CASE("Kelvin inversion round trip") {
        for (const RootSystem& r : {testing::z2_pair(), testing::a2()}) {
            const OperatorContext ctx(r);
            for (int k = 0; k <= 3; ++k)
                for (const auto& m : monogenic_basis(ctx, k).basis) {
                    const RadialScaledFunction q = kelvin_invert(ctx, m);
                    CHECK(apply_to_radial_scaled(ctx, RadialOperator::dirac(), q).is_zero());
                    CHECK(q.homogeneity_degree() == -(Rational(k - 1) + ctx.mu()));
                    const RadialScaledFunction back = kelvin_restore(ctx, q, k);
                    CHECK(back == RadialScaledFunction::from_poly(-m));
                    CHECK(dunkl_dirac(ctx, back.to_poly()).is_zero());
                }
        }
    }

    TEST_CASE("Kelvin inversion rejects non-monogenic input") {
        const OperatorContext ctx(testing::z2_pair());
        CHECK_THROWS_AS(kelvin_invert(ctx, MVPoly::vector_variable(2)), PreconditionError);
        CHECK_THROWS_AS(kelvin_invert(ctx, MVPoly(2)), PreconditionError);
        CHECK_THROWS_AS(kelvin_restore(ctx, RadialScaledFunction::from_poly(MVPoly::vector_variable(2)), 1), PreconditionError);
    }
}
