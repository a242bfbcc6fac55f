#include "dunkl/errors.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/monogenic.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {

MVPoly one_plus(Family f, int dim) {
    return MVPoly::scalar(dim, 1) + MVPoly::norm_squared(dim) * Rational(f == Family::ball ? -1 : 1);
}

const Family kFamilies[] = {Family::ball, Family::euclid};

} // namespace

TEST_SUITE("gegenbauer") {
    TEST_CASE("D_alpha on a monogenic") {
        const OperatorContext ctx(testing::z2_pair());
        const Rational alpha(3, 7);
        for (int k = 0; k <= 2; ++k)
            for (const auto& m : monogenic_basis(ctx, k).basis) {
                CHECK(d_alpha(ctx, Family::ball, alpha, m) == times_vector(m) * (-2 * (alpha + 1)));
                CHECK(d_alpha(ctx, Family::euclid, alpha, m) == times_vector(m) * (2 * (alpha + 1)));
            }
        testing::Gen gen(5);
        const MVPoly f = gen.poly(2, 3);
        CHECK(d_alpha(ctx, Family::euclid, Rational(-1), f) == one_plus(Family::euclid, 2) * dunkl_dirac(ctx, f));
        CHECK_THROWS_AS(d_alpha(ctx, Family::ball, Rational(-1), f), PreconditionError);
        CHECK_THROWS_AS(d_alpha(ctx, Family::ball, Rational(-3, 2), f), PreconditionError);
        CHECK_NOTHROW(d_alpha(ctx, Family::euclid, Rational(-3, 2), f));
    }

    TEST_CASE("D_alpha agrees with the factored form for integer alpha") {
        // (1 -+ |x|^2)^alpha D_alpha f == D_k[(1 -+ |x|^2)^{alpha+1} f]
        testing::Gen gen(17);
        for (const RootSystem& r : {testing::z2_pair(), testing::a2()}) {
            const OperatorContext ctx(r);
            for (const Family fam : kFamilies)
                for (unsigned a = 0; a <= 2; ++a) {
                    const MVPoly f = gen.poly(r.dim(), 3);
                    const MVPoly w = one_plus(fam, r.dim());
                    CHECK(power(w, a) * d_alpha(ctx, fam, Rational(a), f) == dunkl_dirac(ctx, power(w, a + 1) * f));
                }
        }
    }

    TEST_CASE("C_2 and G_2 coefficients") {
        const OperatorContext ctx(testing::a2());
        const Rational mu = ctx.mu();
        for (const Rational alpha : {Rational(1, 2), Rational(-2, 3), Rational(4)})
            for (int k = 0; k <= 2; ++k) {
                const MVPoly m = monogenic_basis(ctx, k).basis.front();
                const auto c = gegenbauer(ctx, Family::ball, 2, alpha, m);
                CHECK(c.coeff(2) == 2 * (alpha + 2) * (2 * alpha + 2 + 2 * k + mu));
                CHECK(c.coeff(1) == 0);
                CHECK(c.coeff(0) == 2 * (alpha + 2) * (2 * k + mu));
                const auto g = gegenbauer(ctx, Family::euclid, 2, alpha, m);
                CHECK(g.coeff(2) == c.coeff(2));
                CHECK(g.coeff(0) == -c.coeff(0));

                CHECK(gegenbauer(ctx, Family::ball, 0, alpha, m).coeffs == std::vector<Rational>{1});
                CHECK(gegenbauer(ctx, Family::ball, 1, alpha, m).coeff(1) == -2 * (alpha + 1));
                CHECK(gegenbauer(ctx, Family::euclid, 1, alpha, m).coeff(1) == 2 * (alpha + 1));
            }
    }

    TEST_CASE("coefficients do not depend on the monogenic") {
        const OperatorContext ctx(testing::z2_pair());
        for (const Family fam : kFamilies)
            for (int k = 0; k <= 2; ++k) {
                const auto basis = monogenic_basis(ctx, k).basis;
                const auto first = gegenbauer(ctx, fam, 4, Rational(2, 5), basis.front()).coeffs;
                for (const auto& m : basis) {
                    const auto g = gegenbauer(ctx, fam, 4, Rational(2, 5), m);
                    CHECK(g.coeffs == first);
                    CHECK(g.expand() == gegenbauer_expanded(ctx, fam, 4, Rational(2, 5), m));
                }
            }
    }

    TEST_CASE("parity of coefficients") {
        const OperatorContext ctx(testing::z2_pair());
        const MVPoly m = monogenic_basis(ctx, 1).basis.front();
        for (const Family fam : kFamilies)
            for (int t = 0; t <= 5; ++t) {
                const auto g = gegenbauer(ctx, fam, t, Rational(1, 3), m);
                for (int j = 0; j <= t; ++j)
                    if ((j - t) % 2 != 0) CHECK(g.coeff(j) == 0);
                CHECK(g.coeff(t) != 0);
            }
    }

    TEST_CASE("constants") {
        const Rational a(1, 2), mu(5, 3);
        const int k = 2;
        for (const Family fam : kFamilies) {
            CHECK(annihilation_constant(fam, a, 0, mu, k) == 0);
            CHECK(annihilation_constant(fam, a, 2, mu, k) == 2 * (2 * a + 2 + mu + 2 * k));
            CHECK(annihilation_constant(fam, a, 1, mu, k) == (2 * a + 2) * (mu + 2 * k));
        }
        CHECK(three_term_constants(a, 2, mu, k) == std::pair<Rational, Rational>(a + 1, mu + 2 * k));
        CHECK(three_term_constants(a, 1, mu, k).second == 0);
        CHECK(three_term_constants(a, 3, mu, k) == std::pair<Rational, Rational>(a + mu / 2 + k + 1, 2));
    }

    TEST_CASE("explicit coefficients and closed forms match the operator construction") {
        for (const RootSystem& r : {testing::z2_pair(), testing::a2()}) {
            const OperatorContext ctx(r);
            for (const Family fam : kFamilies)
                for (const Rational alpha : {Rational(1, 2), Rational(-1, 4)})
                    for (int k = 0; k <= 1; ++k) {
                        const MVPoly m = monogenic_basis(ctx, k).basis.back();
                        for (int t = 0; t <= 5; ++t) {
                            const auto g = gegenbauer(ctx, fam, t, alpha, m);
                            CHECK(closed_form(fam, t, alpha, k, ctx.mu()).coeffs == g.coeffs);
                            for (int j = 0; j <= t + 1; ++j)
                                CHECK(explicit_coefficient(fam, t, j, alpha, k, ctx.mu()) == g.coeff(j));
                        }
                    }
        }
    }

    TEST_CASE("a_0 of even degree") {
        const Rational alpha(2, 9), mu(7, 2);
        const int k = 1;
        for (int t = 0; t <= 3; ++t) {
            Rational expected = pochhammer(alpha + t + 1, static_cast<unsigned>(t)) * pochhammer(mu / 2 + k, static_cast<unsigned>(t));
            for (int i = 0; i < 2 * t; ++i) expected *= 2;
            CHECK(explicit_coefficient(Family::ball, 2 * t, 0, alpha, k, mu) == expected);
        }
    }

    TEST_CASE("identity residuals vanish") {
        const OperatorContext ctx(testing::z2_pair());
        testing::Gen gen(23);
        for (const Family fam : kFamilies)
            for (int trial = 0; trial < 2; ++trial) {
                const Rational alpha = gen.rational(3, 7) + Rational(1, 11);
                for (int k = 0; k <= 2; ++k) {
                    const MVPoly m = monogenic_basis(ctx, k).basis.front();
                    for (int t = 0; t <= 4; ++t) {
                        CHECK(verify_annihilation(ctx, fam, t, alpha, m).is_zero());
                        CHECK(verify_differential_equation(ctx, fam, t, alpha, m).is_zero());
                        CHECK(verify_recurrence(ctx, fam, t, alpha, m).is_zero());
                        if (t >= 1) CHECK(verify_three_term(ctx, fam, t, alpha, m).is_zero());
                    }
                    for (int t = 0; t <= 2; ++t) CHECK(verify_corollary_shift(ctx, fam, t, alpha, k).is_zero());
                }
            }
    }

    TEST_CASE("three-term preconditions") {
        const OperatorContext ctx(testing::z2_pair());
        const MVPoly m = monogenic_basis(ctx, 0).basis.front();
        CHECK_THROWS_AS(verify_three_term(ctx, Family::euclid, 0, Rational(1, 2), m), PreconditionError);
        CHECK_THROWS_AS(verify_three_term(ctx, Family::euclid, 2, Rational(-2), m), PreconditionError);
        CHECK_NOTHROW(verify_three_term(ctx, Family::euclid, 2, Rational(-3), m));
    }

    TEST_CASE("Rodrigues form for integer alpha") {
        const OperatorContext ctx(testing::a2());
        for (const Family fam : kFamilies)
            for (int k = 0; k <= 1; ++k) {
                const MVPoly m = monogenic_basis(ctx, k).basis.front();
                for (int t = 0; t <= 3; ++t)
                    for (int a = 0; a <= 2; ++a) CHECK(verify_rodrigues(ctx, fam, t, Rational(a), m).is_zero());
                CHECK(verify_rodrigues(ctx, Family::euclid, 3, Rational(-2), m).is_zero());
            }
        const MVPoly m = monogenic_basis(ctx, 0).basis.front();
        CHECK_THROWS_AS(verify_rodrigues(ctx, Family::ball, 2, Rational(1, 2), m), PreconditionError);
    }

    TEST_CASE("coefficient tables") {
        for (const Family fam : kFamilies) {
            const Rational alpha(3, 5), mu(2);
            const auto table = coefficient_recursions(fam, 6, alpha, mu, 1);
            CHECK(check_annihilation_form(table).empty());
            CHECK(table.at(0, 0) == 1);
            CHECK(table.at(1, 1) == Rational(fam == Family::ball ? -2 : 2) * (table.level_alpha(1) + 1));
            for (int s = 0; s <= 6; ++s)
                for (int j = 0; j <= s; ++j)
                    CHECK(table.at(s, j) == explicit_coefficient(fam, s, j, table.level_alpha(s), 1, mu));
        }
    }

    TEST_CASE("errors") {
        const OperatorContext ctx(testing::z2_pair());
        const MVPoly m = monogenic_basis(ctx, 1).basis.front();
        CHECK_THROWS_AS(gegenbauer(ctx, Family::ball, 2, Rational(-1), m), PreconditionError);
        CHECK_THROWS_AS(gegenbauer(ctx, Family::ball, 2, Rational(1), MVPoly::vector_variable(2)), PreconditionError);
        CHECK_THROWS_AS(gegenbauer(ctx, Family::ball, 2, Rational(1), MVPoly(2)), PreconditionError);
        CHECK_THROWS_AS(gegenbauer(ctx, Family::ball, -1, Rational(1), m), PreconditionError);
        CHECK_THROWS_AS(gegenbauer(ctx, Family::ball, 1, Rational(1), MVPoly::variable(3, 0)), DimensionMismatch);
        CHECK_THROWS_AS(parse_family("sphere"), InvalidInput);
        CHECK_THROWS_AS(extract_coefficients(MVPoly::variable(2, 0), m, 2), Error);
    }

    TEST_CASE("scalar variant on Dunkl harmonics") {
        const OperatorContext ctx(testing::z2_pair());
        const Rational alpha(1, 3);
        for (int k = 0; k <= 2; ++k)
            for (const auto& h : harmonic_basis(ctx, k).basis) {
                CHECK(scalar_gegenbauer(ctx, 0, alpha, h) == h);
                // one step of the scalar operator is D_alpha D_{alpha+1}
                const MVPoly twice = d_alpha(ctx, Family::ball, alpha, d_alpha(ctx, Family::ball, alpha + 1, h));
                CHECK(scalar_d_alpha(ctx, alpha, h) == twice);
                for (int t = 0; t <= 3; ++t)
                    CHECK(scalar_gegenbauer(ctx, t, alpha, h) == scalar_closed_form(ctx, t, alpha, h));
            }
        CHECK_THROWS_AS(scalar_gegenbauer(ctx, 1, alpha, MVPoly::vector_variable(2)), PreconditionError);
        CHECK_THROWS_AS(scalar_gegenbauer(ctx, 1, alpha, MVPoly::norm_squared(2)), PreconditionError);
    }
}
