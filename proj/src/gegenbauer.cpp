#include "dunkl/gegenbauer.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/fault.hpp"
#include "dunkl/monogenic.hpp"

#include <sstream>

namespace dunkl {

namespace {

// sign s of (1 + s|x|^2): -1 for the ball, +1 on R^m
int radial_sign(Family f) { return f == Family::ball ? -1 : 1; }

MVPoly one_plus(Family f, int dim) {
    MVPoly p = MVPoly::norm_squared(dim) * Rational(radial_sign(f));
    p += MVPoly::scalar(dim, 1);
    return p;
}

void require_monogenic(const OperatorContext& ctx, const MVPoly& m) {
    if (m.dim() != ctx.dim()) throw DimensionMismatch("monogenic lives in the wrong dimension");
    if (m.is_zero() || !m.is_homogeneous() || !is_monogenic(ctx, m))
        throw PreconditionError("expected a nonzero homogeneous Dunkl monogenic");
}

Rational pow2(int n) {
    Rational out = 1;
    for (int i = 0; i < n; ++i) out *= 2;
    return out;
}

} // namespace

std::string_view family_name(Family f) { return f == Family::ball ? "ball" : "euclid"; }

Family parse_family(std::string_view name) {
    if (name == "ball") return Family::ball;
    if (name == "euclid") return Family::euclid;
    throw InvalidInput("unknown family '" + std::string(name) + "' (expected ball or euclid)");
}

void require_admissible_alpha(Family family, const Rational& alpha) {
    if (family == Family::ball && alpha <= -1)
        throw PreconditionError("ball family needs alpha > -1, got " + to_string(alpha));
}

Rational GegenbauerPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(j)];
}

UniPoly GegenbauerPoly::as_unipoly() const { return UniPoly(coeffs); }

MVPoly GegenbauerPoly::expand(const MVPoly& m) const {
    MVPoly out(m.dim());
    MVPoly power = m;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != 0) out.add_scaled(power, coeffs[j]);
        power = times_vector(power);
    }
    return out;
}

MVPoly d_alpha(const OperatorContext& ctx, Family family, const Rational& alpha, const MVPoly& f) {
    require_admissible_alpha(family, alpha);
    MVPoly out = one_plus(family, ctx.dim()) * dunkl_dirac(ctx, f);
    out.add_scaled(times_vector(f), Rational(radial_sign(family)) * 2 * (alpha + 1));
    return out;
}

MVPoly gegenbauer_expanded(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                           const MVPoly& monogenic) {
    if (t < 0) throw PreconditionError("degree t must be non-negative");
    require_admissible_alpha(family, alpha);
    require_monogenic(ctx, monogenic);
    MVPoly out = monogenic;
    for (int i = t - 1; i >= 0; --i) out = d_alpha(ctx, family, alpha + i, out);
    return out;
}

std::vector<Rational> extract_coefficients(const MVPoly& p, const MVPoly& monogenic, int t) {
    const int k = monogenic.degree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(t + 1), 0);
    MVPoly rebuilt(p.dim());
    MVPoly power = monogenic;
    for (int j = 0; j <= t; ++j) {
        const MVPoly part = p.homogeneous_component(static_cast<unsigned>(j + k));
        if (!part.is_zero()) {
            const auto& [mono, c] = *power.terms().begin();
            const auto& [blade, v] = *c.terms().begin();
            const Rational a = part.coeff(mono).coeff(blade) / v;
            coeffs[static_cast<std::size_t>(j)] = a;
            rebuilt.add_scaled(power, a);
        }
        power = times_vector(power);
    }
    if (!(rebuilt == p)) throw Error("polynomial is not of the form sum_j a_j x^j M_k");
    return coeffs;
}

GegenbauerPoly gegenbauer(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                          const MVPoly& monogenic) {
    GegenbauerPoly out;
    out.family = family;
    out.t = t;
    out.alpha = alpha;
    out.k = monogenic.is_zero() ? 0 : monogenic.degree();
    out.mu = ctx.mu();
    out.coeffs = extract_coefficients(gegenbauer_expanded(ctx, family, t, alpha, monogenic), monogenic, t);
    out.monogenic = monogenic;
    return out;
}

Rational annihilation_constant(Family, const Rational& alpha, int t, const Rational& mu, int k) {
    if (t % 2 == 0) {
        const int te = fault_active(Fault::annihilation_even_shift) ? t + 1 : t;
        return Rational(te) * (2 * alpha + te + mu + 2 * k);
    }
    return (2 * alpha + t + 1) * (Rational(t + 2 * k - 1) + mu);
}

GegenbauerPoly closed_form(Family family, int t, const Rational& alpha, int k, const Rational& mu) {
    if (t < 0) throw PreconditionError("degree t must be non-negative");
    const int s = t / 2;
    const bool odd = t % 2 == 1;
    const int sign_s = (family == Family::euclid && s % 2 == 1) ? -1 : 1;
    // 1 + 2x^2 (ball) or 1 - 2x^2 (euclid), x the Clifford vector variable
    const UniPoly argument({1, 0, family == Family::ball ? 2 : -2});
    const Rational half_mu = mu / 2;
    UniPoly poly;
    if (!odd) {
        const Rational c = sign_s * pow2(2 * s) * pochhammer(alpha + s + 1, static_cast<unsigned>(s)) * factorial(s);
        poly = jacobi_poly(static_cast<unsigned>(s), half_mu + k - 1, alpha).compose(argument) * c;
    } else {
        Rational c = sign_s * pow2(2 * s + 1) * pochhammer(alpha + s + 1, static_cast<unsigned>(s + 1)) * factorial(s);
        if (family == Family::ball) c = -c;
        if (fault_active(Fault::closed_form_odd_sign)) c = -c;
        poly = UniPoly::monomial(1) * jacobi_poly(static_cast<unsigned>(s), half_mu + k, alpha).compose(argument) * c;
    }
    GegenbauerPoly out;
    out.family = family;
    out.t = t;
    out.alpha = alpha;
    out.k = k;
    out.mu = mu;
    out.coeffs.assign(static_cast<std::size_t>(t + 1), 0);
    for (int j = 0; j <= t; ++j) out.coeffs[static_cast<std::size_t>(j)] = poly.coeff(static_cast<unsigned>(j));
    return out;
}

Rational explicit_coefficient(Family family, int t, int j, const Rational& alpha, int k, const Rational& mu) {
    if (j < 0 || j > t || (t - j) % 2 != 0) return 0;
    const Rational q = mu / 2 + k;
    const int s = t / 2;
    const int i = j / 2;
    Rational value;
    if (t % 2 == 0) {
        value = pow2(2 * s) * binomial(s, i) * pochhammer(q + i, static_cast<unsigned>(s - i)) *
                pochhammer(alpha + s + q, static_cast<unsigned>(i)) * pochhammer(alpha + s + 1, static_cast<unsigned>(s));
        if (family == Family::euclid && (s + i) % 2 == 1) value = -value;
    } else {
        value = -pow2(2 * s + 1) * binomial(s, i) * pochhammer(q + i + 1, static_cast<unsigned>(s - i)) *
                pochhammer(alpha + s + q + 1, static_cast<unsigned>(i)) *
                pochhammer(alpha + s + 1, static_cast<unsigned>(s + 1));
        if (family == Family::euclid && (s + i) % 2 == 0) value = -value;
    }
    return value;
}

std::pair<Rational, Rational> three_term_constants(const Rational& alpha, int t, const Rational& mu, int k) {
    if (t % 2 == 0) {
        Rational e = mu + 2 * k - 2 + t;
        if (fault_active(Fault::three_term_e_shift)) e += 1;
        return {alpha + make_rational(t, 2), e};
    }
    return {alpha + mu / 2 + k + make_rational(t - 1, 2), Rational(t - 1)};
}

MVPoly verify_annihilation(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                           const MVPoly& monogenic) {
    const int k = monogenic.degree();
    MVPoly residual = dunkl_dirac(ctx, gegenbauer_expanded(ctx, family, t, alpha, monogenic));
    if (t >= 1) {
        const Rational c = annihilation_constant(family, alpha, t, ctx.mu(), k);
        residual.add_scaled(gegenbauer_expanded(ctx, family, t - 1, alpha + 1, monogenic),
                            family == Family::ball ? -c : c);
    }
    return residual;
}

MVPoly verify_differential_equation(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                                    const MVPoly& monogenic) {
    const int k = monogenic.degree();
    const MVPoly c = gegenbauer_expanded(ctx, family, t, alpha, monogenic);
    const Rational lambda = annihilation_constant(family, alpha, t, ctx.mu(), k);
    const Rational sign(family == Family::ball ? 1 : -1);
    MVPoly residual = one_plus(family, ctx.dim()) * dunkl_laplacian(ctx, c);
    residual.add_scaled(times_vector(dunkl_dirac(ctx, c)), sign * 2 * (alpha + 1));
    residual.add_scaled(c, sign * lambda);
    return residual;
}

MVPoly verify_recurrence(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                         const MVPoly& monogenic) {
    const int k = monogenic.degree();
    const Rational sign(family == Family::ball ? 1 : -1);
    MVPoly residual = gegenbauer_expanded(ctx, family, t + 1, alpha, monogenic);
    residual.add_scaled(times_vector(gegenbauer_expanded(ctx, family, t, alpha + 1, monogenic)),
                        sign * 2 * (alpha + 1));
    if (t >= 1) {
        const Rational c = annihilation_constant(family, alpha + 1, t, ctx.mu(), k);
        residual.add_scaled(one_plus(family, ctx.dim()) * gegenbauer_expanded(ctx, family, t - 1, alpha + 2, monogenic),
                            -sign * c);
    }
    return residual;
}

MVPoly verify_three_term(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                         const MVPoly& monogenic) {
    if (t < 1) throw PreconditionError("three-term relation needs t >= 1");
    if (alpha + t == 0) throw PreconditionError("three-term relation is undefined for alpha + t = 0");
    const int k = monogenic.degree();
    const Rational mu = ctx.mu();
    const auto [d, e] = three_term_constants(alpha, t, mu, k);
    const Rational sign(family == Family::ball ? 1 : -1);
    MVPoly residual = gegenbauer_expanded(ctx, family, t, alpha, monogenic) * (d / (2 * (alpha + t)));
    residual.add_scaled(times_vector(gegenbauer_expanded(ctx, family, t - 1, alpha, monogenic)),
                        sign * (alpha + mu / 2 + k + t - 1));
    if (t >= 2 && e != 0)
        residual.add_scaled(gegenbauer_expanded(ctx, family, t - 2, alpha, monogenic), -sign * (alpha + t - 1) * e);
    return residual;
}

UniPoly verify_corollary_shift(const OperatorContext& ctx, Family family, int t, const Rational& alpha, int k) {
    const MonogenicBasis low = monogenic_basis(ctx, k);
    const MonogenicBasis high = monogenic_basis(ctx, k + 1);
    if (low.basis.empty() || high.basis.empty()) throw PreconditionError("no monogenics of the requested degree");
    const UniPoly odd = gegenbauer(ctx, family, 2 * t + 1, alpha, low.basis.front()).as_unipoly();
    const UniPoly even = gegenbauer(ctx, family, 2 * t, alpha, high.basis.front()).as_unipoly();
    const Rational c = Rational(family == Family::ball ? 2 : -2) * (alpha + 2 * t + 1);
    return odd + UniPoly::monomial(1, c) * even;
}

MVPoly verify_rodrigues(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                        const MVPoly& monogenic) {
    if (!is_integer(alpha) || alpha + t < 0)
        throw PreconditionError("Rodrigues check needs integer alpha with alpha + t >= 0");
    const long a = to_long(alpha);
    const MVPoly w = one_plus(family, ctx.dim());
    MVPoly rhs = power(w, static_cast<unsigned>(a + t)) * monogenic;
    for (int i = 0; i < t; ++i) rhs = dunkl_dirac(ctx, rhs);
    const MVPoly c = gegenbauer_expanded(ctx, family, t, alpha, monogenic);
    const MVPoly lhs = a >= 0 ? power(w, static_cast<unsigned>(a)) * c : c;
    if (a < 0) rhs = power(w, static_cast<unsigned>(-a)) * rhs;
    return lhs - rhs;
}

Rational CoefficientTable::at(int s, int j) const {
    if (s < 0 || s > t_max || j < 0 || j > s) return 0;
    return rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
}

CoefficientTable coefficient_recursions(Family family, int t_max, const Rational& alpha, const Rational& mu,
                                        int k) {
    if (t_max < 0) throw PreconditionError("t_max must be non-negative");
    CoefficientTable table;
    table.family = family;
    table.alpha = alpha;
    table.t_max = t_max;
    table.k = k;
    table.mu = mu;
    const Rational sign(family == Family::ball ? -1 : 1);
    table.rows.push_back({Rational(1)});
    for (int s = 1; s <= t_max; ++s) {
        const Rational beta = table.level_alpha(s);
        std::vector<Rational> row(static_cast<std::size_t>(s + 1), 0);
        for (int j = s % 2; j <= s; j += 2) {
            Rational value;
            if (s % 2 == 0) {
                const int i = j / 2;
                value = -(Rational(2 * i + 2 * k) + mu) * table.at(s - 1, j + 1) +
                        sign * (Rational(2 * i + 2 * k) + 2 * beta + mu) * table.at(s - 1, j - 1);
            } else {
                const int i = (j - 1) / 2;
                value = sign * 2 * (beta + 1 + i) * table.at(s - 1, j - 1) - Rational(2 * i + 2) * table.at(s - 1, j + 1);
            }
            row[static_cast<std::size_t>(j)] = value;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<std::string> check_annihilation_form(const CoefficientTable& table) {
    std::vector<std::string> failures;
    const Rational sign(table.family == Family::ball ? 1 : -1);
    for (int s = 1; s <= table.t_max; ++s) {
        const Rational beta = table.level_alpha(s);
        const Rational c = sign * annihilation_constant(table.family, beta, s, table.mu, table.k);
        for (int j = s % 2; j <= s; j += 2) {
            Rational lhs;
            Rational rhs;
            if (s % 2 == 0) {
                lhs = Rational(-j) * table.at(s, j);
                rhs = c * table.at(s - 1, j - 1);
            } else {
                lhs = -(Rational(j - 1 + 2 * table.k) + table.mu) * table.at(s, j);
                rhs = c * table.at(s - 1, j - 1);
            }
            if (lhs != rhs) {
                std::ostringstream os;
                os << "s=" << s << " j=" << j << ": " << to_string(lhs) << " != " << to_string(rhs);
                failures.push_back(os.str());
            }
        }
    }
    return failures;
}

MVPoly scalar_d_alpha(const OperatorContext& ctx, const Rational& alpha, const MVPoly& f) {
    const int dim = ctx.dim();
    const MVPoly r2 = MVPoly::norm_squared(dim);
    const MVPoly w = MVPoly::scalar(dim, 1) - r2;
    const Rational mu = ctx.mu();
    MVPoly out = -(w * w * dunkl_laplacian(ctx, f));
    out.add_scaled(r2 * f, -2 * (alpha + 2) * (2 * alpha + 2 + mu));
    out.add_scaled(w * euler(f), 4 * (alpha + 2));
    out.add_scaled(f, 2 * (alpha + 2) * mu);
    return out;
}

MVPoly scalar_gegenbauer(const OperatorContext& ctx, int t, const Rational& alpha, const MVPoly& harmonic) {
    if (t < 0) throw PreconditionError("degree t must be non-negative");
    if (harmonic.is_zero() || !harmonic.is_scalar() || !harmonic.is_homogeneous() || !is_harmonic(ctx, harmonic))
        throw PreconditionError("expected a nonzero homogeneous scalar Dunkl harmonic");
    MVPoly out = harmonic;
    for (int i = t - 1; i >= 0; --i) out = scalar_d_alpha(ctx, alpha + 2 * i, out);
    return out;
}

MVPoly scalar_closed_form(const OperatorContext& ctx, int t, const Rational& alpha, const MVPoly& harmonic) {
    const int dim = ctx.dim();
    const int k = harmonic.degree();
    const UniPoly p = jacobi_poly(static_cast<unsigned>(t), ctx.mu() / 2 + k - 1, alpha);
    const MVPoly argument = MVPoly::scalar(dim, 1) - MVPoly::norm_squared(dim) * Rational(2);
    MVPoly value(dim);
    MVPoly power_arg = MVPoly::scalar(dim, 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        value.add_scaled(power_arg, p.coeffs()[i]);
        power_arg = power_arg * argument;
    }
    const Rational c = pow2(2 * t) * pochhammer(alpha + t + 1, static_cast<unsigned>(t)) * factorial(t);
    return value * harmonic * c;
}

} // namespace dunkl
