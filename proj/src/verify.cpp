#include "dunkl/verify.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/gegenbauer.hpp"
#include "dunkl/integration.hpp"
#include "dunkl/monogenic.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace dunkl {

namespace {

constexpr std::size_t kDetailLimit = 240;

std::string clip(std::string s) {
    if (s.size() > kDetailLimit) s = s.substr(0, kDetailLimit) + "...";
    return s;
}

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void zero(const MVPoly& residual, const std::string& identity, const std::string& where) {
        ++report_.cases_run;
        if (!residual.is_zero()) report_.failures.push_back({identity, clip(where + ": residual " + to_string(residual))});
    }
    void check(bool ok, const std::string& identity, const std::string& detail) {
        ++report_.cases_run;
        if (!ok) report_.failures.push_back({identity, clip(detail)});
    }
    void skip(const std::string& what) { report_.skipped.push_back(what); }

    /// Runs body, turning library errors into failures of `identity`.
    template <typename F>
    void guarded(const std::string& identity, const std::string& where, F body) {
        try {
            body();
        } catch (const Error& e) {
            ++report_.cases_run;
            report_.failures.push_back({identity, clip(where + ": " + e.what())});
        }
    }

private:
    SuiteReport& report_;
};

std::string at(const RootSystem& r, const std::string& extra = "") {
    return r.tag() + (extra.empty() ? "" : " " + extra);
}

/// Deterministic Clifford-valued homogeneous polynomial with small integer coefficients.
MVPoly sample_poly(int dim, int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<Blade> blade(0, (Blade{1} << dim) - 1);
    MVPoly p(dim);
    for (const auto& mono : monomials_of_degree(dim, static_cast<unsigned>(degree)))
        for (int rep = 0; rep < 2; ++rep) {
            const int c = coeff(rng);
            if (c != 0) p.add_term(mono, CliffordElement::blade(dim, blade(rng), c));
        }
    if (p.is_zero()) p.add_term(monomials_of_degree(dim, static_cast<unsigned>(degree)).front(), CliffordElement::scalar(dim, 1));
    return p;
}

std::vector<MVPoly> scalar_monomials(int dim, int max_degree) {
    std::vector<MVPoly> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& mono : monomials_of_degree(dim, static_cast<unsigned>(d)))
            out.push_back(MVPoly::term(mono, CliffordElement::scalar(dim, 1)));
    return out;
}

// Gamma_k on sums r^{2q} P: D_k[x g] + mu g + E g.
RadialScaledFunction gamma_radial(const OperatorContext& ctx, const RadialScaledFunction& g) {
    const MVPoly x = MVPoly::vector_variable(ctx.dim());
    RadialScaledFunction out = apply_to_radial_scaled(ctx, RadialOperator::dirac(), g.left_mul(x));
    for (const auto& part : g.parts()) out.add_part(part.q, part.poly * ctx.mu());
    return out + apply_to_radial_scaled(ctx, RadialOperator::euler(), g);
}

void operator_suite(const OperatorContext& ctx, int max_degree, Recorder& rec) {
    const RootSystem& r = ctx.system();
    const int dim = ctx.dim();
    const Rational mu = ctx.mu();
    const MVPoly r2 = MVPoly::norm_squared(dim);
    const MVPoly x = MVPoly::vector_variable(dim);
    std::mt19937 rng(20240611);

    std::vector<MVPoly> polys = scalar_monomials(dim, max_degree);
    for (int d = 0; d <= max_degree; ++d) polys.push_back(sample_poly(dim, d, rng));

    rec.zero(dunkl_dirac(ctx, x) + MVPoly::scalar(dim, mu), "D_k[x] = -mu", at(r));
    rec.zero(dunkl_laplacian(ctx, r2) - MVPoly::scalar(dim, 2 * mu), "Delta_k[|x|^2] = 2mu", at(r));

    for (const auto& f : polys) {
        const std::string where = at(r, "f = " + clip(to_string(f)));
        const MVPoly lap = dunkl_laplacian(ctx, f);
        const MVPoly ef = euler(f);
        // sl2 with E = |x|^2/2, F = -Delta_k/2, H = Euler + mu/2
        rec.zero(euler(r2 * f) - r2 * ef - r2 * f * Rational(2), "sl2 [H,E] = 2E", where);
        rec.zero(euler(lap) - dunkl_laplacian(ctx, ef) + lap * Rational(2), "sl2 [H,F] = -2F", where);
        MVPoly ef_comm = (dunkl_laplacian(ctx, r2 * f) - r2 * lap) * Rational(1, 4);
        ef_comm -= ef + f * (mu / 2);
        rec.zero(ef_comm, "sl2 [E,F] = H", where);

        MVPoly anti = dunkl_dirac(ctx, times_vector(f)) + times_vector(dunkl_dirac(ctx, f));
        anti += ef * Rational(2) + f * mu;
        rec.zero(anti, "{D_k, x} = -(2E + mu)", where);
        rec.zero(dunkl_dirac(ctx, dunkl_dirac(ctx, f)) + lap, "D_k^2 = -Delta_k", where);
        rec.zero(gamma_op(ctx, f) - gamma_op_via_dirac(ctx, f), "Gamma_k = -x D_k - E", where);
        rec.zero(gamma_op(ctx, r2 * f) - r2 * gamma_op(ctx, f), "[Gamma_k, |x|^2] = 0", where);
        if (f.is_homogeneous() && !f.is_zero())
            rec.zero(ef - f * Rational(f.degree()), "E[R_k] = k R_k", where);
        if (f.is_scalar() && f.size() == 1)
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j)
                    rec.zero(dunkl_T(ctx, i, dunkl_T(ctx, j, f)) - dunkl_T(ctx, j, dunkl_T(ctx, i, f)),
                             "T_i T_j = T_j T_i", where + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
    }

    // [Gamma_k, f(r)] = 0 with f(r) = r^{2q}, q non-integer.
    for (const Rational& q : {Rational(-1, 2), Rational(1, 3)}) {
        const MVPoly g = sample_poly(dim, 2, rng);
        const RadialScaledFunction lhs = gamma_radial(ctx, RadialScaledFunction::scaled(q, g));
        const RadialScaledFunction rhs = RadialScaledFunction::scaled(q, gamma_op(ctx, g));
        rec.check(lhs == rhs, "[Gamma_k, f(r)] = 0", at(r, "q=" + to_string(q) + ": " + to_string(lhs - rhs)));
    }

    for (int k = 0; k <= max_degree; ++k) {
        const MonogenicBasis basis = monogenic_basis(ctx, k);
        const std::size_t expected =
            (std::size_t{1} << dim) * (scalar_space_dimension(dim, k) - scalar_space_dimension(dim, k - 1));
        rec.check(basis.basis.size() == expected, "dim M(k) = 2^m (dim P_k - dim P_{k-1})",
                  at(r, "k=" + std::to_string(k) + ": got " + std::to_string(basis.basis.size()) + ", expected " +
                            std::to_string(expected)));
        for (std::size_t b = 0; b < basis.basis.size(); ++b) {
            const MVPoly& m = basis.basis[b];
            const std::string where = at(r, "k=" + std::to_string(k) + " basis " + std::to_string(b));
            rec.zero(dunkl_dirac(ctx, m), "D_k[M_k] = 0", where);
            rec.zero(gamma_op(ctx, m) + m * Rational(k), "Gamma_k[M_k] = -k M_k", where);
            const MVPoly xm = times_vector(m);
            rec.zero(gamma_op(ctx, xm) - xm * (Rational(k - 1) + mu), "Gamma_k[x M_k] = (k+mu-1) x M_k", where);
            MVPoly prev = m;
            for (int s = 1; k + s <= max_degree; ++s) {
                const MVPoly cur = times_vector(prev);
                rec.zero(dunkl_dirac(ctx, cur) - prev * dirac_power_constant(s, k, mu), "D_k[x^s M_k] lemma",
                         where + " s=" + std::to_string(s));
                prev = cur;
            }
            if (k <= 3 && b < 4) {
                const RadialScaledFunction q = kelvin_invert(ctx, m);
                rec.check(apply_to_radial_scaled(ctx, RadialOperator::dirac(), q).is_zero(), "D_k[x |x|^{-mu-2k} M_k] = 0", where);
                rec.check(q.homogeneity_degree() == -(Rational(k - 1) + mu), "outer homogeneity -(k+mu-1)", where);
                const RadialScaledFunction back = kelvin_restore(ctx, q, k);
                rec.check(back == RadialScaledFunction::from_poly(-m), "x |x|^{2k+mu-2} Q_k = -M_k", where);
            }
        }
    }

    // Fischer projectors on sample polynomials.
    for (int k = 0; k <= std::min(max_degree, 4); ++k) {
        const MVPoly p = sample_poly(dim, k, rng);
        const std::string where = at(r, "k=" + std::to_string(k));
        std::vector<MVPoly> parts;
        MVPoly total(dim);
        for (int i = 0; i <= k; ++i) {
            parts.push_back(fischer_project(ctx, i, p));
            total += parts.back();
        }
        rec.zero(total - p, "sum_i P_i = id", where);
        for (int i = 0; i <= k; ++i) {
            rec.zero(gamma_op(ctx, parts[i]) - parts[i] * fischer_eigenvalue(ctx, k, i), "Gamma_k eigenvalue on x^i M(k-i)",
                     where + " i=" + std::to_string(i));
            for (int j = 0; j <= k; ++j) {
                const MVPoly pp = fischer_project(ctx, j, parts[i]);
                rec.zero(i == j ? pp - parts[i] : pp, "P_j P_i = delta_ij P_i",
                         where + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }
    }
}

void gegenbauer_suite(const OperatorContext& ctx, Family family, const SuiteOptions& opt, Recorder& rec) {
    const RootSystem& r = ctx.system();
    const Rational mu = ctx.mu();
    const int t_max = opt.max_degree;
    for (const Rational& alpha : opt.alphas) {
        if (family == Family::ball && alpha <= -1) {
            rec.skip(at(r, "alpha=" + to_string(alpha) + " not admissible for the ball"));
            continue;
        }
        for (int k = 0; k <= opt.k_max; ++k) {
            const MonogenicBasis basis = monogenic_basis(ctx, k);
            const MVPoly& m = basis.basis.front();
            const MVPoly& m2 = basis.basis.back();
            const std::string base = "alpha=" + to_string(alpha) + " k=" + std::to_string(k);
            for (int t = 0; t <= t_max; ++t) {
                const std::string where = at(r, base + " t=" + std::to_string(t));
                rec.guarded("operator construction", where, [&] {
                    const GegenbauerPoly g = gegenbauer(ctx, family, t, alpha, m);
                    const GegenbauerPoly g2 = gegenbauer(ctx, family, t, alpha, m2);
                    rec.check(g.coeffs == g2.coeffs, "coefficients independent of M_k", where);
                    const GegenbauerPoly cf = closed_form(family, t, alpha, k, mu);
                    rec.check(g.coeffs == cf.coeffs, "operator construction = closed form",
                              where + ": operator " + to_string(g.as_unipoly(), "x") + " vs closed " +
                                  to_string(cf.as_unipoly(), "x"));
                    bool parity = true;
                    bool explicit_ok = true;
                    for (int j = 0; j <= t; ++j) {
                        if ((t - j) % 2 != 0 && g.coeff(j) != 0) parity = false;
                        if (g.coeff(j) != explicit_coefficient(family, t, j, alpha, k, mu)) explicit_ok = false;
                    }
                    rec.check(parity, "parity of coefficients", where);
                    rec.check(explicit_ok, "explicit coefficient formula", where);
                });
                rec.guarded("annihilation", where, [&] { rec.zero(verify_annihilation(ctx, family, t, alpha, m), "annihilation", where); });
                rec.guarded("differential equation", where,
                            [&] { rec.zero(verify_differential_equation(ctx, family, t, alpha, m), "differential equation", where); });
                if (t + 1 <= t_max)
                    rec.guarded("recurrence", where, [&] { rec.zero(verify_recurrence(ctx, family, t, alpha, m), "recurrence", where); });
                if (t >= 1 && alpha + t != 0)
                    rec.guarded("three-term", where, [&] { rec.zero(verify_three_term(ctx, family, t, alpha, m), "three-term", where); });
                if (t % 2 == 1)
                    rec.guarded("corollary shift", where, [&] {
                        const UniPoly res = verify_corollary_shift(ctx, family, t / 2, alpha, k);
                        rec.check(res.is_zero(), "odd/even corollary", where + ": " + to_string(res, "x"));
                    });
            }
            rec.guarded("coefficient recursions", at(r, base), [&] {
                const CoefficientTable table = coefficient_recursions(family, t_max, alpha, mu, k);
                bool match = true;
                for (int s = 0; s <= t_max; ++s) {
                    const GegenbauerPoly g = gegenbauer(ctx, family, s, table.level_alpha(s), m);
                    for (int j = 0; j <= s; ++j) match = match && g.coeff(j) == table.at(s, j);
                }
                rec.check(match, "coefficient recursions reproduce the operator construction", at(r, base));
                const auto bad = check_annihilation_form(table);
                rec.check(bad.empty(), "annihilation form on coefficient table",
                          at(r, base + (bad.empty() ? "" : ": " + bad.front())));
            });
        }
        if (family == Family::ball) {
            for (int k = 0; k <= opt.k_max; ++k) {
                const HarmonicBasis hb = harmonic_basis(ctx, k);
                const MVPoly& h = hb.basis.front();
                for (int t = 0; 2 * t <= t_max; ++t) {
                    const std::string where = at(r, "alpha=" + to_string(alpha) + " k=" + std::to_string(k) + " t=" + std::to_string(t));
                    rec.guarded("scalar Gegenbauer", where, [&] {
                        const MVPoly sg = scalar_gegenbauer(ctx, t, alpha, h);
                        rec.zero(sg - scalar_closed_form(ctx, t, alpha, h), "scalar Gegenbauer closed form", where);
                        if (t == 1)
                            rec.zero(sg - d_alpha(ctx, family, alpha, d_alpha(ctx, family, alpha + 1, h)),
                                     "scalar operator = D_alpha D_{alpha+1}", where);
                    });
                }
            }
        }
    }
    // Rodrigues form at integer parameters.
    const std::vector<int> integer_alphas = family == Family::ball ? std::vector<int>{0, 1} : std::vector<int>{-1, 1};
    for (int a : integer_alphas)
        for (int k = 0; k <= std::min(opt.k_max, 1); ++k) {
            const MVPoly m = monogenic_basis(ctx, k).basis.front();
            for (int t = std::max(0, -a); t <= std::min(t_max, 4); ++t) {
                const std::string where = at(r, "alpha=" + std::to_string(a) + " k=" + std::to_string(k) + " t=" + std::to_string(t));
                rec.guarded("Rodrigues", where, [&] { rec.zero(verify_rodrigues(ctx, family, t, Rational(a), m), "Rodrigues formula", where); });
            }
        }
}

void orthogonality_suite(const OperatorContext& ctx, const SuiteOptions& opt, Recorder& rec) {
    const RootSystem& r = ctx.system();
    const int t_max = opt.max_degree;
    const int k_max = std::min(opt.max_degree, 3);
    std::vector<MVPoly> monogenics;
    for (int k = 0; k <= std::min(k_max, 2); ++k)
        for (const auto& m : monogenic_basis(ctx, k).basis) monogenics.push_back(m);

    // Euclidean bilinear form: any root system.
    rec.guarded("euclid Gram", at(r), [&] {
        const GramMatrix g = gram(ctx, Family::euclid, opt.euclid_alpha, t_max, monogenics);
        const auto bad = g.nonzero_off_diagonal();
        std::string detail = at(r, "alpha=" + to_string(opt.euclid_alpha));
        if (!bad.empty()) detail += ": entry (" + std::to_string(bad.front().first) + "," + std::to_string(bad.front().second) + ") = " +
                                    to_string(*g.entries[bad.front().first][bad.front().second]);
        rec.check(bad.empty(), "euclid Gram off-diagonal zero", detail);
    });
    for (int k = 0; k <= 2; ++k)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 4; ++j) {
                const std::string where = at(r, "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                rec.guarded("euclid duality", where, [&] {
                    const MVPoly m = monogenic_basis(ctx, k).basis.front();
                    MVPoly xi = m;
                    for (int s = 0; s < i; ++s) xi = times_vector(xi);
                    MVPoly xj = m;
                    for (int s = 0; s < j; ++s) xj = times_vector(xj);
                    const Rational alpha = opt.euclid_alpha;
                    const auto lhs_c = extract_coefficients(d_alpha(ctx, Family::euclid, alpha, xi), m, i + 1);
                    std::vector<Rational> ej(static_cast<std::size_t>(j + 1), 0);
                    ej[static_cast<std::size_t>(j)] = 1;
                    const ClassValue lhs = bilinear_form(ctx.mu(), k, alpha, lhs_c, ej);
                    std::vector<Rational> ei(static_cast<std::size_t>(i + 1), 0);
                    ei[static_cast<std::size_t>(i)] = 1;
                    std::vector<Rational> rhs_c(1, 0);
                    if (j >= 1) rhs_c = extract_coefficients(dunkl_dirac(ctx, xj), m, j - 1);
                    const ClassValue rhs = bilinear_form(ctx.mu(), k, alpha + 1, ei, rhs_c)
                                               .rebased(bilinear_tag(ctx.mu(), k, alpha), bilinear_base_shift(ctx.mu(), k, alpha, 1));
                    rec.check(lhs == rhs, "euclid duality <D_a f, g>_a = <f, D_k g>_{a+1}",
                              where + ": " + to_string(lhs) + " vs " + to_string(rhs));
                });
            }

    if (!r.is_product_type()) {
        rec.skip(at(r, "ball Gram, ball duality and monogenic orthogonality need a product weight"));
        return;
    }
    rec.guarded("ball Gram", at(r), [&] {
        const GramMatrix g = gram(ctx, Family::ball, opt.ball_alpha, t_max, monogenics);
        std::size_t crossing = 0;
        std::string first;
        for (const auto& [i, j] : g.nonzero_off_diagonal()) {
            const GramLabel& a = g.labels[i];
            const GramLabel& b = g.labels[j];
            if (a.t == b.t && a.k == b.k) continue;  // same space, basis not orthogonalized
            if (crossing++ == 0) first = to_string(*g.entries[i][j]);
        }
        rec.check(crossing == 0, "ball Gram zero for s != t or k != l",
                  at(r, "alpha=" + to_string(opt.ball_alpha) + ": " + std::to_string(crossing) + " nonzero, first " + first));
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (!(*g.entries[i][j] == g.entries[j][i]->conjugated())) {
                    rec.check(false, "ball Gram conjugate symmetry", at(r));
                    return;
                }
    });
    const Rational alpha = opt.ball_alpha;
    const Rational shift = ball_base_shift(ctx.mu(), alpha, 1);
    for (int k = 0; k <= 2; ++k)
        for (int i = 0; i + k + 1 <= 4; ++i)
            for (int j = 0; j + k <= 4; ++j) {
                const std::string where = at(r, "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                rec.guarded("ball duality", where, [&] {
                    const MonogenicBasis basis = monogenic_basis(ctx, k);
                    MVPoly f = basis.basis.front();
                    for (int s = 0; s < i; ++s) f = times_vector(f);
                    MVPoly g = basis.basis.back();
                    for (int s = 0; s < j; ++s) g = times_vector(g);
                    const CliffordClassValue lhs = ball_inner(r, d_alpha(ctx, Family::ball, alpha, f), g, alpha);
                    const CliffordClassValue rhs =
                        ball_inner(r, f, dunkl_dirac(ctx, g), alpha + 1).rebased(ball_tag(r, alpha), shift);
                    rec.check(lhs == rhs, "ball duality <D_a f, g>_a = <f, D_k g>_{a+1}",
                              where + ": " + to_string(lhs) + " vs " + to_string(rhs));
                });
            }
    rec.guarded("monogenic orthogonality", at(r), [&] {
        const OrthogonalityReport rep = verify_monogenic_orthogonality(ctx, k_max);
        rec.check(rep.failures.empty(), "inner/inner and inner/outer monogenic orthogonality",
                  at(r, std::to_string(rep.failures.size()) + " of " + std::to_string(rep.cases) + " failed" +
                            (rep.failures.empty() ? "" : ", first: " + rep.failures.front())));
    });
}

} // namespace

std::string_view suite_name(Suite s) {
    switch (s) {
    case Suite::operators: return "operators";
    case Suite::gegenbauer_ball: return "gegenbauer-ball";
    case Suite::gegenbauer_euclid: return "gegenbauer-euclid";
    case Suite::orthogonality: return "orthogonality";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
    return {Suite::operators, Suite::gegenbauer_ball, Suite::gegenbauer_euclid, Suite::orthogonality};
}

std::vector<RootSystem> default_verification_systems() {
    return {make_preset(Preset::Z2, 2, {Rational(1, 2), Rational(1, 3)}), make_preset(Preset::A, 3, {Rational(1, 2)})};
}

SuiteReport run_suite(Suite suite, const SuiteOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = std::string(suite_name(suite));
    Recorder rec(report);
    const std::vector<RootSystem> systems = options.systems.empty() ? default_verification_systems() : options.systems;
    for (const RootSystem& system : systems) {
        const OperatorContext ctx(system);
        rec.guarded(report.suite, at(system), [&] {
            switch (suite) {
            case Suite::operators: operator_suite(ctx, options.max_degree, rec); break;
            case Suite::gegenbauer_ball: gegenbauer_suite(ctx, Family::ball, options, rec); break;
            case Suite::gegenbauer_euclid: gegenbauer_suite(ctx, Family::euclid, options, rec); break;
            case Suite::orthogonality: orthogonality_suite(ctx, options, rec); break;
            }
        });
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace dunkl
