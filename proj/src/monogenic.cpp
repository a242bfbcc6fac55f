#include "dunkl/monogenic.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/fault.hpp"
#include "dunkl/linalg.hpp"

#include <map>

namespace dunkl {

namespace {

// Kernel of a linear map from Clifford- (or scalar-) valued homogeneous
// polynomials of degree `degree` into polynomials, given the image of each
// basis element.
template <typename Image>
std::vector<MVPoly> kernel_of(int dim, int degree, const std::vector<Blade>& blades, Image image) {
    const std::vector<Monomial> monos = monomials_of_degree(dim, static_cast<unsigned>(degree));
    struct Column {
        Monomial mono;
        Blade blade;
    };
    std::vector<Column> columns;
    for (const auto& m : monos)
        for (Blade b : blades) columns.push_back({m, b});

    std::map<std::pair<Monomial, Blade>, std::size_t, bool (*)(const std::pair<Monomial, Blade>&,
                                                               const std::pair<Monomial, Blade>&)>
        row_index([](const std::pair<Monomial, Blade>& a, const std::pair<Monomial, Blade>& b) {
            if (a.first == b.first) return a.second < b.second;
            return GradedOrder{}(a.first, b.first);
        });
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_columns;
    for (const auto& col : columns) {
        const MVPoly img = image(MVPoly::term(col.mono, CliffordElement::blade(dim, col.blade)));
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (const auto& [mono, c] : img.terms())
            for (const auto& [mask, v] : c.terms()) {
                auto [it, inserted] = row_index.try_emplace({mono, mask}, row_index.size());
                entries.emplace_back(it->second, v);
            }
        sparse_columns.push_back(std::move(entries));
    }
    RationalRows rows(row_index.size(), std::vector<Rational>(columns.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, v] : sparse_columns[j]) rows[i][j] = v;

    std::vector<MVPoly> basis;
    for (const auto& v : nullspace(rows, columns.size())) {
        MVPoly p(dim);
        for (std::size_t j = 0; j < columns.size(); ++j)
            if (v[j] != 0) p.add_term(columns[j].mono, CliffordElement::blade(dim, columns[j].blade, v[j]));
        basis.push_back(std::move(p));
    }
    return basis;
}

void require_degree(int degree) {
    if (degree < 0) throw PreconditionError("degree must be non-negative");
}

} // namespace

MonogenicBasis monogenic_basis(const OperatorContext& ctx, int degree) {
    require_degree(degree);
    std::vector<Blade> blades;
    for (Blade b = 0; b < (Blade{1} << ctx.dim()); ++b) blades.push_back(b);
    MonogenicBasis out;
    out.degree = degree;
    out.basis = kernel_of(ctx.dim(), degree, blades, [&](const MVPoly& f) { return dunkl_dirac(ctx, f); });
    return out;
}

HarmonicBasis harmonic_basis(const OperatorContext& ctx, int degree) {
    require_degree(degree);
    HarmonicBasis out;
    out.degree = degree;
    out.basis = kernel_of(ctx.dim(), degree, {0}, [&](const MVPoly& f) { return dunkl_laplacian(ctx, f); });
    return out;
}

std::size_t scalar_space_dimension(int dim, int degree) {
    if (degree < 0) return 0;
    return static_cast<std::size_t>(to_long(binomial(degree + dim - 1, dim - 1)));
}

bool is_monogenic(const OperatorContext& ctx, const MVPoly& f) { return dunkl_dirac(ctx, f).is_zero(); }

bool is_harmonic(const OperatorContext& ctx, const MVPoly& f) { return dunkl_laplacian(ctx, f).is_zero(); }

Rational dirac_power_constant(int s, int degree, const Rational& mu) {
    if (s % 2 == 0) return Rational(-s);
    const Rational c = -(Rational(s - 1 + 2 * degree) + mu);
    return fault_active(Fault::lemma_odd_shift) ? c - 1 : c;
}

Rational fischer_eigenvalue(const OperatorContext& ctx, int degree, int j) {
    if (j % 2 == 0) return Rational(-(degree - j));
    return Rational(degree - j - 1) + ctx.mu();
}

MVPoly fischer_project(const OperatorContext& ctx, int i, const MVPoly& p) {
    const int k = p.is_zero() ? 0 : p.degree();
    if (!p.is_homogeneous()) throw PreconditionError("Fischer projection needs a homogeneous polynomial");
    if (p.is_zero()) return p;
    if (i < 0 || i > k) throw PreconditionError("Fischer component index out of range");
    const Rational mu = ctx.mu();
    const int r_max = k / 2;
    const int s_max = k >= 1 ? (k - 1) / 2 : -1;

    // (Gamma_k + shift) f / denominator
    auto step = [&](const MVPoly& f, const Rational& shift, const Rational& denominator) {
        MVPoly g = gamma_op(ctx, f);
        g.add_scaled(f, shift);
        return g * (Rational(1) / denominator);
    };

    MVPoly out = p;
    if (i % 2 == 0) {
        for (int r = 0; r <= r_max; ++r) {
            if (2 * r == i) continue;
            out = step(out, Rational(k - 2 * r), Rational(i - 2 * r));
        }
        for (int s = 0; s <= s_max; ++s)
            out = step(out, Rational(-k + 2 * s + 2) - mu, Rational(-2 * k + i + 2 * s + 2) - mu);
    } else {
        for (int r = 0; r <= r_max; ++r) out = step(out, Rational(k - 2 * r), Rational(2 * k - i - 1 - 2 * r) + mu);
        for (int s = 0; s <= s_max; ++s) {
            if (2 * s + 1 == i) continue;
            out = step(out, Rational(-k + 2 * s + 2) - mu, Rational(2 * s + 1 - i));
        }
    }
    return out;
}

RadialScaledFunction kelvin_invert(const OperatorContext& ctx, const MVPoly& monogenic) {
    if (monogenic.is_zero() || !monogenic.is_homogeneous() || !is_monogenic(ctx, monogenic))
        throw PreconditionError("Kelvin inversion needs a nonzero homogeneous inner monogenic");
    const int k = monogenic.degree();
    const Rational q = -(ctx.mu() + 2 * k) / 2;
    return RadialScaledFunction::scaled(q, times_vector(monogenic));
}

RadialScaledFunction kelvin_restore(const OperatorContext& ctx, const RadialScaledFunction& outer, int order) {
    if (!apply_to_radial_scaled(ctx, RadialOperator::dirac(), outer).is_zero())
        throw PreconditionError("input is not annihilated by D_k");
    const Rational q = (2 * order + ctx.mu() - 2) / 2;
    return outer.left_mul(MVPoly::vector_variable(ctx.dim())).times_radial(q);
}

} // namespace dunkl
