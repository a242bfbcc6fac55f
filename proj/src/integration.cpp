#include "dunkl/integration.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/fault.hpp"
#include "dunkl/monogenic.hpp"

#include <sstream>

namespace dunkl {

namespace {

void check_tags(const std::string& a, const std::string& b) {
    if (a != b) throw ContextMismatch("cannot combine values against bases " + a + " and " + b);
}

} // namespace

ClassValue& ClassValue::operator+=(const ClassValue& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    check_tags(tag, o.tag);
    ratio += o.ratio;
    if (ratio == 0) tag.clear();
    return *this;
}

ClassValue operator*(const Rational& s, ClassValue v) {
    v.ratio *= s;
    if (v.ratio == 0) v.tag.clear();
    return v;
}

bool operator==(const ClassValue& a, const ClassValue& b) {
    if (a.is_zero() || b.is_zero()) return a.ratio == b.ratio;
    return a.tag == b.tag && a.ratio == b.ratio;
}

ClassValue ClassValue::rebased(const std::string& new_tag, const Rational& factor) const {
    if (is_zero()) return {};
    return {ratio * factor, new_tag};
}

CliffordClassValue& CliffordClassValue::operator+=(const CliffordClassValue& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        value += o.value;
        tag = o.tag;
        return *this;
    }
    check_tags(tag, o.tag);
    value += o.value;
    if (value.is_zero()) tag.clear();
    return *this;
}

bool operator==(const CliffordClassValue& a, const CliffordClassValue& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.tag == b.tag && a.value == b.value;
}

CliffordClassValue CliffordClassValue::rebased(const std::string& new_tag, const Rational& factor) const {
    if (is_zero()) return CliffordClassValue(value.dim());
    CliffordElement v = value;
    v *= factor;
    return {v, new_tag};
}

CliffordClassValue CliffordClassValue::conjugated() const { return {conjugate(value), tag}; }

std::string to_string(const ClassValue& v) {
    if (v.is_zero()) return "0";
    return to_string(v.ratio) + " × BASE[" + v.tag + "]";
}

std::string to_string(const CliffordClassValue& v) {
    if (v.is_zero()) return "0";
    const std::string body = to_string(v.value);
    const bool single = v.value.terms().size() == 1;
    return (single ? body : "(" + body + ")") + " × BASE[" + v.tag + "]";
}

std::string sphere_tag(const RootSystem& r) { return "sphere;" + r.tag(); }

std::string ball_tag(const RootSystem& r, const Rational& alpha) {
    return "ball;" + r.tag() + ";alpha=" + to_string(alpha);
}

std::string bilinear_tag(const Rational& mu, int k, const Rational& alpha) {
    std::ostringstream os;
    os << "bilinear;mu=" << to_string(mu) << ";k=" << k << ";alpha=" << to_string(alpha);
    return os.str();
}

Rational sphere_moment(const std::vector<Rational>& axis_k, const Monomial& a) {
    if (static_cast<int>(axis_k.size()) != a.dim()) throw DimensionMismatch("monomial and weight dimensions differ");
    Rational numerator = 1;
    Rational gamma = 0;
    unsigned half_total = 0;
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] % 2 != 0) return 0;
        const Rational& ki = axis_k[static_cast<std::size_t>(i)];
        numerator *= pochhammer(ki + Rational(1, 2), a[i] / 2);
        gamma += ki;
        half_total += a[i] / 2;
    }
    Rational base = gamma + Rational(a.dim(), 2);
    if (fault_active(Fault::sphere_pochhammer_shift)) base += 1;
    return numerator / pochhammer(base, half_total);
}

CliffordClassValue sphere_integral(const RootSystem& r, const MVPoly& p) {
    if (p.dim() != r.dim()) throw DimensionMismatch("polynomial and root system dimensions differ");
    const std::vector<Rational> k = r.axis_multiplicities();
    CliffordElement acc(r.dim());
    for (const auto& [mono, c] : p.terms()) {
        const Rational moment = sphere_moment(k, mono);
        if (moment == 0) continue;
        CliffordElement term = c;
        term *= moment;
        acc += term;
    }
    if (acc.is_zero()) return CliffordClassValue(r.dim());
    return {acc, sphere_tag(r)};
}

CliffordClassValue ball_inner(const RootSystem& r, const MVPoly& f, const MVPoly& g, const Rational& alpha) {
    if (alpha <= -1) throw PreconditionError("ball inner product needs alpha > -1, got " + to_string(alpha));
    if (f.dim() != r.dim() || g.dim() != r.dim()) throw DimensionMismatch("polynomial and root system dimensions differ");
    const std::vector<Rational> k = r.axis_multiplicities();
    const Rational half_mu = r.mu() / 2;
    const MVPoly h = f.conjugated() * g;
    CliffordElement acc(r.dim());
    for (const auto& [mono, c] : h.terms()) {
        const Rational moment = sphere_moment(k, mono);
        if (moment == 0) continue;
        const unsigned half_p = mono.degree() / 2;
        CliffordElement term = c;
        term *= moment * pochhammer(half_mu, half_p) / pochhammer(half_mu + alpha + 1, half_p);
        acc += term;
    }
    if (acc.is_zero()) return CliffordClassValue(r.dim());
    return {acc, ball_tag(r, alpha)};
}

Rational ball_base_shift(const Rational& mu, const Rational& alpha, int n) {
    if (n < 0) throw PreconditionError("base shift needs n >= 0");
    return pochhammer(alpha + 1, static_cast<unsigned>(n)) / pochhammer(mu / 2 + alpha + 1, static_cast<unsigned>(n));
}

void require_well_posed_bilinear(const Rational& mu, const Rational& alpha) {
    if (is_integer(alpha) && alpha >= 0)
        throw IllPosed("bilinear form is undefined for alpha in N (alpha = " + to_string(alpha) + ")");
    if (is_integer(Rational(mu / 2 + alpha)))
        throw IllPosed("bilinear form is undefined for integer mu/2 + alpha (" + to_string(Rational(mu / 2 + alpha)) + ")");
}

ClassValue bilinear_form(const Rational& mu, int k, const Rational& alpha, int i, int j) {
    require_well_posed_bilinear(mu, alpha);
    if (i < 0 || j < 0) throw PreconditionError("powers of x must be non-negative");
    if ((i + j) % 2 != 0) return {};
    const Rational q = mu / 2 + k;
    const int s = i / 2;
    const int t = j / 2;
    const unsigned n = static_cast<unsigned>(s + t + (i % 2));
    Rational ratio = pochhammer(q, n) / pochhammer(-q - alpha - n, n);
    if ((s + t) % 2 == 1 && !fault_active(Fault::bilinear_sign)) ratio = -ratio;
    return {ratio, bilinear_tag(mu, k, alpha)};
}

ClassValue bilinear_form(const Rational& mu, int k, const Rational& alpha, const std::vector<Rational>& a,
                         const std::vector<Rational>& b) {
    ClassValue acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            acc += (a[i] * b[j]) * bilinear_form(mu, k, alpha, static_cast<int>(i), static_cast<int>(j));
        }
    }
    return acc;
}

Rational bilinear_base_shift(const Rational& mu, int k, const Rational& alpha, int n) {
    if (n < 0) throw PreconditionError("base shift needs n >= 0");
    const Rational q = mu / 2 + k;
    const unsigned u = static_cast<unsigned>(n);
    return pochhammer(-alpha - n, u) / pochhammer(-q - alpha - n, u);
}

std::vector<std::pair<std::size_t, std::size_t>> GramMatrix::nonzero_off_diagonal() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries[i].size(); ++j)
            if (i != j && entries[i][j] && !entries[i][j]->is_zero()) out.emplace_back(i, j);
    return out;
}

GramMatrix gram(const OperatorContext& ctx, Family family, const Rational& alpha, int t_max,
                const std::vector<MVPoly>& monogenics) {
    if (t_max < 0) throw PreconditionError("t_max must be non-negative");
    require_admissible_alpha(family, alpha);
    if (family == Family::euclid) require_well_posed_bilinear(ctx.mu(), alpha);
    const int dim = ctx.dim();

    GramMatrix g;
    g.family = family;
    g.alpha = alpha;
    std::vector<GegenbauerPoly> polys;
    std::vector<MVPoly> expanded;
    for (std::size_t idx = 0; idx < monogenics.size(); ++idx)
        for (int t = 0; t <= t_max; ++t) {
            GegenbauerPoly p = gegenbauer(ctx, family, t, alpha, monogenics[idx]);
            g.labels.push_back({t, p.k, idx});
            if (family == Family::ball) expanded.push_back(p.expand());
            polys.push_back(std::move(p));
        }

    const std::size_t n = g.labels.size();
    g.entries.assign(n, std::vector<std::optional<CliffordClassValue>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (family == Family::ball) {
                if (j < i) {
                    g.entries[i][j] = g.entries[j][i]->conjugated();
                    continue;
                }
                g.entries[i][j] = ball_inner(ctx.system(), expanded[i], expanded[j], alpha);
            } else {
                if (g.labels[i].monogenic != g.labels[j].monogenic) continue;
                const ClassValue v = bilinear_form(ctx.mu(), g.labels[i].k, alpha, polys[i].coeffs, polys[j].coeffs);
                CliffordClassValue c(dim);
                if (!v.is_zero()) c = CliffordClassValue(CliffordElement::scalar(dim, v.ratio), v.tag);
                g.entries[i][j] = c;
            }
        }
    return g;
}

Rational normalization_lemma_ratio(int t, const Rational& alpha, const Rational& mu, int k) {
    if (t < 0) throw PreconditionError("degree t must be non-negative");
    const int s = t / 2;
    const Rational half_mu = mu / 2;
    // Gamma(mu/2+alpha+1) / Gamma(mu/2+alpha+n)
    auto gamma_ratio = [&](int n) -> Rational {
        if (n == 0) return Rational(half_mu + alpha);
        return Rational(1) / pochhammer(half_mu + alpha + 1, static_cast<unsigned>(n - 1));
    };
    Rational two_pow = 1;
    if (t % 2 == 0) {
        for (int i = 0; i < 4 * s; ++i) two_pow *= 2;
        return two_pow * factorial(s) * pochhammer(alpha + s + 1, static_cast<unsigned>(s)) *
               pochhammer(alpha + 1, static_cast<unsigned>(2 * s)) * pochhammer(half_mu, static_cast<unsigned>(k + s)) *
               gamma_ratio(k + s) / (half_mu + k + alpha + 2 * s);
    }
    for (int i = 0; i < 4 * s + 2; ++i) two_pow *= 2;
    return -two_pow * factorial(s) * pochhammer(alpha + s + 1, static_cast<unsigned>(s + 1)) *
           pochhammer(alpha + 1, static_cast<unsigned>(2 * s + 1)) *
           pochhammer(half_mu, static_cast<unsigned>(k + s + 1)) * gamma_ratio(k + s + 1) /
           (half_mu + k + alpha + 2 * s + 1);
}

NormalizationCheck check_normalization_lemma(const OperatorContext& ctx, int t, const Rational& alpha,
                                             const MVPoly& monogenic) {
    const RootSystem& r = ctx.system();
    const MVPoly c = gegenbauer_expanded(ctx, Family::ball, t, alpha, monogenic);
    NormalizationCheck out;
    out.t = t;
    out.computed = ball_inner(r, c, c, alpha);
    const CliffordClassValue norm = sphere_integral(r, monogenic.conjugated() * monogenic);
    const Rational lemma = normalization_lemma_ratio(t, alpha, ctx.mu(), monogenic.degree());
    out.predicted = norm.rebased(ball_tag(r, alpha), lemma);
    if (!out.predicted.is_zero() && !out.computed.is_zero() && out.computed.tag == out.predicted.tag) {
        const auto& [blade, v] = *out.predicted.value.terms().begin();
        const Rational factor = out.computed.value.coeff(blade) / v;
        CliffordElement scaled = out.predicted.value;
        scaled *= factor;
        if (scaled == out.computed.value) out.factor = factor;
    }
    return out;
}

OrthogonalityReport verify_monogenic_orthogonality(const OperatorContext& ctx, int k_max) {
    const RootSystem& r = ctx.system();
    std::vector<MonogenicBasis> bases;
    for (int k = 0; k <= k_max; ++k) bases.push_back(monogenic_basis(ctx, k));

    OrthogonalityReport report;
    auto expect_zero = [&](const MVPoly& integrand, const std::string& what) {
        ++report.cases;
        const CliffordClassValue v = sphere_integral(r, integrand);
        if (!v.is_zero()) report.failures.push_back(what + ": " + to_string(v));
    };
    auto name = [](const char* kind, int k, std::size_t i) {
        return std::string(kind) + "(" + std::to_string(k) + "," + std::to_string(i) + ")";
    };

    for (int k = 0; k <= k_max; ++k)
        for (std::size_t i = 0; i < bases[k].basis.size(); ++i) {
            const MVPoly& a = bases[k].basis[i];
            const MVPoly a_bar = a.conjugated();
            ++report.cases;
            const CliffordClassValue norm = sphere_integral(r, a_bar * a);
            if (norm.is_zero() || norm.value.scalar_part() <= 0)
                report.failures.push_back("norm of " + name("M", k, i) + " is not positive: " + to_string(norm));
            for (int l = 0; l <= k_max; ++l)
                for (std::size_t j = 0; j < bases[l].basis.size(); ++j) {
                    const MVPoly& b = bases[l].basis[j];
                    if (l != k) expect_zero(a_bar * b, "inner " + name("M", k, i) + " vs inner " + name("M", l, j));
                    const MVPoly outer = times_vector(b);
                    expect_zero(a_bar * outer, "inner " + name("M", k, i) + " vs outer " + name("xM", l, j));
                    expect_zero(outer.conjugated() * a, "outer " + name("xM", l, j) + " vs inner " + name("M", k, i));
                }
        }
    return report;
}

} // namespace dunkl
