#include "dunkl/operators.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/fault.hpp"

#include <map>
#include <mutex>

namespace dunkl {

struct OperatorContext::Memo {
    std::mutex lock;
    std::map<Monomial, std::shared_ptr<const std::vector<MVPoly>>, GradedOrder> quotients;
};

OperatorContext::OperatorContext(RootSystem system) : system_(std::move(system)), memo_(std::make_shared<Memo>()) {
    for (const auto& root : system_.roots()) reflections_.push_back(reflection_matrix(root));
}

std::shared_ptr<const std::vector<MVPoly>> OperatorContext::difference_quotients(const Monomial& mono) const {
    {
        std::lock_guard guard(memo_->lock);
        auto it = memo_->quotients.find(mono);
        if (it != memo_->quotients.end()) return it->second;
    }
    const int dim = system_.dim();
    const MVPoly f = MVPoly::term(mono, CliffordElement::scalar(dim, 1));
    auto out = std::make_shared<std::vector<MVPoly>>();
    for (std::size_t a = 0; a < system_.size(); ++a) {
        if (system_.multiplicities()[a] == 0) {
            out->emplace_back(dim);
            continue;
        }
        const MVPoly diff = f - substitute_linear(f, reflections_[a]);
        out->push_back(exact_div_linear(diff, system_.roots()[a]));
    }
    std::lock_guard guard(memo_->lock);
    auto [it, inserted] = memo_->quotients.emplace(mono, std::move(out));
    return it->second;
}

namespace {

void check_axis(const OperatorContext& ctx, int axis) {
    if (axis < 0 || axis >= ctx.dim()) throw PreconditionError("Dunkl operator axis out of range");
}

void check_dim(const OperatorContext& ctx, const MVPoly& f) {
    if (f.dim() != ctx.dim())
        throw DimensionMismatch("polynomial of dimension " + std::to_string(f.dim()) + " in a context of dimension " +
                                std::to_string(ctx.dim()));
}

// sum_t Q_t * c with Q scalar, c a Clifford element.
void add_tensor(MVPoly& out, const MVPoly& scalar_poly, const CliffordElement& c, const Rational& s) {
    for (const auto& [mono, v] : scalar_poly.terms()) out.add_term(mono, c * (v.scalar_part() * s));
}

} // namespace

MVPoly dunkl_T(const OperatorContext& ctx, int axis, const MVPoly& f) {
    check_axis(ctx, axis);
    check_dim(ctx, f);
    const RootSystem& rs = ctx.system();
    MVPoly out = f.partial(axis);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.degree() == 0) continue;
        std::shared_ptr<const std::vector<MVPoly>> quotients;
        for (std::size_t a = 0; a < rs.size(); ++a) {
            const Rational& ai = rs.roots()[a][static_cast<std::size_t>(axis)];
            const Rational& k = rs.multiplicities()[a];
            if (ai == 0 || k == 0) continue;
            if (!quotients) quotients = ctx.difference_quotients(mono);
            add_tensor(out, (*quotients)[a], c, k * ai);
        }
    }
    return out;
}

MVPoly dunkl_laplacian(const OperatorContext& ctx, const MVPoly& f) {
    MVPoly out(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) out += dunkl_T(ctx, i, dunkl_T(ctx, i, f));
    return out;
}

MVPoly dunkl_dirac(const OperatorContext& ctx, const MVPoly& f, Side side) {
    MVPoly out(ctx.dim());
    for (int j = 0; j < ctx.dim(); ++j) {
        const CliffordElement ej = CliffordElement::generator(ctx.dim(), j);
        const MVPoly tj = dunkl_T(ctx, j, f);
        out += side == Side::left ? tj.left_mul(ej) : tj.right_mul(ej);
    }
    return out;
}

MVPoly euler(const MVPoly& f) {
    MVPoly out(f.dim());
    for (const auto& [mono, c] : f.terms()) out.add_term(mono, c * Rational(mono.degree()));
    return out;
}

MVPoly times_vector(const MVPoly& f) { return MVPoly::vector_variable(f.dim()) * f; }

MVPoly times_norm_squared(const MVPoly& f) { return MVPoly::norm_squared(f.dim()) * f; }

MVPoly gamma_op(const OperatorContext& ctx, const MVPoly& f) {
    MVPoly out = dunkl_dirac(ctx, times_vector(f));
    out.add_scaled(f, fault_active(Fault::gamma_mu_shift) ? ctx.mu() + 1 : ctx.mu());
    out += euler(f);
    return out;
}

MVPoly gamma_op_via_dirac(const OperatorContext& ctx, const MVPoly& f) {
    return -(times_vector(dunkl_dirac(ctx, f)) + euler(f));
}

RadialScaledFunction apply_to_radial_scaled(const OperatorContext& ctx, RadialOperator op,
                                            const RadialScaledFunction& g) {
    const int dim = ctx.dim();
    if (g.dim() != dim) throw DimensionMismatch("radial-scaled function dimension mismatch");
    RadialScaledFunction out(dim);
    for (const auto& part : g.parts()) {
        const Rational two_q = 2 * part.q;
        switch (op.kind) {
        case RadialOperator::Kind::dunkl_T:
            out.add_part(part.q - 1, MVPoly::variable(dim, op.axis) * part.poly * two_q);
            out.add_part(part.q, dunkl_T(ctx, op.axis, part.poly));
            break;
        case RadialOperator::Kind::dirac:
            out.add_part(part.q - 1, times_vector(part.poly) * two_q);
            out.add_part(part.q, dunkl_dirac(ctx, part.poly));
            break;
        case RadialOperator::Kind::euler:
            out.add_part(part.q, part.poly * two_q + euler(part.poly));
            break;
        }
    }
    return out;
}

} // namespace dunkl
