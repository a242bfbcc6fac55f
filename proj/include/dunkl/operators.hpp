#pragma once

#include "dunkl/polynomial.hpp"
#include "dunkl/root_system.hpp"

#include <memory>

namespace dunkl {

/// Root system plus everything the Dunkl operators derive from it: the
/// reflection matrices and a memo of difference quotients
/// (x^a - (r_alpha x)^a) / <alpha, x> per monomial.
///
/// Logically immutable; the memo is guarded internally so a context can be
/// shared between threads.
class OperatorContext {
public:
    explicit OperatorContext(RootSystem system);

    const RootSystem& system() const { return system_; }
    int dim() const { return system_.dim(); }
    Rational mu() const { return system_.mu(); }
    const RationalMatrix& reflection(std::size_t root) const { return reflections_[root]; }

    /// Difference quotients of a scalar monomial, one per positive root
    /// (empty polynomial for roots with k = 0).
    std::shared_ptr<const std::vector<MVPoly>> difference_quotients(const Monomial& mono) const;

private:
    struct Memo;
    RootSystem system_;
    std::vector<RationalMatrix> reflections_;
    std::shared_ptr<Memo> memo_;
};

/// T_i f = d_i f + sum_a k_a a_i (f - f o r_a) / <a, x>, applied to each
/// Clifford component. `axis` is 0-based.
MVPoly dunkl_T(const OperatorContext& ctx, int axis, const MVPoly& f);

/// Delta_k = sum_i T_i^2.
MVPoly dunkl_laplacian(const OperatorContext& ctx, const MVPoly& f);

enum class Side { left, right };

/// D_k f = sum_j e_j T_j[f] (left) or sum_j T_j[f] e_j (right).
MVPoly dunkl_dirac(const OperatorContext& ctx, const MVPoly& f, Side side = Side::left);

/// E = sum_i x_i d_i.
MVPoly euler(const MVPoly& f);

/// Gamma_k = D_k x + mu + E.
MVPoly gamma_op(const OperatorContext& ctx, const MVPoly& f);
/// Gamma_k through -x D_k - E; must agree with gamma_op.
MVPoly gamma_op_via_dirac(const OperatorContext& ctx, const MVPoly& f);

/// x f with the vector variable on the left.
MVPoly times_vector(const MVPoly& f);
/// |x|^2 f
MVPoly times_norm_squared(const MVPoly& f);

struct RadialOperator {
    enum class Kind { dunkl_T, dirac, euler };
    Kind kind;
    int axis = 0;

    static RadialOperator T(int axis) { return {Kind::dunkl_T, axis}; }
    static RadialOperator dirac() { return {Kind::dirac, 0}; }
    static RadialOperator euler() { return {Kind::euler, 0}; }
};

/// Exact action on sum r^{2q} P using the product rule with the G-invariant
/// factor r^{2q}: T_i[r^{2q} P] = 2q x_i r^{2q-2} P + r^{2q} T_i[P].
RadialScaledFunction apply_to_radial_scaled(const OperatorContext& ctx, RadialOperator op,
                                            const RadialScaledFunction& g);

} // namespace dunkl
