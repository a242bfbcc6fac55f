#pragma once

#include "dunkl/jacobi.hpp"
#include "dunkl/operators.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace dunkl {

/// C-family on the unit ball (weight (1-|x|^2)^alpha) or G-family on R^m
/// (weight (1+|x|^2)^alpha).
enum class Family { ball, euclid };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Throws PreconditionError when alpha is not admissible for the family
/// (ball needs alpha > -1).
void require_admissible_alpha(Family family, const Rational& alpha);

/// Sum_j a_j x^j M_k. The coefficients depend only on (family, t, alpha, mu, k),
/// not on the particular monogenic.
struct GegenbauerPoly {
    Family family = Family::ball;
    int t = 0;
    Rational alpha;
    int k = 0;
    Rational mu;
    /// a_0 .. a_t; entries of the wrong parity are zero.
    std::vector<Rational> coeffs;
    /// Attached monogenic; may be empty for closed-form values.
    MVPoly monogenic{1};

    Rational coeff(int j) const;
    /// The scalar polynomial sum_j a_j y^j in the vector variable y = x.
    UniPoly as_unipoly() const;
    /// sum_j a_j x^j M for a caller-supplied monogenic of degree k.
    MVPoly expand(const MVPoly& m) const;
    MVPoly expand() const { return expand(monogenic); }
};

/// Ball:   (1-|x|^2) D_k f - 2(alpha+1) x f
/// Euclid: (1+|x|^2) D_k f + 2(alpha+1) x f
MVPoly d_alpha(const OperatorContext& ctx, Family family, const Rational& alpha, const MVPoly& f);

/// D_alpha D_{alpha+1} ... D_{alpha+t-1}[M] as a polynomial.
MVPoly gegenbauer_expanded(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                           const MVPoly& monogenic);

/// Operator construction followed by extraction of the a_j. Throws
/// PreconditionError if M is not a nonzero homogeneous monogenic.
GegenbauerPoly gegenbauer(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                          const MVPoly& monogenic);

/// Writes p as sum_j a_j x^j M (exact), throwing Error when p is not of that form.
std::vector<Rational> extract_coefficients(const MVPoly& p, const MVPoly& monogenic, int t);

/// t(2alpha+t+mu+2k) for even t, (2alpha+t+1)(t+mu+2k-1) for odd t.
Rational annihilation_constant(Family family, const Rational& alpha, int t, const Rational& mu, int k);

/// Closed form through Jacobi polynomials in 1 +- 2x^2 (x the vector variable).
GegenbauerPoly closed_form(Family family, int t, const Rational& alpha, int k, const Rational& mu);

/// Explicit a_j^{t,alpha}; zero for j of the wrong parity or outside [0, t].
Rational explicit_coefficient(Family family, int t, int j, const Rational& alpha, int k, const Rational& mu);

/// (D, E) of the three-term relation.
std::pair<Rational, Rational> three_term_constants(const Rational& alpha, int t, const Rational& mu, int k);

// Residuals: each is zero exactly when the identity holds.

/// D_k C_t^alpha - C(alpha,t) C_{t-1}^{alpha+1}   (euclid: + C(alpha,t) G_{t-1}^{alpha+1})
MVPoly verify_annihilation(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                           const MVPoly& monogenic);
/// (1-|x|^2) Delta_k C + 2(alpha+1) x D_k C + C(alpha,t) C
/// (euclid: (1+|x|^2) Delta_k G - 2(alpha+1) x D_k G - C(alpha,t) G)
MVPoly verify_differential_equation(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                                    const MVPoly& monogenic);
/// C_{t+1}^a + 2(a+1) x C_t^{a+1} - C(a+1,t)(1-|x|^2) C_{t-1}^{a+2}
/// (euclid: G_{t+1}^a - 2(a+1) x G_t^{a+1} + C(a+1,t)(1+|x|^2) G_{t-1}^{a+2}); the last term is absent for t = 0.
MVPoly verify_recurrence(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                         const MVPoly& monogenic);
/// D/(2(a+t)) C_t - [-(a+mu/2+k+t-1) x C_{t-1} + (a+t-1) E C_{t-2}] with the
/// right-hand side negated for euclid. Needs t >= 1 and alpha + t != 0.
MVPoly verify_three_term(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                         const MVPoly& monogenic);
/// Coefficient residual of C_{2t+1,k}(x) + 2(a+2t+1) x C_{2t,k+1}(x)
/// (euclid: G_{2t+1,k}(x) - 2(a+2t+1) x G_{2t,k+1}(x)), using monogenic bases of degree k and k+1.
UniPoly verify_corollary_shift(const OperatorContext& ctx, Family family, int t, const Rational& alpha, int k);
/// Rodrigues form for integer alpha with alpha + t >= 0:
/// (1 -+ |x|^2)^{max(alpha,0)} C_t - (1 -+ |x|^2)^{max(-alpha,0)} D_k^t[(1 -+ |x|^2)^{alpha+t} M].
MVPoly verify_rodrigues(const OperatorContext& ctx, Family family, int t, const Rational& alpha,
                        const MVPoly& monogenic);

/// a_j^{s, alpha + t_max - s} for s = 0..t_max, built from a_0^0 = 1 by the
/// one-step coefficient recursions of the D_alpha construction.
struct CoefficientTable {
    Family family = Family::ball;
    Rational alpha;
    int t_max = 0;
    int k = 0;
    Rational mu;
    std::vector<std::vector<Rational>> rows;

    /// Parameter of level s: alpha + t_max - s.
    Rational level_alpha(int s) const { return alpha + (t_max - s); }
    Rational at(int s, int j) const;
};

CoefficientTable coefficient_recursions(Family family, int t_max, const Rational& alpha, const Rational& mu,
                                        int k);

/// Checks the annihilation form on the table: -2i a_{2i}^{s} = +-C a_{2i-1}^{s-1}
/// for even s and -(2i+2k+mu) a_{2i+1}^{s} = +-C a_{2i}^{s-1} for odd s.
/// Returns descriptions of violated entries.
std::vector<std::string> check_annihilation_form(const CoefficientTable& table);

/// -(1-|x|^2)^2 Delta_k - 2(a+2)(2a+2+mu)|x|^2 + 4(a+2)(1-|x|^2) E + 2(a+2) mu
MVPoly scalar_d_alpha(const OperatorContext& ctx, const Rational& alpha, const MVPoly& f);

/// scalar_d_alpha with parameters alpha, alpha+2, ..., alpha+2t-2 applied to
/// a scalar Dunkl harmonic (innermost alpha+2t-2). Throws PreconditionError
/// for non-scalar or non-harmonic input.
MVPoly scalar_gegenbauer(const OperatorContext& ctx, int t, const Rational& alpha, const MVPoly& harmonic);

/// 2^{2t}(a+t+1)_t t! P_t^{(mu/2+k-1,a)}(1-2|x|^2) H.
MVPoly scalar_closed_form(const OperatorContext& ctx, int t, const Rational& alpha, const MVPoly& harmonic);

} // namespace dunkl
