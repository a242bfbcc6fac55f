#pragma once

#include "dunkl/gegenbauer.hpp"
#include "dunkl/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dunkl {

/// Exact rational multiple of one transcendental base constant, named by
/// `tag`. Zero carries no tag and combines with anything; nonzero values with
/// different tags never mix (ContextMismatch).
struct ClassValue {
    Rational ratio;
    std::string tag;

    bool is_zero() const { return ratio == 0; }
    ClassValue& operator+=(const ClassValue& o);
    friend ClassValue operator+(ClassValue a, const ClassValue& b) { return a += b; }
    friend ClassValue operator*(const Rational& s, ClassValue v);
    friend bool operator==(const ClassValue& a, const ClassValue& b);
    /// Same value expressed against another base: base_old = factor * base_new.
    ClassValue rebased(const std::string& new_tag, const Rational& factor) const;
};

/// Clifford-valued analogue: every blade coefficient is a ratio to `tag`.
struct CliffordClassValue {
    CliffordElement value;
    std::string tag;

    explicit CliffordClassValue(int dim) : value(dim) {}
    CliffordClassValue(CliffordElement v, std::string t) : value(std::move(v)), tag(std::move(t)) {}

    bool is_zero() const { return value.is_zero(); }
    CliffordClassValue& operator+=(const CliffordClassValue& o);
    friend bool operator==(const CliffordClassValue& a, const CliffordClassValue& b);
    CliffordClassValue rebased(const std::string& new_tag, const Rational& factor) const;
    CliffordClassValue conjugated() const;
};

std::string to_string(const ClassValue& v);
std::string to_string(const CliffordClassValue& v);

// Base constants.
//   sphere:   S = int_{S^{m-1}} w_k dS
//   ball:     (1/2) B(mu/2, alpha+1) S = int_{B(1)} (1-|x|^2)^alpha w_k dV
//   bilinear: (1/2) B(k+mu/2, -k-mu/2-alpha)
std::string sphere_tag(const RootSystem& r);
std::string ball_tag(const RootSystem& r, const Rational& alpha);
std::string bilinear_tag(const Rational& mu, int k, const Rational& alpha);

/// int_{S^{m-1}} x^a w_k dS / int_{S^{m-1}} w_k dS for a product weight:
/// prod_i (k_i+1/2)_{a_i/2} / (gamma+m/2)_{|a|/2}, zero if some a_i is odd.
Rational sphere_moment(const std::vector<Rational>& axis_k, const Monomial& a);

/// Throws UnsupportedWeight for non-product root systems.
CliffordClassValue sphere_integral(const RootSystem& r, const MVPoly& p);

/// <f, g>_alpha = int_{B(1)} conj(f) g (1-|x|^2)^alpha w_k dV. Needs alpha > -1.
CliffordClassValue ball_inner(const RootSystem& r, const MVPoly& f, const MVPoly& g, const Rational& alpha);

/// ball(alpha + n) / ball(alpha) for integer n >= 0.
Rational ball_base_shift(const Rational& mu, const Rational& alpha, int n);

/// Throws IllPosed unless alpha is not a non-negative integer and mu/2+alpha
/// is not an integer.
void require_well_posed_bilinear(const Rational& mu, const Rational& alpha);

/// <x^i M_k, x^j M_k>_alpha for the bilinear form on R(M_k) with the
/// normalization int conj(M_k) M_k w_k dS = 1.
ClassValue bilinear_form(const Rational& mu, int k, const Rational& alpha, int i, int j);

/// Bilinear form of sum_i a_i x^i M_k and sum_j b_j x^j M_k.
ClassValue bilinear_form(const Rational& mu, int k, const Rational& alpha, const std::vector<Rational>& a,
                         const std::vector<Rational>& b);

/// bilinear(alpha + n) / bilinear(alpha) for integer n >= 0.
Rational bilinear_base_shift(const Rational& mu, int k, const Rational& alpha, int n);

/// Row/column label of a Gram matrix.
struct GramLabel {
    int t = 0;
    int k = 0;
    /// Index of the monogenic in the caller's list.
    std::size_t monogenic = 0;
};

/// Entries are nullopt where the pairing is undefined (the Euclidean form
/// only pairs elements of the same R(M_k)).
struct GramMatrix {
    Family family = Family::ball;
    Rational alpha;
    std::vector<GramLabel> labels;
    std::vector<std::vector<std::optional<CliffordClassValue>>> entries;

    std::size_t size() const { return labels.size(); }
    /// (i, j) pairs with i != j whose entry is defined and nonzero.
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_off_diagonal() const;
};

/// Gram matrix of the family polynomials for t = 0..t_max over each
/// monogenic in the list. Ball: exact integrals (product weights only).
/// Euclid: the bilinear form, defined within one R(M_k) at a time.
GramMatrix gram(const OperatorContext& ctx, Family family, const Rational& alpha, int t_max,
                const std::vector<MVPoly>& monogenics);

/// Lemma value of <C_t(M_k), C_t(M_k)>_alpha divided by int conj(M) M w_k dS,
/// as a ratio of ball(alpha) to sphere base, reading
/// (z)_alpha = Gamma(z+alpha)/Gamma(z). Sign as stated (negative for odd t).
Rational normalization_lemma_ratio(int t, const Rational& alpha, const Rational& mu, int k);

struct NormalizationCheck {
    int t = 0;
    /// computed = factor * lemma; factor 1 is agreement.
    std::optional<Rational> factor;
    CliffordClassValue computed{1};
    CliffordClassValue predicted{1};
};

/// Compares the diagonal ball Gram entry of C_t(M) with the lemma.
NormalizationCheck check_normalization_lemma(const OperatorContext& ctx, int t, const Rational& alpha,
                                             const MVPoly& monogenic);

struct OrthogonalityReport {
    std::size_t cases = 0;
    std::vector<std::string> failures;
};

/// Inner/inner across degrees, inner/outer (outer as omega M_l(omega) on the
/// sphere) for all degrees, and positivity of the scalar part of each norm.
OrthogonalityReport verify_monogenic_orthogonality(const OperatorContext& ctx, int k_max);

} // namespace dunkl
