#pragma once

#include "dunkl/clifford.hpp"
#include "dunkl/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

/// Exponent vector of x_1^{a_1} ... x_m^{a_m}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int dim) : exps_(static_cast<std::size_t>(dim), 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    int dim() const { return static_cast<int>(exps_.size()); }
    unsigned operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    unsigned& operator[](int i) { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned degree() const;

    Monomial times(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded order: lower total degree first, then lexicographically larger
/// exponent vectors first (x_1^2 < x_1 x_2 < x_2^2 in iteration order).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All exponent vectors of total degree d in m variables, in GradedOrder.
std::vector<Monomial> monomials_of_degree(int dim, unsigned degree);

/// Rational m x m matrix, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(int n);
    static RationalMatrix identity(int n);

    int size() const { return n_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int n_;
    std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
Rational determinant(RationalMatrix a);

/// Polynomial in x_1..x_m with coefficients in R_{0,m}.
///
/// Products keep the written order of the Clifford coefficients: in p*q the
/// coefficient of p stands on the left. The variables x_i are real and commute
/// with everything.
class MVPoly {
public:
    using Terms = std::map<Monomial, CliffordElement, GradedOrder>;

    explicit MVPoly(int dim);

    static MVPoly constant(const CliffordElement& c);
    static MVPoly scalar(int dim, const Rational& value);
    static MVPoly term(const Monomial& mono, const CliffordElement& c);
    /// x_{axis+1}
    static MVPoly variable(int dim, int axis);
    /// The vector variable x = sum_j e_j x_j.
    static MVPoly vector_variable(int dim);
    /// |x|^2 = x_1^2 + ... + x_m^2.
    static MVPoly norm_squared(int dim);
    /// <alpha, x> as a scalar linear form.
    static MVPoly linear_form(std::span<const Rational> alpha);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Highest total degree; -1 for the zero polynomial.
    int degree() const;
    int lowest_degree() const;
    bool is_homogeneous() const;
    /// All coefficients are multiples of the unit blade.
    bool is_scalar() const;

    CliffordElement coeff(const Monomial& mono) const;
    void add_term(const Monomial& mono, const CliffordElement& c);
    void add_scaled(const MVPoly& other, const Rational& s);

    MVPoly& operator+=(const MVPoly& other);
    MVPoly& operator-=(const MVPoly& other);
    MVPoly& operator*=(const Rational& s);

    /// c * p, Clifford constant on the left of every coefficient.
    MVPoly left_mul(const CliffordElement& c) const;
    /// p * c.
    MVPoly right_mul(const CliffordElement& c) const;

    MVPoly partial(int axis) const;
    MVPoly conjugated() const;
    MVPoly homogeneous_component(unsigned degree) const;
    /// Coefficient of a single blade as a scalar polynomial.
    MVPoly blade_component(Blade mask) const;

    CliffordElement evaluate(std::span<const Rational> point) const;

    friend bool operator==(const MVPoly& a, const MVPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    Terms terms_;
};

MVPoly poly_add(const MVPoly& a, const MVPoly& b);
MVPoly poly_mul(const MVPoly& a, const MVPoly& b);

MVPoly operator+(MVPoly a, const MVPoly& b);
MVPoly operator-(MVPoly a, const MVPoly& b);
MVPoly operator-(MVPoly a);
MVPoly operator*(const MVPoly& a, const MVPoly& b);
MVPoly operator*(MVPoly a, const Rational& s);
MVPoly operator*(const Rational& s, MVPoly a);

/// p^n for n >= 0.
MVPoly power(const MVPoly& p, unsigned n);

/// Replace every x_i by sum_j A(i,j) x_j; Clifford coefficients untouched.
MVPoly substitute_linear(const MVPoly& p, const RationalMatrix& a);

/// Quotient q with q * <alpha, x> == p. Throws NotDivisible on a nonzero
/// remainder and PreconditionError if alpha is zero.
MVPoly exact_div_linear(const MVPoly& p, std::span<const Rational> alpha);

/// Exact division by |x|^2 when possible.
/// Returns false and leaves `quotient` untouched if |x|^2 does not divide p.
bool try_div_norm_squared(const MVPoly& p, MVPoly& quotient);

MVPoly homogeneous_component(const MVPoly& p, unsigned degree);

std::string to_string(const MVPoly& p);

/// Finite sum  sum_j r^{2 q_j} P_j(x)  with rational exponents q_j and
/// polynomial P_j, where r = |x|. Houses outer monogenics.
///
/// normalized() brings the value to a canonical form: parts whose exponents
/// differ by an integer are merged through |x|^2 = r^2, and every factor of
/// |x|^2 dividing a part is moved into its exponent. Equality compares the
/// canonical forms.
class RadialScaledFunction {
public:
    struct Part {
        Rational q;
        MVPoly poly;
    };

    explicit RadialScaledFunction(int dim);
    static RadialScaledFunction from_poly(const MVPoly& p);
    static RadialScaledFunction scaled(const Rational& q, const MVPoly& p);

    int dim() const { return dim_; }
    const std::vector<Part>& parts() const { return parts_; }
    bool is_zero() const;

    /// Appends r^{2q} P, merging with an existing part of equal exponent.
    void add_part(const Rational& q, const MVPoly& p);

    RadialScaledFunction normalized() const;

    /// Homogeneity degree if every part is homogeneous of the same degree
    /// 2q + deg P; throws PreconditionError otherwise.
    Rational homogeneity_degree() const;

    /// Multiply by r^{2q}.
    RadialScaledFunction times_radial(const Rational& q) const;
    /// Left multiplication by a polynomial (x, M_k, ...).
    RadialScaledFunction left_mul(const MVPoly& p) const;
    RadialScaledFunction operator+(const RadialScaledFunction& other) const;
    RadialScaledFunction operator-(const RadialScaledFunction& other) const;

    /// If the canonical form is a single part with integer q >= 0, the
    /// polynomial it represents. Throws PreconditionError otherwise.
    MVPoly to_poly() const;

    friend bool operator==(const RadialScaledFunction& a, const RadialScaledFunction& b);

private:
    int dim_;
    std::vector<Part> parts_;
};

std::string to_string(const RadialScaledFunction& f);

} // namespace dunkl
