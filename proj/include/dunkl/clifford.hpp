#pragma once

#include "dunkl/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dunkl {

#ifndef DUNKL_MAX_DIMENSION
#define DUNKL_MAX_DIMENSION 8
#endif

/// Largest supported m; 2^m blades per element.
inline constexpr int kMaxDimension = DUNKL_MAX_DIMENSION;

/// Basis element e_A of R_{0,m}: bit i of the mask stands for e_{i+1}.
/// Blades are kept in canonical order e_1 < e_2 < ... < e_m.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

/// Sign of e_a e_b = sign * e_{a xor b} under e_i e_j + e_j e_i = -2 delta_ij.
int blade_product_sign(Blade a, Blade b);

/// Multivector of the Clifford algebra R_{0,m} with exact rational coefficients.
/// Zero coefficients are never stored, so two elements are equal iff their
/// maps are equal.
class CliffordElement {
public:
    using Terms = std::map<Blade, Rational>;

    explicit CliffordElement(int dim);

    static CliffordElement scalar(int dim, const Rational& value);
    static CliffordElement blade(int dim, Blade mask, const Rational& value = 1);
    /// e_{axis+1}
    static CliffordElement generator(int dim, int axis);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Rational coeff(Blade mask) const;
    Rational scalar_part() const { return coeff(0); }

    void add(Blade mask, const Rational& value);

    CliffordElement& operator+=(const CliffordElement& other);
    CliffordElement& operator-=(const CliffordElement& other);
    CliffordElement& operator*=(const Rational& s);

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    Terms terms_;
};

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

/// Clifford conjugation: the anti-involution with e_i -> -e_i.
CliffordElement conjugate(const CliffordElement& a);

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a);
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator*(CliffordElement a, const Rational& s);
CliffordElement operator*(const Rational& s, CliffordElement a);

/// Human-readable form, e.g. "3/4 - 2*e12 + e3". Zero prints as "0".
std::string to_string(const CliffordElement& a);
std::string blade_name(Blade mask);

} // namespace dunkl
