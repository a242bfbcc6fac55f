#pragma once

#include "dunkl/rational.hpp"

#include <string>
#include <vector>

namespace dunkl {

/// Univariate polynomial with rational coefficients, ascending degree.
/// The last stored coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    /// c * y^n
    static UniPoly monomial(unsigned n, const Rational& c = 1);
    /// a + b*y
    static UniPoly linear(const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(unsigned n) const { return n < c_.size() ? c_[n] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational evaluate(const Rational& y) const;
    UniPoly derivative() const;
    /// p(inner(y))
    UniPoly compose(const UniPoly& inner) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(UniPoly a, const Rational& s);
UniPoly operator*(const Rational& s, UniPoly a);

std::string to_string(const UniPoly& p, const std::string& var = "y");

/// Rising factorial (a)_p = a(a+1)...(a+p-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned p);

/// Jacobi polynomial P_t^{(a,b)}(y) = (1/t!) sum_i C(t,i) (a+i+1)_{t-i} (a+b+t+1)_i ((y-1)/2)^i.
UniPoly jacobi_poly(unsigned t, const Rational& a, const Rational& b);

} // namespace dunkl
