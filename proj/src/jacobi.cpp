#include "dunkl/jacobi.hpp"

#include <sstream>

namespace dunkl {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(unsigned n, const Rational& c) {
    std::vector<Rational> v(n + 1, 0);
    v[n] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b) { return UniPoly({a, b}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::evaluate(const Rational& y) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UniPoly(std::move(out));
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        Rational c = p.coeffs()[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        if (i == 0) {
            os << to_string(c);
            continue;
        }
        if (c != 1) os << to_string(c) << '*';
        os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

Rational pochhammer(const Rational& a, unsigned p) {
    Rational out = 1;
    for (unsigned i = 0; i < p; ++i) out *= a + i;
    return out;
}

UniPoly jacobi_poly(unsigned t, const Rational& a, const Rational& b) {
    const UniPoly shifted = UniPoly::linear(Rational(-1, 2), Rational(1, 2));
    UniPoly out;
    UniPoly power = UniPoly::constant(1);
    for (unsigned i = 0; i <= t; ++i) {
        const Rational c = Rational(binomial(t, i)) * pochhammer(a + i + 1, t - i) * pochhammer(a + b + t + 1, i);
        out += power * c;
        power = power * shifted;
    }
    return out * (Rational(1) / Rational(factorial(t)));
}

} // namespace dunkl
