#include "dunkl/clifford.hpp"

#include "dunkl/errors.hpp"

#include <sstream>

namespace dunkl {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDimension)
        throw InvalidInput("Clifford dimension must lie in [1, " + std::to_string(kMaxDimension) + "], got " +
                           std::to_string(dim));
}

void require_same_dim(const CliffordElement& a, const CliffordElement& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("Clifford elements of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
}

} // namespace

int blade_product_sign(Blade a, Blade b) {
    // Each generator of b moves left past the larger generators of a.
    int swaps = 0;
    Blade shifted = a >> 1;
    while (shifted != 0) {
        swaps += __builtin_popcount(shifted & b);
        shifted >>= 1;
    }
    // e_i e_i = -1 for every shared generator.
    swaps += __builtin_popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

CliffordElement::CliffordElement(int dim) : dim_(dim) { check_dim(dim); }

CliffordElement CliffordElement::scalar(int dim, const Rational& value) { return blade(dim, 0, value); }

CliffordElement CliffordElement::blade(int dim, Blade mask, const Rational& value) {
    CliffordElement c(dim);
    if (mask >= (Blade{1} << dim)) throw InvalidInput("blade mask out of range for m=" + std::to_string(dim));
    c.add(mask, value);
    return c;
}

CliffordElement CliffordElement::generator(int dim, int axis) {
    if (axis < 0 || axis >= dim) throw InvalidInput("generator index out of range");
    return blade(dim, Blade{1} << axis);
}

bool CliffordElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational CliffordElement::coeff(Blade mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add(Blade mask, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
    require_same_dim(*this, other);
    for (const auto& [mask, v] : other.terms_) add(mask, v);
    return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
    require_same_dim(*this, other);
    for (const auto& [mask, v] : other.terms_) add(mask, -v);
    return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, v] : terms_) v *= s;
    return *this;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    require_same_dim(a, b);
    CliffordElement out(a.dim());
    for (const auto& [ma, va] : a.terms())
        for (const auto& [mb, vb] : b.terms()) {
            Rational v = va * vb;
            if (blade_product_sign(ma, mb) < 0) v = -v;
            out.add(ma ^ mb, v);
        }
    return out;
}

CliffordElement conjugate(const CliffordElement& a) {
    CliffordElement out(a.dim());
    for (const auto& [mask, v] : a.terms()) {
        const int g = blade_grade(mask);
        out.add(mask, ((g * (g + 1) / 2) % 2) ? Rational(-v) : v);
    }
    return out;
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
CliffordElement operator-(CliffordElement a) { return a *= Rational(-1); }
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return clifford_mul(a, b); }
CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }

std::string blade_name(Blade mask) {
    if (mask == 0) return "1";
    std::ostringstream os;
    os << 'e';
    bool wide = mask >= (Blade{1} << 9);
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if (!((mask >> i) & 1)) continue;
        if (wide && !first) os << ',';
        os << (i + 1);
        first = false;
    }
    return wide ? "e{" + os.str().substr(1) + "}" : os.str();
}

std::string to_string(const CliffordElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, v] : a.terms()) {
        Rational mag = abs(v);
        if (first) {
            if (v < 0) os << '-';
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (mask == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << blade_name(mask);
        }
    }
    return os.str();
}

} // namespace dunkl
