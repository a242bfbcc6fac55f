#pragma once

#include "dunkl/operators.hpp"

#include <random>

namespace testing {

using dunkl::Blade;
using dunkl::CliffordElement;
using dunkl::Monomial;
using dunkl::MVPoly;
using dunkl::Rational;

inline dunkl::RootSystem z2_pair() { return dunkl::make_preset(dunkl::Preset::Z2, 2, {Rational(1, 2), Rational(1, 3)}); }
inline dunkl::RootSystem a2() { return dunkl::make_preset(dunkl::Preset::A, 3, {Rational(1, 2)}); }

/// Small random rationals for property tests; fixed seeds keep runs reproducible.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(int range = 5, int max_den = 4) {
        return dunkl::make_rational(integer(-range, range), integer(1, max_den));
    }

    Rational nonzero_rational(int range = 5, int max_den = 4) {
        Rational r = 0;
        while (r == 0) r = rational(range, max_den);
        return r;
    }

    CliffordElement clifford(int dim, int terms = 3) {
        CliffordElement c(dim);
        for (int i = 0; i < terms; ++i)
            c.add(static_cast<Blade>(integer(0, (1 << dim) - 1)), rational());
        return c;
    }

    /// Clifford-valued polynomial with total degree <= max_degree.
    MVPoly poly(int dim, int max_degree, int terms = 4, bool scalar = false) {
        MVPoly p(dim);
        for (int i = 0; i < terms; ++i) {
            Monomial m(dim);
            int budget = integer(0, max_degree);
            for (int j = 0; j < dim && budget > 0; ++j) {
                const int e = j + 1 == dim ? budget : integer(0, budget);
                m[j] = static_cast<unsigned>(e);
                budget -= e;
            }
            p.add_term(m, scalar ? CliffordElement::scalar(dim, rational()) : clifford(dim, 2));
        }
        return p;
    }

    MVPoly homogeneous(int dim, int degree, int terms = 4, bool scalar = false) {
        MVPoly p(dim);
        const auto monos = dunkl::monomials_of_degree(dim, static_cast<unsigned>(degree));
        for (int i = 0; i < terms; ++i) {
            const auto& m = monos[static_cast<std::size_t>(integer(0, static_cast<int>(monos.size()) - 1))];
            p.add_term(m, scalar ? CliffordElement::scalar(dim, rational()) : clifford(dim, 2));
        }
        return p;
    }

    std::vector<Rational> point(int dim) {
        std::vector<Rational> x;
        for (int i = 0; i < dim; ++i) x.push_back(rational(7, 5));
        return x;
    }

private:
    std::mt19937 rng_;
};

} // namespace testing
