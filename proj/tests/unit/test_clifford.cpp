#include "dunkl/clifford.hpp"
#include "dunkl/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace dunkl;

namespace {

// Oracle: multiply blades by writing both as generator words and bubble-sorting
// with e_i e_j = -e_j e_i, e_i e_i = -1.
std::pair<int, Blade> word_product(Blade a, Blade b, int dim) {
    std::vector<int> word;
    for (int i = 0; i < dim; ++i)
        if (a >> i & 1) word.push_back(i);
    for (int i = 0; i < dim; ++i)
        if (b >> i & 1) word.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            } else if (word[i] == word[i + 1]) {
                word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    Blade out = 0;
    for (int i : word) out |= Blade{1} << i;
    return {sign, out};
}

} // namespace

TEST_SUITE("clifford") {
    TEST_CASE("blade products agree with generator-word reduction") {
        for (int dim = 1; dim <= 5; ++dim)
            for (Blade a = 0; a < (Blade{1} << dim); ++a)
                for (Blade b = 0; b < (Blade{1} << dim); ++b) {
                    const auto [sign, blade] = word_product(a, b, dim);
                    CHECK(blade_product_sign(a, b) == sign);
                    const CliffordElement p = CliffordElement::blade(dim, a) * CliffordElement::blade(dim, b);
                    CHECK(p == CliffordElement::blade(dim, blade, sign));
                }
    }

    TEST_CASE("generators anticommute and square to -1") {
        const int dim = 4;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const auto ei = CliffordElement::generator(dim, i);
                const auto ej = CliffordElement::generator(dim, j);
                CHECK(ei * ej + ej * ei == CliffordElement::scalar(dim, i == j ? -2 : 0));
            }
    }

    TEST_CASE("associativity and conjugation are an anti-involution") {
        testing::Gen gen(11);
        for (int rep = 0; rep < 60; ++rep) {
            const int dim = gen.integer(1, 4);
            const auto a = gen.clifford(dim, 4);
            const auto b = gen.clifford(dim, 4);
            const auto c = gen.clifford(dim, 4);
            CHECK((a * b) * c == a * (b * c));
            CHECK(conjugate(a * b) == conjugate(b) * conjugate(a));
            CHECK(conjugate(conjugate(a)) == a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }

    TEST_CASE("conjugation signs by grade") {
        const int dim = 3;
        CHECK(conjugate(CliffordElement::generator(dim, 0)) == CliffordElement::blade(dim, 1, -1));
        CHECK(conjugate(CliffordElement::blade(dim, 3)) == CliffordElement::blade(dim, 3, -1));
        CHECK(conjugate(CliffordElement::blade(dim, 7)) == CliffordElement::blade(dim, 7, 1));
    }

    TEST_CASE("vector squares to minus its norm") {
        testing::Gen gen(5);
        const int dim = 3;
        CliffordElement v(dim);
        Rational norm = 0;
        for (int i = 0; i < dim; ++i) {
            const Rational c = gen.rational();
            v.add(Blade{1} << i, c);
            norm += c * c;
        }
        CHECK(v * v == CliffordElement::scalar(dim, -norm));
    }

    TEST_CASE("formatting and zero handling") {
        CliffordElement c(2);
        c.add(0, Rational(3, 4));
        c.add(3, Rational(-2));
        CHECK(to_string(c) == "3/4 - 2*e12");
        c.add(3, Rational(2));
        CHECK(c == CliffordElement::scalar(2, Rational(3, 4)));
        CHECK(CliffordElement(2).is_zero());
    }

    TEST_CASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(CliffordElement::generator(2, 0) * CliffordElement::generator(3, 0), DimensionMismatch);
    }
}
