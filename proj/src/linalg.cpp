#include "dunkl/linalg.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

using IntRow = std::vector<Integer>;

IntRow to_integer_row(const std::vector<Rational>& row, std::size_t columns) {
    if (row.size() != columns) throw DimensionMismatch("matrix row of wrong length");
    Integer l = 1;
    for (const auto& v : row)
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out(columns);
    for (std::size_t j = 0; j < columns; ++j) out[j] = row[j].get_num() * (l / row[j].get_den());
    return out;
}

void make_primitive(IntRow& row) {
    Integer g = 0;
    for (const auto& v : row)
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
    std::vector<IntRow> rows;          // pivot rows, reduced
    std::vector<std::size_t> pivots;   // pivot column of each row
};

// Reduced echelon form with integer entries; every pivot column is zero
// outside its pivot row.
Echelon reduce(const RationalRows& input, std::size_t columns) {
    std::vector<IntRow> m;
    m.reserve(input.size());
    for (const auto& r : input) {
        IntRow row = to_integer_row(r, columns);
        make_primitive(row);
        m.push_back(std::move(row));
    }
    Echelon e;
    std::size_t next = 0;
    for (std::size_t col = 0; col < columns && next < m.size(); ++col) {
        std::size_t p = next;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[next]);
        const IntRow& prow = m[next];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == next || m[r][col] == 0) continue;
            const Integer a = prow[col];
            const Integer b = m[r][col];
            for (std::size_t j = 0; j < columns; ++j) m[r][j] = a * m[r][j] - b * prow[j];
            make_primitive(m[r]);
        }
        e.pivots.push_back(col);
        ++next;
    }
    m.resize(next);
    e.rows = std::move(m);
    return e;
}

} // namespace

std::vector<std::vector<Rational>> nullspace(const RationalRows& rows, std::size_t columns) {
    const Echelon e = reduce(rows, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        // pivot_i * v_{c_i} + row_i[free] * v_free = 0 with v_free = 1.
        std::vector<Rational> v(columns, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            const auto c = e.pivots[i];
            if (e.rows[i][free] == 0) continue;
            v[c] = Rational(-e.rows[i][free], e.rows[i][c]);
            v[c].canonicalize();
        }
        Integer l = 1;
        for (const auto& x : v)
            if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        IntRow iv(columns);
        for (std::size_t j = 0; j < columns; ++j) iv[j] = v[j].get_num() * (l / v[j].get_den());
        make_primitive(iv);
        std::vector<Rational> out(columns);
        for (std::size_t j = 0; j < columns; ++j) out[j] = Rational(iv[j]);
        basis.push_back(std::move(out));
    }
    return basis;
}

std::size_t rank(const RationalRows& rows, std::size_t columns) { return reduce(rows, columns).rows.size(); }

} // namespace dunkl
