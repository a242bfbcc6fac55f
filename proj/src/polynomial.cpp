#include "dunkl/polynomial.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dunkl {

namespace {

void require_same_dim(int a, int b) {
    if (a != b)
        throw DimensionMismatch("polynomials of dimension " + std::to_string(a) + " and " + std::to_string(b));
}

Monomial unit(int dim, int axis) {
    Monomial m(dim);
    m[axis] = 1;
    return m;
}

// Appends exponent vectors of degree `remaining` for axes >= axis, larger
// leading exponents first.
void enumerate(Monomial& cur, int axis, unsigned remaining, std::vector<Monomial>& out) {
    if (axis == cur.dim() - 1) {
        cur[axis] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[axis] = e;
        enumerate(cur, axis + 1, remaining - e, out);
    }
    cur[axis] = 0;
}

// Single nonzero per row: x_i -> c_i x_{target_i}.
struct MonomialMap {
    std::vector<int> target;
    std::vector<Rational> scale;
};

bool as_monomial_map(const RationalMatrix& a, MonomialMap& out) {
    const int n = a.size();
    out.target.assign(static_cast<std::size_t>(n), -1);
    out.scale.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a(i, j) == 0) continue;
            if (out.target[static_cast<std::size_t>(i)] != -1) return false;
            out.target[static_cast<std::size_t>(i)] = j;
            out.scale[static_cast<std::size_t>(i)] = a(i, j);
        }
    }
    return true;
}

Rational rational_pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

// ---------------------------------------------------------------- Monomial

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

Monomial Monomial::times(const Monomial& other) const {
    require_same_dim(dim(), other.dim());
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

std::vector<Monomial> monomials_of_degree(int dim, unsigned degree) {
    std::vector<Monomial> out;
    Monomial cur(dim);
    enumerate(cur, 0, degree, out);
    return out;
}

// ---------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_dim(a.size(), b.size());
    const int n = a.size();
    RationalMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Rational determinant(RationalMatrix a) {
    const int n = a.size();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

// ------------------------------------------------------------------ MVPoly

MVPoly::MVPoly(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDimension) throw InvalidInput("polynomial dimension out of range");
}

MVPoly MVPoly::constant(const CliffordElement& c) {
    MVPoly p(c.dim());
    p.add_term(Monomial(c.dim()), c);
    return p;
}

MVPoly MVPoly::scalar(int dim, const Rational& value) { return constant(CliffordElement::scalar(dim, value)); }

MVPoly MVPoly::term(const Monomial& mono, const CliffordElement& c) {
    MVPoly p(c.dim());
    p.add_term(mono, c);
    return p;
}

MVPoly MVPoly::variable(int dim, int axis) {
    if (axis < 0 || axis >= dim) throw InvalidInput("variable index out of range");
    return term(unit(dim, axis), CliffordElement::scalar(dim, 1));
}

MVPoly MVPoly::vector_variable(int dim) {
    MVPoly p(dim);
    for (int j = 0; j < dim; ++j) p.add_term(unit(dim, j), CliffordElement::generator(dim, j));
    return p;
}

MVPoly MVPoly::norm_squared(int dim) {
    MVPoly p(dim);
    for (int j = 0; j < dim; ++j) {
        Monomial m(dim);
        m[j] = 2;
        p.add_term(m, CliffordElement::scalar(dim, 1));
    }
    return p;
}

MVPoly MVPoly::linear_form(std::span<const Rational> alpha) {
    const int dim = static_cast<int>(alpha.size());
    MVPoly p(dim);
    for (int j = 0; j < dim; ++j) p.add_term(unit(dim, j), CliffordElement::scalar(dim, alpha[static_cast<std::size_t>(j)]));
    return p;
}

int MVPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

int MVPoly::lowest_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

bool MVPoly::is_homogeneous() const { return degree() == lowest_degree(); }

bool MVPoly::is_scalar() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_scalar(); });
}

CliffordElement MVPoly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? CliffordElement(dim_) : it->second;
}

void MVPoly::add_term(const Monomial& mono, const CliffordElement& c) {
    require_same_dim(dim_, mono.dim());
    require_same_dim(dim_, c.dim());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MVPoly::add_scaled(const MVPoly& other, const Rational& s) {
    require_same_dim(dim_, other.dim_);
    if (s == 0) return;
    for (const auto& [mono, c] : other.terms_) add_term(mono, c * s);
}

MVPoly& MVPoly::operator+=(const MVPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& other) {
    require_same_dim(dim_, other.dim_);
    for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
    return *this;
}

MVPoly& MVPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
}

MVPoly MVPoly::left_mul(const CliffordElement& c) const {
    MVPoly out(dim_);
    for (const auto& [mono, v] : terms_) out.add_term(mono, c * v);
    return out;
}

MVPoly MVPoly::right_mul(const CliffordElement& c) const {
    MVPoly out(dim_);
    for (const auto& [mono, v] : terms_) out.add_term(mono, v * c);
    return out;
}

MVPoly MVPoly::partial(int axis) const {
    MVPoly out(dim_);
    for (const auto& [mono, c] : terms_) {
        const unsigned e = mono[axis];
        if (e == 0) continue;
        Monomial m = mono;
        m[axis] = e - 1;
        out.add_term(m, c * Rational(e));
    }
    return out;
}

MVPoly MVPoly::conjugated() const {
    MVPoly out(dim_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, conjugate(c));
    return out;
}

MVPoly MVPoly::homogeneous_component(unsigned degree) const {
    MVPoly out(dim_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree() == degree) out.terms_.emplace(mono, c);
    return out;
}

MVPoly MVPoly::blade_component(Blade mask) const {
    MVPoly out(dim_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, CliffordElement::scalar(dim_, c.coeff(mask)));
    return out;
}

CliffordElement MVPoly::evaluate(std::span<const Rational> point) const {
    require_same_dim(dim_, static_cast<int>(point.size()));
    CliffordElement out(dim_);
    for (const auto& [mono, c] : terms_) {
        Rational v(1);
        for (int i = 0; i < dim_; ++i) v *= rational_pow(point[static_cast<std::size_t>(i)], mono[i]);
        out += c * v;
    }
    return out;
}

MVPoly poly_add(const MVPoly& a, const MVPoly& b) { return a + b; }

MVPoly poly_mul(const MVPoly& a, const MVPoly& b) {
    require_same_dim(a.dim(), b.dim());
    MVPoly out(a.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma.times(mb), ca * cb);
    return out;
}

MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
MVPoly operator-(MVPoly a) { return a *= Rational(-1); }
MVPoly operator*(const MVPoly& a, const MVPoly& b) { return poly_mul(a, b); }
MVPoly operator*(MVPoly a, const Rational& s) { return a *= s; }
MVPoly operator*(const Rational& s, MVPoly a) { return a *= s; }

MVPoly power(const MVPoly& p, unsigned n) {
    MVPoly out = MVPoly::scalar(p.dim(), 1);
    for (unsigned i = 0; i < n; ++i) out = out * p;
    return out;
}

MVPoly substitute_linear(const MVPoly& p, const RationalMatrix& a) {
    require_same_dim(p.dim(), a.size());
    const int dim = p.dim();
    MVPoly out(dim);

    MonomialMap map;
    if (as_monomial_map(a, map)) {
        for (const auto& [mono, c] : p.terms()) {
            Monomial image(dim);
            Rational s(1);
            bool vanishes = false;
            for (int i = 0; i < dim; ++i) {
                const unsigned e = mono[i];
                if (e == 0) continue;
                const int t = map.target[static_cast<std::size_t>(i)];
                if (t < 0) {
                    vanishes = true;
                    break;
                }
                image[t] += e;
                s *= rational_pow(map.scale[static_cast<std::size_t>(i)], e);
            }
            if (!vanishes) out.add_term(image, c * s);
        }
        return out;
    }

    // General matrix: expand powers of the image linear forms, memoized per axis.
    std::vector<std::vector<MVPoly>> powers(static_cast<std::size_t>(dim));
    auto image_power = [&](int i, unsigned e) -> const MVPoly& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) {
            std::vector<Rational> row(static_cast<std::size_t>(dim));
            for (int j = 0; j < dim; ++j) row[static_cast<std::size_t>(j)] = a(i, j);
            cache.push_back(MVPoly::scalar(dim, 1));
            cache.push_back(MVPoly::linear_form(row));
        }
        while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    for (const auto& [mono, c] : p.terms()) {
        MVPoly img = MVPoly::constant(c);
        for (int i = 0; i < dim; ++i)
            if (mono[i] > 0) img = img * image_power(i, mono[i]);
        out += img;
    }
    return out;
}

MVPoly exact_div_linear(const MVPoly& p, std::span<const Rational> alpha) {
    require_same_dim(p.dim(), static_cast<int>(alpha.size()));
    const int dim = p.dim();
    int pivot = -1;
    for (int j = 0; j < dim; ++j)
        if (alpha[static_cast<std::size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) throw PreconditionError("division by the zero linear form");

    const Rational& lead = alpha[static_cast<std::size_t>(pivot)];
    MVPoly rem = p;
    MVPoly quotient(dim);
    while (!rem.is_zero()) {
        auto best = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
            if (it->first[pivot] > best->first[pivot]) best = it;
        if (best->first[pivot] == 0)
            throw NotDivisible("polynomial is not divisible by the linear form <alpha, x>");
        Monomial qm = best->first;
        qm[pivot] -= 1;
        const CliffordElement qc = best->second * (Rational(1) / lead);
        quotient.add_term(qm, qc);
        for (int j = 0; j < dim; ++j) {
            const Rational& aj = alpha[static_cast<std::size_t>(j)];
            if (aj == 0) continue;
            Monomial m = qm;
            m[j] += 1;
            rem.add_term(m, qc * (-aj));
        }
    }
    return quotient;
}

bool try_div_norm_squared(const MVPoly& p, MVPoly& quotient) {
    const int dim = p.dim();
    MVPoly rem = p;
    MVPoly q(dim);
    while (!rem.is_zero()) {
        auto best = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
            if (it->first[0] > best->first[0]) best = it;
        if (best->first[0] < 2) return false;
        Monomial qm = best->first;
        qm[0] -= 2;
        const CliffordElement qc = best->second;
        q.add_term(qm, qc);
        for (int j = 0; j < dim; ++j) {
            Monomial m = qm;
            m[j] += 2;
            rem.add_term(m, -qc);
        }
    }
    quotient = std::move(q);
    return true;
}

MVPoly homogeneous_component(const MVPoly& p, unsigned degree) { return p.homogeneous_component(degree); }

std::string to_string(const MVPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        const bool bare = mono.degree() == 0;
        const std::string cs = to_string(c);
        const bool simple = c.terms().size() == 1;
        if (bare) {
            os << (simple ? cs : "(" + cs + ")");
        } else {
            if (!(c.is_scalar() && c.scalar_part() == 1)) os << (simple ? cs : "(" + cs + ")") << '*';
            bool firstvar = true;
            for (int i = 0; i < mono.dim(); ++i) {
                if (mono[i] == 0) continue;
                if (!firstvar) os << '*';
                firstvar = false;
                os << 'x' << (i + 1);
                if (mono[i] > 1) os << '^' << mono[i];
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------- RadialScaledFunction

RadialScaledFunction::RadialScaledFunction(int dim) : dim_(dim) {}

RadialScaledFunction RadialScaledFunction::from_poly(const MVPoly& p) { return scaled(0, p); }

RadialScaledFunction RadialScaledFunction::scaled(const Rational& q, const MVPoly& p) {
    RadialScaledFunction f(p.dim());
    f.add_part(q, p);
    return f;
}

bool RadialScaledFunction::is_zero() const { return normalized().parts_.empty(); }

void RadialScaledFunction::add_part(const Rational& q, const MVPoly& p) {
    require_same_dim(dim_, p.dim());
    if (p.is_zero()) return;
    for (auto it = parts_.begin(); it != parts_.end(); ++it) {
        if (it->q != q) continue;
        it->poly += p;
        if (it->poly.is_zero()) parts_.erase(it);
        return;
    }
    parts_.push_back({q, p});
}

RadialScaledFunction RadialScaledFunction::normalized() const {
    // Group exponents by their class modulo the integers.
    std::vector<std::vector<const Part*>> groups;
    for (const auto& part : parts_) {
        bool placed = false;
        for (auto& g : groups)
            if (is_integer(Rational(g.front()->q - part.q))) {
                g.push_back(&part);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({&part});
    }

    RadialScaledFunction out(dim_);
    const MVPoly r2 = MVPoly::norm_squared(dim_);
    for (const auto& g : groups) {
        Rational qmin = g.front()->q;
        for (const Part* part : g) qmin = std::min(qmin, part->q);
        MVPoly sum(dim_);
        for (const Part* part : g) sum += power(r2, static_cast<unsigned>(to_long(Rational(part->q - qmin)))) * part->poly;
        if (sum.is_zero()) continue;
        MVPoly quotient(dim_);
        while (try_div_norm_squared(sum, quotient)) {
            sum = std::move(quotient);
            quotient = MVPoly(dim_);
            qmin += 1;
        }
        out.parts_.push_back({qmin, std::move(sum)});
    }
    std::sort(out.parts_.begin(), out.parts_.end(), [](const Part& a, const Part& b) { return a.q < b.q; });
    return out;
}

Rational RadialScaledFunction::homogeneity_degree() const {
    const RadialScaledFunction n = normalized();
    if (n.parts_.empty()) throw PreconditionError("zero function has no homogeneity degree");
    Rational deg;
    bool first = true;
    for (const auto& part : n.parts_) {
        if (!part.poly.is_homogeneous()) throw PreconditionError("function is not homogeneous");
        Rational d = 2 * part.q + part.poly.degree();
        if (!first && d != deg) throw PreconditionError("function is not homogeneous");
        deg = d;
        first = false;
    }
    return deg;
}

RadialScaledFunction RadialScaledFunction::times_radial(const Rational& q) const {
    RadialScaledFunction out(dim_);
    for (const auto& part : parts_) out.add_part(part.q + q, part.poly);
    return out;
}

RadialScaledFunction RadialScaledFunction::left_mul(const MVPoly& p) const {
    RadialScaledFunction out(dim_);
    for (const auto& part : parts_) out.add_part(part.q, p * part.poly);
    return out;
}

RadialScaledFunction RadialScaledFunction::operator+(const RadialScaledFunction& other) const {
    RadialScaledFunction out = *this;
    for (const auto& part : other.parts_) out.add_part(part.q, part.poly);
    return out;
}

RadialScaledFunction RadialScaledFunction::operator-(const RadialScaledFunction& other) const {
    RadialScaledFunction out = *this;
    for (const auto& part : other.parts_) out.add_part(part.q, -part.poly);
    return out;
}

MVPoly RadialScaledFunction::to_poly() const {
    const RadialScaledFunction n = normalized();
    if (n.parts_.empty()) return MVPoly(dim_);
    if (n.parts_.size() != 1 || !is_integer(n.parts_[0].q) || n.parts_[0].q < 0)
        throw PreconditionError("radial-scaled function is not a polynomial");
    return power(MVPoly::norm_squared(dim_), static_cast<unsigned>(to_long(n.parts_[0].q))) * n.parts_[0].poly;
}

bool operator==(const RadialScaledFunction& a, const RadialScaledFunction& b) {
    if (a.dim_ != b.dim_) return false;
    return (a - b).is_zero();
}

std::string to_string(const RadialScaledFunction& f) {
    const RadialScaledFunction n = f.normalized();
    if (n.parts().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& part : n.parts()) {
        if (!first) os << " + ";
        first = false;
        os << "r^(" << to_string(Rational(2 * part.q)) << ")*[" << to_string(part.poly) << "]";
    }
    return os.str();
}

} // namespace dunkl
