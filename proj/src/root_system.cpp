#include "dunkl/root_system.hpp"

#include "dunkl/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dunkl {

namespace {

bool is_zero_vector(const RationalVector& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

// v == lambda * c for some nonzero rational lambda.
bool parallel(const RationalVector& v, const RationalVector& c) {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) return false;
    const Rational lambda = v[lead] / c[lead];
    if (lambda == 0) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (v[i] != lambda * c[i]) return false;
    return true;
}

RationalVector unit_vector(int dim, int i) {
    RationalVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

RationalVector pair_vector(int dim, int i, int j, int sign) {
    RationalVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(j)] = sign;
    return v;
}

Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
}

} // namespace

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vectors of different length");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RationalVector apply_matrix(const RationalMatrix& a, const RationalVector& v) {
    if (static_cast<int>(v.size()) != a.size()) throw DimensionMismatch("matrix-vector size mismatch");
    RationalVector out(v.size(), 0);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) out[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

RationalMatrix reflection_matrix(const RationalVector& alpha) {
    if (is_zero_vector(alpha)) throw PreconditionError("reflection in the zero vector");
    const int n = static_cast<int>(alpha.size());
    const Rational norm2 = dot(alpha, alpha);
    RationalMatrix r = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) -= 2 * alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)] / norm2;
    return r;
}

RootSystem::RootSystem(int dim, std::vector<RationalVector> positive_roots, std::vector<Rational> multiplicities,
                       std::string name)
    : dim_(dim), roots_(std::move(positive_roots)), mult_(std::move(multiplicities)), name_(std::move(name)) {
    if (dim < 1 || dim > kMaxDimension) throw InvalidInput("root system dimension out of range");
    if (roots_.size() != mult_.size())
        throw InvalidInput("expected one multiplicity per positive root (" + std::to_string(roots_.size()) +
                           " roots, " + std::to_string(mult_.size()) + " multiplicities)");
    for (std::size_t a = 0; a < roots_.size(); ++a) {
        if (static_cast<int>(roots_[a].size()) != dim) throw InvalidInput("root of wrong length");
        if (is_zero_vector(roots_[a])) throw InvalidInput("zero root");
        if (mult_[a] < 0) throw InvalidInput("negative multiplicity " + to_string(mult_[a]));
        for (std::size_t b = 0; b < a; ++b)
            if (parallel(roots_[a], roots_[b])) throw InvalidInput("root system is not reduced");
    }
    // Closure under reflections and constancy of k on orbits.
    for (std::size_t a = 0; a < roots_.size(); ++a) {
        const RationalMatrix r = reflection_matrix(roots_[a]);
        for (std::size_t b = 0; b < roots_.size(); ++b) {
            const RationalVector image = apply_matrix(r, roots_[b]);
            std::size_t hit = roots_.size();
            for (std::size_t c = 0; c < roots_.size(); ++c)
                if (parallel(image, roots_[c])) {
                    hit = c;
                    break;
                }
            if (hit == roots_.size()) throw InvalidInput("root set is not closed under its reflections");
            if (mult_[hit] != mult_[b])
                throw InvalidInput("multiplicity is not invariant under the reflection group");
        }
    }
    report_.gamma = 0;
    for (const auto& k : mult_) report_.gamma += k;
    report_.mu = dim_ + 2 * report_.gamma;
    if (report_.mu <= 1) throw InvalidInput("Dunkl dimension mu = m + 2 gamma must exceed 1");
}

bool RootSystem::is_product_type() const {
    for (const auto& r : roots_) {
        int nonzero = 0;
        for (const auto& c : r) nonzero += (c != 0);
        if (nonzero != 1) return false;
    }
    return true;
}

std::vector<Rational> RootSystem::axis_multiplicities() const {
    if (!is_product_type()) throw UnsupportedWeight("weight is not of product type prod |x_i|^{2 k_i}");
    std::vector<Rational> k(static_cast<std::size_t>(dim_), 0);
    for (std::size_t a = 0; a < roots_.size(); ++a)
        for (std::size_t i = 0; i < roots_[a].size(); ++i)
            if (roots_[a][i] != 0) k[i] = mult_[a];
    return k;
}

std::string RootSystem::tag() const {
    std::ostringstream os;
    os << name_ << "[m=" << dim_ << ";k=" << join(mult_) << "]";
    return os.str();
}

Preset parse_preset(std::string_view name) {
    if (name == "Z2" || name == "Z2^m") return Preset::Z2;
    if (name == "A" || name == "A_{m-1}") return Preset::A;
    if (name == "B" || name == "B_m") return Preset::B;
    if (name == "D" || name == "D_m") return Preset::D;
    throw InvalidInput("unknown root system preset '" + std::string(name) + "'");
}

RootSystem make_preset(Preset preset, int dim, const std::vector<Rational>& k) {
    if (dim < 1 || dim > kMaxDimension) throw InvalidInput("preset dimension out of range");
    std::vector<RationalVector> roots;
    std::vector<Rational> mult;
    auto need = [&](std::size_t n, const char* what) {
        if (k.size() != n) throw InvalidInput(std::string(what) + " expects " + std::to_string(n) + " multiplicities");
    };
    switch (preset) {
    case Preset::Z2: {
        if (k.size() != 1 && k.size() != static_cast<std::size_t>(dim))
            throw InvalidInput("Z2^m expects one multiplicity or one per axis");
        for (int i = 0; i < dim; ++i) {
            roots.push_back(unit_vector(dim, i));
            mult.push_back(k.size() == 1 ? k[0] : k[static_cast<std::size_t>(i)]);
        }
        return RootSystem(dim, std::move(roots), std::move(mult), "Z2^" + std::to_string(dim));
    }
    case Preset::A:
        if (dim < 2) throw InvalidInput("A_{m-1} needs m >= 2");
        need(1, "A_{m-1}");
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                roots.push_back(pair_vector(dim, i, j, -1));
                mult.push_back(k[0]);
            }
        return RootSystem(dim, std::move(roots), std::move(mult), "A_" + std::to_string(dim - 1));
    case Preset::B:
        need(2, "B_m");
        for (int i = 0; i < dim; ++i) {
            roots.push_back(unit_vector(dim, i));
            mult.push_back(k[0]);
        }
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                roots.push_back(pair_vector(dim, i, j, -1));
                mult.push_back(k[1]);
                roots.push_back(pair_vector(dim, i, j, 1));
                mult.push_back(k[1]);
            }
        return RootSystem(dim, std::move(roots), std::move(mult), "B_" + std::to_string(dim));
    case Preset::D:
        if (dim < 2) throw InvalidInput("D_m needs m >= 2");
        need(1, "D_m");
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                roots.push_back(pair_vector(dim, i, j, -1));
                mult.push_back(k[0]);
                roots.push_back(pair_vector(dim, i, j, 1));
                mult.push_back(k[0]);
            }
        return RootSystem(dim, std::move(roots), std::move(mult), "D_" + std::to_string(dim));
    }
    throw InvalidInput("unknown preset");
}

WeightFunction weight_function(const RootSystem& system) {
    WeightFunction w;
    w.homogeneity = 0;
    for (std::size_t a = 0; a < system.size(); ++a) {
        const Rational e = 2 * system.multiplicities()[a];
        w.homogeneity += e;
        if (e != 0) w.factors.push_back({system.roots()[a], e});
    }
    return w;
}

RootSystem root_system_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("root system file is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
            throw InvalidInput("root system file needs an integer field \"m\"");
        const int dim = j["m"].get<int>();
        if (!j.contains("multiplicities") || !j["multiplicities"].is_array())
            throw InvalidInput("root system file needs a \"multiplicities\" array");
        std::vector<Rational> mult;
        for (const auto& v : j["multiplicities"]) mult.push_back(json_rational(v));
        if (j.contains("preset")) {
            if (!j["preset"].is_string()) throw InvalidInput("\"preset\" must be a string");
            return make_preset(parse_preset(j["preset"].get<std::string>()), dim, mult);
        }
        if (!j.contains("roots") || !j["roots"].is_array()) throw InvalidInput("root system file needs a \"roots\" array");
        std::vector<RationalVector> roots;
        for (const auto& r : j["roots"]) {
            if (!r.is_array()) throw InvalidInput("each root must be an array of coordinates");
            RationalVector v;
            for (const auto& c : r) v.push_back(json_rational(c));
            roots.push_back(std::move(v));
        }
        std::string name = j.value("name", std::string("custom"));
        return RootSystem(dim, std::move(roots), std::move(mult), name);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed root system file: ") + e.what());
    }
}

RootSystem load_root_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open root system file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return root_system_from_json_text(buf.str());
}

std::string root_system_to_json_text(const RootSystem& system) {
    nlohmann::json j;
    j["m"] = system.dim();
    j["name"] = system.name();
    j["roots"] = nlohmann::json::array();
    for (const auto& r : system.roots()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : r) row.push_back(to_string(c));
        j["roots"].push_back(row);
    }
    j["multiplicities"] = nlohmann::json::array();
    for (const auto& k : system.multiplicities()) j["multiplicities"].push_back(to_string(k));
    return j.dump();
}

} // namespace dunkl
