#include "dunkl/serialize.hpp"

#include "dunkl/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace dunkl {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const MVPoly& p) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = p.dim();
    j["terms"] = Json::array();
    for (const auto& [mono, c] : p.terms())
        for (const auto& [blade, v] : c.terms()) {
            Json t;
            t["exp"] = mono.exponents();
            t["blade"] = blade;
            t["coeff"] = to_string(v);
            j["terms"].push_back(std::move(t));
        }
    return j;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const std::optional<CliffordClassValue>& v) {
    if (!v) return "n/a";
    return to_string(*v);
}

} // namespace

std::string polynomial_to_json(const MVPoly& p, int indent) { return poly_json(p).dump(indent); }

MVPoly polynomial_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) throw InvalidInput("unsupported schema_version");
        const int m = j.at("m").get<int>();
        if (m < 1 || m > kMaxDimension) throw InvalidInput("polynomial dimension out of range");
        MVPoly p(m);
        for (const auto& t : j.at("terms")) {
            const auto exps = t.at("exp").get<std::vector<unsigned>>();
            if (static_cast<int>(exps.size()) != m) throw InvalidInput("exponent vector of wrong length");
            const Blade blade = t.at("blade").get<Blade>();
            if (blade >= (Blade{1} << m)) throw InvalidInput("blade mask out of range");
            p.add_term(Monomial(exps), CliffordElement::blade(m, blade, parse_rational(t.at("coeff").get<std::string>())));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string monogenic_basis_to_json(const RootSystem& system, const MonogenicBasis& basis) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "monogenic_basis";
    j["root_system"] = system.tag();
    j["m"] = system.dim();
    j["mu"] = to_string(system.mu());
    j["degree"] = basis.degree;
    j["dimension"] = basis.basis.size();
    j["basis"] = Json::array();
    for (const auto& p : basis.basis) j["basis"].push_back(poly_json(p));
    return j.dump(2);
}

std::string gegenbauer_to_json(const RootSystem& system, const GegenbauerPoly& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "gegenbauer";
    j["family"] = std::string(family_name(g.family));
    j["root_system"] = system.tag();
    j["t"] = g.t;
    j["alpha"] = to_string(g.alpha);
    j["k"] = g.k;
    j["mu"] = to_string(g.mu);
    j["coefficients"] = Json::array();
    for (const auto& a : g.coeffs) j["coefficients"].push_back(to_string(a));
    j["monogenic"] = poly_json(g.monogenic);
    j["polynomial"] = poly_json(g.expand());
    return j.dump(2);
}

std::string gegenbauer_to_csv(const GegenbauerPoly& g) {
    std::ostringstream os;
    os << "power,coefficient\n";
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) os << j << ',' << to_string(g.coeffs[j]) << '\n';
    return os.str();
}

std::string gram_label(const GramLabel& l) {
    return "t=" + std::to_string(l.t) + ";k=" + std::to_string(l.k) + ";M=" + std::to_string(l.monogenic);
}

std::string gram_to_csv(const GramMatrix& g) {
    std::ostringstream os;
    os << "label";
    for (const auto& l : g.labels) os << ',' << csv_cell(gram_label(l));
    os << '\n';
    for (std::size_t i = 0; i < g.size(); ++i) {
        os << csv_cell(gram_label(g.labels[i]));
        for (std::size_t j = 0; j < g.size(); ++j) os << ',' << csv_cell(cell_text(g.entries[i][j]));
        os << '\n';
    }
    return os.str();
}

std::string gram_to_json(const RootSystem& system, const GramMatrix& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "gram";
    j["family"] = std::string(family_name(g.family));
    j["root_system"] = system.tag();
    j["alpha"] = to_string(g.alpha);
    j["labels"] = Json::array();
    for (const auto& l : g.labels) j["labels"].push_back({{"t", l.t}, {"k", l.k}, {"monogenic", l.monogenic}});
    j["entries"] = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& cell : row) {
            if (!cell) {
                r.push_back(nullptr);
                continue;
            }
            Json c;
            c["base"] = cell->is_zero() ? Json(nullptr) : Json(cell->tag);
            c["blades"] = Json::array();
            for (const auto& [blade, v] : cell->value.terms()) c["blades"].push_back({{"blade", blade}, {"ratio", to_string(v)}});
            r.push_back(std::move(c));
        }
        j["entries"].push_back(std::move(r));
    }
    return j.dump(2);
}

std::string suite_report_to_json(const std::vector<SuiteReport>& reports) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "verification";
    j["suites"] = Json::array();
    for (const auto& r : reports) {
        Json s;
        s["suite"] = r.suite;
        s["cases_run"] = r.cases_run;
        s["wall_seconds"] = r.wall_seconds;
        s["failures"] = Json::array();
        for (const auto& f : r.failures) s["failures"].push_back({{"identity", f.identity}, {"detail", f.detail}});
        s["skipped"] = r.skipped;
        j["suites"].push_back(std::move(s));
    }
    return j.dump(2);
}

} // namespace dunkl
