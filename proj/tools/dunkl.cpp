// Command-line front end: monogenic bases, Gegenbauer polynomials, Gram
// matrices and the verification suites.

#include "dunkl/errors.hpp"
#include "dunkl/fault.hpp"
#include "dunkl/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using namespace dunkl;

struct MonogenicArgs {
    std::string roots;
    int degree = 0;
};

struct VerifyArgs {
    std::string suite = "all";
    int max_degree = 4;
    std::vector<std::string> roots;
    std::string fault;
    bool json = false;
};

struct GegenbauerArgs {
    std::string family;
    int t = 0;
    std::string alpha;
    int k = 0;
    std::size_t index = 0;
    std::string roots;
    std::string emit = "json";
};

struct GramArgs {
    std::string family;
    std::string alpha;
    int tmax = 0;
    int kmax = 1;
    bool per_degree = false;
    std::string roots;
    std::string emit = "csv";
};

int cmd_monogenic(const MonogenicArgs& a) {
    if (a.degree < 0) throw InvalidInput("--degree must be non-negative");
    const RootSystem system = load_root_system(a.roots);
    const OperatorContext ctx(system);
    std::cout << monogenic_basis_to_json(system, monogenic_basis(ctx, a.degree)) << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<Suite> suites;
    if (a.suite == "all")
        suites = all_suites();
    else
        suites.push_back(parse_suite(a.suite));
    if (a.max_degree < 0) throw InvalidInput("--max-degree must be non-negative");

    SuiteOptions options;
    options.max_degree = a.max_degree;
    for (const auto& path : a.roots) options.systems.push_back(load_root_system(path));

    std::optional<ScopedFault> fault;
    if (!a.fault.empty()) {
        const auto f = parse_fault(a.fault);
        if (!f) throw InvalidInput("unknown fault '" + a.fault + "'");
        fault.emplace(*f);
    }

    std::vector<SuiteReport> reports;
    bool ok = true;
    for (Suite s : suites) {
        reports.push_back(run_suite(s, options));
        ok = ok && reports.back().ok();
    }
    if (a.json) {
        std::cout << suite_report_to_json(reports) << '\n';
    } else {
        for (const auto& r : reports) {
            std::printf("%-18s %6zu cases  %3zu failures  %.2fs  %s\n", r.suite.c_str(), r.cases_run, r.failures.size(),
                        r.wall_seconds, r.ok() ? "ok" : "FAILED");
            for (const auto& f : r.failures) std::printf("  FAIL %s: %s\n", f.identity.c_str(), f.detail.c_str());
            for (const auto& s : r.skipped) std::printf("  skipped: %s\n", s.c_str());
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_gegenbauer(const GegenbauerArgs& a) {
    const Family family = parse_family(a.family);
    const Rational alpha = parse_rational(a.alpha);
    require_admissible_alpha(family, alpha);
    if (a.t < 0 || a.k < 0) throw InvalidInput("--t and --k must be non-negative");
    if (a.emit != "json" && a.emit != "csv") throw InvalidInput("--emit must be json or csv");
    const RootSystem system = load_root_system(a.roots);
    const OperatorContext ctx(system);
    const MonogenicBasis basis = monogenic_basis(ctx, a.k);
    if (a.index >= basis.basis.size())
        throw InvalidInput("--index out of range (" + std::to_string(basis.basis.size()) + " monogenics of degree " +
                           std::to_string(a.k) + ")");
    const GegenbauerPoly g = gegenbauer(ctx, family, a.t, alpha, basis.basis[a.index]);
    if (a.emit == "json")
        std::cout << gegenbauer_to_json(system, g) << '\n';
    else
        std::cout << gegenbauer_to_csv(g);
    return kExitOk;
}

int cmd_gram(const GramArgs& a) {
    const Family family = parse_family(a.family);
    const Rational alpha = parse_rational(a.alpha);
    require_admissible_alpha(family, alpha);
    if (a.tmax < 0 || a.kmax < 0) throw InvalidInput("--tmax and --kmax must be non-negative");
    if (a.emit != "json" && a.emit != "csv") throw InvalidInput("--emit must be json or csv");
    const RootSystem system = load_root_system(a.roots);
    const OperatorContext ctx(system);
    std::vector<MVPoly> monogenics;
    for (int k = 0; k <= a.kmax; ++k) {
        const MonogenicBasis b = monogenic_basis(ctx, k);
        if (a.per_degree)
            monogenics.push_back(b.basis.front());
        else
            monogenics.insert(monogenics.end(), b.basis.begin(), b.basis.end());
    }
    const GramMatrix g = gram(ctx, family, alpha, a.tmax, monogenics);
    if (a.emit == "json")
        std::cout << gram_to_json(system, g) << '\n';
    else
        std::cout << gram_to_csv(g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dunkl-Clifford computations"};
    app.require_subcommand(1);

    MonogenicArgs mono;
    auto* c_mono = app.add_subcommand("monogenic", "Basis of inner Dunkl monogenics of one degree (JSON)");
    c_mono->add_option("--roots", mono.roots, "Root system JSON file")->required();
    c_mono->add_option("--degree", mono.degree, "Degree k")->required();

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "Run identity verification suites");
    c_ver->add_option("--suite", ver.suite, "operators, gegenbauer-ball, gegenbauer-euclid, orthogonality or all");
    c_ver->add_option("--max-degree", ver.max_degree, "Degree bound for the suites");
    c_ver->add_option("--roots", ver.roots, "Root system JSON file (repeatable; default Z2^2 and A_2)");
    c_ver->add_flag("--json", ver.json, "Print the report as JSON");
    c_ver->add_option("--inject-fault", ver.fault)->group("");

    GegenbauerArgs geg;
    auto* c_geg = app.add_subcommand("gegenbauer", "Clifford-Gegenbauer polynomial on a monogenic basis element");
    c_geg->add_option("--family", geg.family, "ball or euclid")->required();
    c_geg->add_option("--t", geg.t, "Degree t")->required();
    c_geg->add_option("--alpha", geg.alpha, "Parameter alpha as p/q")->required();
    c_geg->add_option("--k", geg.k, "Degree of the monogenic")->required();
    c_geg->add_option("--index", geg.index, "Which basis element of M(k)");
    c_geg->add_option("--roots", geg.roots, "Root system JSON file")->required();
    c_geg->add_option("--emit", geg.emit, "json or csv");

    GramArgs gr;
    auto* c_gram = app.add_subcommand("gram", "Gram matrix of a Gegenbauer family");
    c_gram->add_option("--family", gr.family, "ball or euclid")->required();
    c_gram->add_option("--alpha", gr.alpha, "Parameter alpha as p/q")->required();
    c_gram->add_option("--tmax", gr.tmax, "Largest t")->required();
    c_gram->add_option("--kmax", gr.kmax, "Largest monogenic degree");
    c_gram->add_flag("--per-degree", gr.per_degree, "One monogenic per degree instead of full bases");
    c_gram->add_option("--roots", gr.roots, "Root system JSON file")->required();
    c_gram->add_option("--emit", gr.emit, "csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_mono->parsed()) return cmd_monogenic(mono);
        if (c_ver->parsed()) return cmd_verify(ver);
        if (c_geg->parsed()) return cmd_gegenbauer(geg);
        if (c_gram->parsed()) return cmd_gram(gr);
    } catch (const dunkl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
