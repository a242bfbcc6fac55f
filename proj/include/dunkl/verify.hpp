#pragma once

#include "dunkl/root_system.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

enum class Suite { operators, gegenbauer_ball, gegenbauer_euclid, orthogonality };

std::string_view suite_name(Suite s);
/// Throws InvalidInput for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SuiteFailure {
    std::string identity;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t cases_run = 0;
    std::vector<SuiteFailure> failures;
    double wall_seconds = 0;
    /// Checks that could not run for a system (e.g. ball integrals on a
    /// non-product weight), one line each.
    std::vector<std::string> skipped;

    bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
    /// Empty means the defaults: Z2^2 with k = (1/2, 1/3) and A_2 with k = 1/2.
    std::vector<RootSystem> systems;
    /// Operator suite: polynomial degree bound. Gegenbauer suites: t bound.
    /// Orthogonality: Gram t bound and monogenic degree bound.
    int max_degree = 4;
    std::vector<Rational> alphas{Rational(1, 2), Rational(3, 4), Rational(7, 5)};
    /// Monogenic degrees used by the Gegenbauer suites.
    int k_max = 2;
    Rational ball_alpha{1, 2};
    Rational euclid_alpha{7, 5};
};

std::vector<RootSystem> default_verification_systems();

SuiteReport run_suite(Suite suite, const SuiteOptions& options);

} // namespace dunkl
