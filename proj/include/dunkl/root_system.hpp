#pragma once

#include "dunkl/polynomial.hpp"
#include "dunkl/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

using RationalVector = std::vector<Rational>;

struct MultiplicityReport {
    Rational gamma;
    Rational mu;
};

/// One factor |<x, alpha>|^{exponent} of the weight w_k.
struct WeightFactor {
    RationalVector root;
    Rational exponent;
};

struct WeightFunction {
    std::vector<WeightFactor> factors;
    /// 2 gamma
    Rational homogeneity;
};

/// Positive roots with a multiplicity per root.
///
/// Roots are stored unnormalized: every Dunkl operator term
/// k_a a_i (f - f o r_a) / <a, x> is invariant under a -> c a, so rational
/// coordinates give the same operators as the <a, a> = 2 normalization while
/// keeping everything exact.
///
/// Construction validates: nonzero roots of length m, no root a multiple of
/// another, closure of the root set under its own reflections, k_a >= 0,
/// k constant on reflection orbits and mu = m + 2 gamma > 1.
class RootSystem {
public:
    RootSystem(int dim, std::vector<RationalVector> positive_roots, std::vector<Rational> multiplicities,
               std::string name = "custom");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<RationalVector>& roots() const { return roots_; }
    const std::vector<Rational>& multiplicities() const { return mult_; }
    std::size_t size() const { return roots_.size(); }

    Rational gamma() const { return report_.gamma; }
    Rational mu() const { return report_.mu; }
    const MultiplicityReport& report() const { return report_; }

    /// True when every positive root is a multiple of a coordinate vector,
    /// so w_k is the product weight prod |x_i|^{2 k_i}.
    bool is_product_type() const;
    /// For product-type systems: k_i attached to axis i (0 if no root).
    std::vector<Rational> axis_multiplicities() const;

    /// Stable text tag, e.g. "Z2^2[k=1/2,1/3]".
    std::string tag() const;

private:
    int dim_;
    std::vector<RationalVector> roots_;
    std::vector<Rational> mult_;
    std::string name_;
    MultiplicityReport report_;
};

enum class Preset { Z2, A, B, D };

/// Z2 (roots e_i, one k per axis or one shared k), A (e_i - e_j in R^m, one
/// k), B (short e_i and long e_i +- e_j, k = {short, long}), D (e_i +- e_j,
/// one k).
RootSystem make_preset(Preset preset, int dim, const std::vector<Rational>& multiplicities);
Preset parse_preset(std::string_view name);

/// r_alpha(x) = x - 2 <alpha, x> / |alpha|^2 alpha. Throws PreconditionError for alpha = 0.
RationalMatrix reflection_matrix(const RationalVector& alpha);
RationalVector apply_matrix(const RationalMatrix& a, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

WeightFunction weight_function(const RootSystem& system);

/// Reads {"m":2, "roots":[[1,0],[0,1]], "multiplicities":["1/2","1/3"]}
/// or {"preset":"B", "m":3, "multiplicities":["1","1/2"]}.
/// Coordinates may be JSON integers or "p/q" strings. Throws InvalidInput.
RootSystem root_system_from_json_text(const std::string& text);
RootSystem load_root_system(const std::string& path);
std::string root_system_to_json_text(const RootSystem& system);

} // namespace dunkl
