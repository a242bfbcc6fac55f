#pragma once

#include "dunkl/operators.hpp"

#include <vector>

namespace dunkl {

/// Basis of the left solid inner Dunkl monogenics of degree k: homogeneous
/// Clifford-valued polynomials with D_k[M] = 0. Elements are not normalized.
struct MonogenicBasis {
    int degree = 0;
    std::vector<MVPoly> basis;
};

/// Basis of scalar homogeneous Dunkl harmonics (Delta_k[H] = 0).
struct HarmonicBasis {
    int degree = 0;
    std::vector<MVPoly> basis;
};

MonogenicBasis monogenic_basis(const OperatorContext& ctx, int degree);
HarmonicBasis harmonic_basis(const OperatorContext& ctx, int degree);

/// dim P_k for scalar polynomials in m variables: C(k+m-1, m-1); 0 for k < 0.
std::size_t scalar_space_dimension(int dim, int degree);

bool is_monogenic(const OperatorContext& ctx, const MVPoly& f);
bool is_harmonic(const OperatorContext& ctx, const MVPoly& f);

/// c with D_k[x^s M] = c x^{s-1} M for M in M(k):
/// -s for even s, -(s-1+2k+mu) for odd s.
Rational dirac_power_constant(int s, int degree, const Rational& mu);

/// Eigenvalue of Gamma_k on x^j M(k - j) inside P_k:
/// -(k - j) for even j, k - j + mu - 1 for odd j.
Rational fischer_eigenvalue(const OperatorContext& ctx, int degree, int j);

/// Component of p in x^i M(k - i) for homogeneous p of degree k, built as a
/// product of shifted Gamma operators that annihilates every other summand
/// of the Fischer decomposition. Throws PreconditionError for
/// non-homogeneous p or i outside [0, k].
MVPoly fischer_project(const OperatorContext& ctx, int i, const MVPoly& p);

/// Q_k = x |x|^{-(mu+2k)} M_k for an inner monogenic M_k of degree k.
RadialScaledFunction kelvin_invert(const OperatorContext& ctx, const MVPoly& monogenic);

/// x |x|^{2k+mu-2} Q_k for an outer monogenic of order k; lands in M^+(k).
RadialScaledFunction kelvin_restore(const OperatorContext& ctx, const RadialScaledFunction& outer, int order);

} // namespace dunkl
