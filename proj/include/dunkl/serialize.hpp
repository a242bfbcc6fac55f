#pragma once

#include "dunkl/gegenbauer.hpp"
#include "dunkl/integration.hpp"
#include "dunkl/monogenic.hpp"
#include "dunkl/verify.hpp"

#include <string>

namespace dunkl {

inline constexpr int kSchemaVersion = 1;

/// {"schema_version":1,"m":M,"terms":[{"exp":[...],"blade":B,"coeff":"p/q"}, ...]}
/// Terms in graded order, blades ascending within a monomial.
std::string polynomial_to_json(const MVPoly& p, int indent = 2);
/// Inverse of polynomial_to_json; throws InvalidInput on malformed documents.
MVPoly polynomial_from_json(const std::string& text);

std::string monogenic_basis_to_json(const RootSystem& system, const MonogenicBasis& basis);

std::string gegenbauer_to_json(const RootSystem& system, const GegenbauerPoly& g);
/// Columns: power,coefficient (one row per a_j).
std::string gegenbauer_to_csv(const GegenbauerPoly& g);

/// Square table with a label column; cells "p/q × BASE[tag]", "0" or "n/a".
std::string gram_to_csv(const GramMatrix& g);
std::string gram_to_json(const RootSystem& system, const GramMatrix& g);

std::string suite_report_to_json(const std::vector<SuiteReport>& reports);

std::string gram_label(const GramLabel& l);

} // namespace dunkl
