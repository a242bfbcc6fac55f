#pragma once

#include "dunkl/rational.hpp"

#include <vector>

namespace dunkl {

/// Dense rational matrix stored as rows, used for exact kernel computations.
using RationalRows = std::vector<std::vector<Rational>>;

/// Basis of {v : A v = 0}. Rows are scaled to integers and reduced by
/// fraction-free elimination (each update is pivot * row - entry * pivot_row,
/// followed by division by the row content), so no intermediate fractions
/// appear. Returned vectors are primitive integer vectors, one per free
/// column, in column order.
std::vector<std::vector<Rational>> nullspace(const RationalRows& rows, std::size_t columns);

std::size_t rank(const RationalRows& rows, std::size_t columns);

} // namespace dunkl
