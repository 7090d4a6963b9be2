#pragma once

#include <optional>
#include <vector>

#include "permlp/rational.hpp"

namespace permlp {

using RationalRow = std::vector<Rational>;
using RationalRows = std::vector<RationalRow>;

// In-place reduced row-echelon form; returns the pivot column of each pivot
// row in order (rank = pivots.size()).
std::vector<int> rref(RationalRows& m);

int rank(RationalRows m);

// Solves the square system a x = b exactly; nullopt when a is singular.
std::optional<RationalRow> solve_square(RationalRows a, RationalRow b);

// Inverse of a square matrix; nullopt when singular.
std::optional<RationalRows> invert(RationalRows a);

}  // namespace permlp
