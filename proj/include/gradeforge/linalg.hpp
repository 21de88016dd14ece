#pragma once

#include <optional>
#include <vector>

#include "gradeforge/rational.hpp"
#include "gradeforge/unipoly.hpp"

namespace gradeforge {

using PolyMatrix = std::vector<std::vector<UniPoly>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/**
 * Left kernel of a polynomial matrix by fraction-free (Bareiss) elimination
 * of [M | I], columns eliminated left to right.
 *
 * Returns a nonzero v with v^T M = 0, or nullopt when the rows are
 * independent. The vector is content-free: its entries share no polynomial
 * factor, have integer coefficients with gcd 1, and the last nonzero entry
 * has a positive leading coefficient.
 */
std::optional<std::vector<UniPoly>> fraction_free_left_kernel(const PolyMatrix& m);

/// Divides a polynomial vector by its content and fixes the sign as above.
std::vector<UniPoly> normalize_content(std::vector<UniPoly> v);

/// Basis of {x : A x = 0} from the reduced row echelon form, one vector per
/// free column in increasing column order.
std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix a, std::size_t cols);

}  // namespace gradeforge
